#ifndef GANZ_RATIONAL_HPP
#define GANZ_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "ganz/errors.hpp"
#include "ganz/printing.hpp"

namespace ganz {

// The residue field of K lives here: exact rationals, canonical
// (coprime, positive denominator) courtesy of GMP.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline Prec rat_prec(const Rat& q) {
    return sgn(q) < 0 ? Prec::Unary : Prec::Atom;
}

// "3/4" and "-3/4" both read back as a single grammar literal.
inline std::string expr_string(const Rat& q, Prec need = Prec::Sum) {
    return wrap_if(q.get_str(), rat_prec(q), need);
}

} // namespace ganz

#endif
