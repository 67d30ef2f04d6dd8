#ifndef GANZ_RATFUNC_HPP
#define GANZ_RATFUNC_HPP

#include <string>
#include <vector>

#include "ganz/mpoly.hpp"

namespace ganz {

// Rational function num/den over a coefficient field C.  Denominator
// nonzero; no multivariate gcd is attempted, growth is bounded by scalar
// content removal (denominator made monic at its leading term).  Equality
// is decided by cross-multiplication.
template <class C>
class RationalFunction {
public:
    explicit RationalFunction(int nvars = 0)
        : num_(nvars), den_(MPoly<C>::constant(nvars, C(1))) {}
    RationalFunction(const MPoly<C>& p)  // NOLINT(google-explicit-constructor)
        : num_(p), den_(MPoly<C>::constant(p.nvars(), C(1))) {
        normalize();
    }
    RationalFunction(MPoly<C> num, MPoly<C> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction constant(int nvars, const C& c) {
        return RationalFunction(MPoly<C>::constant(nvars, c));
    }
    static RationalFunction variable(int nvars, int i) {
        return RationalFunction(MPoly<C>::variable(nvars, i));
    }

    const MPoly<C>& num() const { return num_; }
    const MPoly<C>& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool zero() const { return num_.zero(); }
    bool is_polynomial() const { return den_ == MPoly<C>::constant(num_.nvars(), C(1)); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.zero()) throw DivisionByZero();
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction pow(long e) const {
        if (e < 0) {
            if (zero()) throw DivisionByZero();
            return RationalFunction(den_, num_).pow(-e);
        }
        RationalFunction r = constant(nvars(), C(1));
        for (long i = 0; i < e; ++i) r *= *this;
        return r;
    }

    RationalFunction extended(int nvars) const {
        return RationalFunction(num_.extended(nvars), den_.extended(nvars));
    }

private:
    MPoly<C> num_, den_;

    void normalize() {
        if (den_.zero()) throw DivisionByZero();
        if (num_.zero()) {
            den_ = MPoly<C>::constant(num_.nvars(), C(1));
            return;
        }
        C lead = den_.leading_coefficient();
        if (!(lead == C(1))) {
            num_ = num_.divided_by(lead);
            den_ = den_.divided_by(lead);
        }
    }
};

using RatFunc = RationalFunction<KElem>;
using QFunc = RationalFunction<Rat>;  // residue-field elements over Q

template <class C>
std::string expr_string_rf(const RationalFunction<C>& f, Prec need, const char* var_prefix) {
    if (f.is_polynomial()) return expr_string_poly(f.num(), need, var_prefix);
    std::string n = expr_string_poly(f.num(), Prec::Product, var_prefix);
    std::string d = expr_string_poly(f.den(), Prec::Power, var_prefix);
    return wrap_if(n + "/" + d, Prec::Product, need);
}

inline std::string expr_string(const RatFunc& f, Prec need = Prec::Sum) {
    return expr_string_rf(f, need, "x");
}
inline std::string expr_string(const QFunc& f, Prec need = Prec::Sum) {
    return expr_string_rf(f, need, "y");
}

// ---- evaluation ----------------------------------------------------------

enum class EvalStatus { Defined, NotDefined, Indet };

struct EvalOutcome {
    EvalStatus status;
    KElem value;  // meaningful only when Defined

    bool defined() const { return status == EvalStatus::Defined; }
};

inline EvalOutcome try_eval(const RatFunc& f, const Point& b) {
    KElem dv = eval(f.den(), b);
    KElem nv = eval(f.num(), b);
    if (!dv.is_zero()) return {EvalStatus::Defined, nv / dv};
    if (nv.is_zero()) return {EvalStatus::Indet, KElem()};
    return {EvalStatus::NotDefined, KElem()};
}

inline KElem eval(const RatFunc& f, const Point& b) {
    EvalOutcome r = try_eval(f, b);
    switch (r.status) {
        case EvalStatus::Defined: return r.value;
        case EvalStatus::Indet: throw Indeterminate();
        default: throw NotDefinedAt();
    }
}

// ---- restriction to a line -----------------------------------------------

// f(b + t*d) as a ratio of polynomials in t over K
struct LineRestriction {
    UPoly<KElem> num, den;
};

template <class C>
UPoly<KElem> restrict_poly_to_line(const MPoly<C>& p, const Point& b, const Point& d) {
    std::vector<UPoly<KElem>> pt;
    pt.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        UPoly<KElem> lin = UPoly<KElem>(b[i]) + UPoly<KElem>::monomial(d[i], 1);
        pt.push_back(lin);
    }
    return p.template eval_generic<UPoly<KElem>>(pt);
}

inline LineRestriction subst_line(const RatFunc& f, const Point& b, const Point& d) {
    if (b.size() != static_cast<std::size_t>(f.nvars()) || d.size() != b.size())
        throw std::invalid_argument("point arity mismatch");
    bool dz = true;
    for (const auto& c : d.coords)
        if (!c.is_zero()) dz = false;
    if (dz) throw std::invalid_argument("direction must be nonzero");
    LineRestriction r{restrict_poly_to_line(f.num(), b, d), restrict_poly_to_line(f.den(), b, d)};
    if (r.den.zero()) throw LineInDenominatorLocus();
    return r;
}

} // namespace ganz

#endif
