#ifndef GANZ_KELEM_HPP
#define GANZ_KELEM_HPP

#include <string>

#include "ganz/errors.hpp"
#include "ganz/printing.hpp"
#include "ganz/rational.hpp"
#include "ganz/upoly.hpp"
#include "ganz/value_group.hpp"

namespace ganz {

using EpsPoly = UPoly<Rat>;

// Element of the base ordered valued field K = Q(eps): a ratio of
// polynomials in eps over Q.  eps is a positive infinitesimal, so the
// sign of an element is the sign of its lowest-order coefficient and the
// valuation is ord(num) - ord(den).
//
// Representation is reduced on construction (univariate gcd, denominator
// scaled so its lowest nonzero coefficient is 1), which keeps the
// denominator's lowest coefficient positive and growth bounded.
// Equality is nevertheless decided by cross-multiplication.
class KElem {
public:
    KElem() : num_(), den_(EpsPoly::one()) {}
    KElem(const Rat& r) : num_(EpsPoly(r)), den_(EpsPoly::one()) { canon(); }  // NOLINT
    KElem(long v) : KElem(Rat(v)) {}                                           // NOLINT
    KElem(int v) : KElem(Rat(v)) {}                                            // NOLINT
    KElem(EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) { canon(); }

    static KElem eps(int k = 1) {
        if (k >= 0) return KElem(EpsPoly::monomial(Rat(1), k), EpsPoly::one());
        return KElem(EpsPoly::one(), EpsPoly::monomial(Rat(1), -k));
    }

    const EpsPoly& num() const { return num_; }
    const EpsPoly& den() const { return den_; }

    bool is_zero() const { return num_.zero(); }
    bool is_one() const { return num_ == den_; }

    friend KElem operator+(const KElem& a, const KElem& b) {
        return KElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend KElem operator-(const KElem& a) {
        KElem r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend KElem operator-(const KElem& a, const KElem& b) { return a + (-b); }
    friend KElem operator*(const KElem& a, const KElem& b) {
        return KElem(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend KElem operator/(const KElem& a, const KElem& b) {
        if (b.is_zero()) throw DivisionByZero();
        return KElem(a.num_ * b.den_, a.den_ * b.num_);
    }
    KElem& operator+=(const KElem& b) { return *this = *this + b; }
    KElem& operator-=(const KElem& b) { return *this = *this - b; }
    KElem& operator*=(const KElem& b) { return *this = *this * b; }
    KElem& operator/=(const KElem& b) { return *this = *this / b; }

    friend bool operator==(const KElem& a, const KElem& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const KElem& a, const KElem& b) { return !(a == b); }

    KElem pow(long e) const {
        if (e < 0) return (KElem(1) / *this).pow(-e);
        KElem r(1), base = *this;
        for (long i = 0; i < e; ++i) r *= base;
        return r;
    }

    KVal val() const {
        if (is_zero()) return KVal::infinity();
        return KVal(num_.ord() - den_.ord());
    }

    int sgn() const {
        if (is_zero()) return 0;
        return ganz::sgn(num_.coeff(num_.ord())) * ganz::sgn(den_.coeff(den_.ord()));
    }

    // image in the residue field Q; defined on the valuation ring only
    Rat residue() const {
        KVal v = val();
        if (v.inf) return Rat(0);
        if (v.v < 0) throw NegativeValuation();
        if (v.v > 0) return Rat(0);
        return num_.coeff(num_.ord()) / den_.coeff(den_.ord());
    }

    // true when the element lies in Q (no eps in reduced form)
    bool is_rational() const { return num_.deg() <= 0 && den_.deg() <= 0; }
    Rat as_rational() const {
        if (!is_rational()) throw Error("element of K is not rational");
        if (is_zero()) return Rat(0);
        return num_.coeff(0) / den_.coeff(0);
    }

private:
    EpsPoly num_, den_;

    void canon() {
        if (den_.zero()) throw DivisionByZero();
        if (num_.zero()) {
            den_ = EpsPoly::one();
            return;
        }
        EpsPoly g = EpsPoly::gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = EpsPoly::divexact(num_, g);
            den_ = EpsPoly::divexact(den_, g);
        }
        Rat low = den_.coeff(den_.ord());
        if (!ganz::is_zero(low - Rat(1))) {
            num_ = num_.divided_by(low);
            den_ = den_.divided_by(low);
        }
    }
};

inline bool is_zero(const KElem& a) { return a.is_zero(); }
inline int sgn(const KElem& a) { return a.sgn(); }

// comparison in the field order (eps positive infinitesimal)
inline bool operator<(const KElem& a, const KElem& b) { return (b - a).sgn() > 0; }
inline bool operator>(const KElem& a, const KElem& b) { return b < a; }

inline std::string expr_string(const EpsPoly& p, Prec need = Prec::Sum) {
    if (p.zero()) return "0";
    std::string out;
    int terms = 0;
    for (int i = p.ord(); i <= p.deg(); ++i) {
        Rat c = p.coeff(i);
        if (ganz::is_zero(c)) continue;
        int s = ganz::sgn(c);
        Rat a = s < 0 ? Rat(-c) : c;
        std::string piece;
        if (i == 0) {
            piece = expr_string(a, Prec::Product);
        } else {
            std::string mono = i == 1 ? "eps" : "eps^" + std::to_string(i);
            piece = (a == 1) ? mono : expr_string(a, Prec::Product) + "*" + mono;
        }
        if (terms == 0)
            out = (s < 0 ? "-" : "") + piece;
        else
            out += (s < 0 ? " - " : " + ") + piece;
        ++terms;
    }
    Prec have = terms > 1 ? Prec::Sum
                          : (out.starts_with('-') ? Prec::Unary
                                                  : (out.find('*') != std::string::npos ? Prec::Product
                                                                                        : Prec::Atom));
    return wrap_if(out, have, need);
}

inline std::string expr_string(const KElem& a, Prec need = Prec::Sum) {
    if (a.den() == EpsPoly::one()) return expr_string(a.num(), need);
    // reduced form never has a constant denominator other than 1, so the
    // denominator prints with eps in it and "a/b" cannot fuse into a literal
    std::string n = expr_string(a.num(), Prec::Product);
    std::string d = expr_string(a.den(), Prec::Power);
    return wrap_if(n + "/" + d, Prec::Product, need);
}

} // namespace ganz

#endif
