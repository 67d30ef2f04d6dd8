#ifndef GANZ_UPOLY_HPP
#define GANZ_UPOLY_HPP

#include <utility>
#include <vector>

#include "ganz/errors.hpp"
#include "ganz/rational.hpp"

namespace ganz {

// Dense univariate polynomial over a field C.  Instantiated with Rat
// (polynomials in eps, the building block of K) and with KElem
// (expansions along a substitution line, polynomials in t).
template <class C>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const C& c0) : c_{c0} { trim(); }

    static UPoly monomial(const C& c, int k) {
        UPoly p;
        p.c_.assign(static_cast<std::size_t>(k) + 1, C{});
        p.c_[static_cast<std::size_t>(k)] = c;
        p.trim();
        return p;
    }
    static UPoly one() { return UPoly(C(1)); }

    bool zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial

    // index of the lowest nonzero coefficient; -1 for zero
    int ord() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    C coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return C{};
        return c_[static_cast<std::size_t>(i)];
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), C{});
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] = r.c_[i] + a.c_[i];
            if (i < b.c_.size()) r.c_[i] = r.c_[i] + b.c_[i];
        }
        r.trim();
        return r;
    }

    friend UPoly operator-(const UPoly& a) {
        UPoly r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.zero() || b.zero()) return UPoly{};
        UPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, C{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
    UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

    friend UPoly operator*(const UPoly& a, const C& s) {
        UPoly r = a;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }

    UPoly divided_by(const C& s) const {
        UPoly r = *this;
        for (auto& c : r.c_) c = c / s;
        r.trim();
        return r;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    // Euclidean division, divisor nonzero.
    static std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
        if (b.zero()) throw DivisionByZero();
        UPoly q;
        if (a.deg() >= b.deg())
            q.c_.assign(static_cast<std::size_t>(a.deg() - b.deg()) + 1, C{});
        const C lead = b.c_.back();
        while (!a.zero() && a.deg() >= b.deg()) {
            int shift = a.deg() - b.deg();
            C factor = a.c_.back() / lead;
            q.c_[static_cast<std::size_t>(shift)] = factor;
            a = a - UPoly::monomial(factor, shift) * b;
        }
        q.trim();
        return {q, a};
    }

    // monic gcd (or zero when both arguments are zero)
    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.zero()) {
            UPoly r = divmod(a, b).second;
            a = b;
            b = r;
        }
        if (!a.zero() && !is_zero(a.c_.back() - C(1))) a = a.divided_by(a.c_.back());
        return a;
    }

    static UPoly divexact(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

private:
    std::vector<C> c_;

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
};

template <class C>
UPoly<C> pow(const UPoly<C>& base, int e) {
    UPoly<C> r = UPoly<C>::one();
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace ganz

#endif
