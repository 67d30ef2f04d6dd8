#ifndef GANZ_VALUE_GROUP_HPP
#define GANZ_VALUE_GROUP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ganz {

// Value of the base field's valuation: an integer, or the distinguished
// top element attained only by zero.
struct KVal {
    bool inf = false;
    long long v = 0;

    KVal() = default;
    KVal(long long value) : inf(false), v(value) {}  // NOLINT(google-explicit-constructor)
    static KVal infinity() {
        KVal k;
        k.inf = true;
        return k;
    }

    friend bool operator==(const KVal& a, const KVal& b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    friend bool operator!=(const KVal& a, const KVal& b) { return !(a == b); }
    friend bool operator<(const KVal& a, const KVal& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.v < b.v;
    }
    friend bool operator<=(const KVal& a, const KVal& b) { return a < b || a == b; }
    friend bool operator>(const KVal& a, const KVal& b) { return b < a; }
    friend bool operator>=(const KVal& a, const KVal& b) { return b <= a; }

    friend KVal operator+(const KVal& a, const KVal& b) {
        if (a.inf || b.inf) return infinity();
        return KVal(a.v + b.v);
    }

    std::string str() const { return inf ? "inf" : std::to_string(v); }
};

inline KVal min(const KVal& a, const KVal& b) { return a < b ? a : b; }

// Element of Z^r ordered lexicographically, most-significant coordinate first.
struct ValGroupElem {
    std::vector<long long> c;

    ValGroupElem() = default;
    explicit ValGroupElem(std::vector<long long> coords) : c(std::move(coords)) {}
    static ValGroupElem zero(std::size_t rank) { return ValGroupElem(std::vector<long long>(rank, 0)); }
    static ValGroupElem scalar(long long v) { return ValGroupElem({v}); }

    std::size_t rank() const { return c.size(); }

    friend ValGroupElem operator+(const ValGroupElem& a, const ValGroupElem& b) {
        check_rank(a, b);
        ValGroupElem r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend ValGroupElem operator-(const ValGroupElem& a, const ValGroupElem& b) {
        check_rank(a, b);
        ValGroupElem r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend ValGroupElem operator-(const ValGroupElem& a) {
        ValGroupElem r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }

    friend bool operator==(const ValGroupElem& a, const ValGroupElem& b) { return a.c == b.c; }
    friend bool operator!=(const ValGroupElem& a, const ValGroupElem& b) { return !(a == b); }
    friend bool operator<(const ValGroupElem& a, const ValGroupElem& b) {
        check_rank(a, b);
        return a.c < b.c;  // vector lex, coordinate 0 most significant
    }
    friend bool operator<=(const ValGroupElem& a, const ValGroupElem& b) { return a < b || a == b; }
    friend bool operator>(const ValGroupElem& a, const ValGroupElem& b) { return b < a; }
    friend bool operator>=(const ValGroupElem& a, const ValGroupElem& b) { return b <= a; }

    bool is_zero() const {
        for (auto x : c)
            if (x != 0) return false;
        return true;
    }

    // coordinatewise mod-2 image as a bit mask, coordinate 0 in bit 0
    std::uint64_t parity() const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] & 1) m |= (1ULL << i);
        return m;
    }

    bool even() const { return parity() == 0; }

    ValGroupElem half() const {
        if (!even()) throw std::logic_error("halving an odd value-group element");
        ValGroupElem r = *this;
        for (auto& x : r.c) x /= 2;
        return r;
    }

    ValGroupElem doubled() const {
        ValGroupElem r = *this;
        for (auto& x : r.c) x *= 2;
        return r;
    }

    std::string str() const {
        if (c.size() == 1) return std::to_string(c[0]);
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }

private:
    static void check_rank(const ValGroupElem& a, const ValGroupElem& b) {
        if (a.c.size() != b.c.size()) throw std::logic_error("value-group rank mismatch");
    }
};

// Value group with the adjoined top element; the valuation of zero.
struct ValOrInf {
    bool inf = false;
    ValGroupElem v;

    ValOrInf() = default;
    ValOrInf(ValGroupElem g) : inf(false), v(std::move(g)) {}  // NOLINT(google-explicit-constructor)
    static ValOrInf infinity() {
        ValOrInf r;
        r.inf = true;
        return r;
    }

    bool finite() const { return !inf; }

    friend bool operator==(const ValOrInf& a, const ValOrInf& b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    friend bool operator!=(const ValOrInf& a, const ValOrInf& b) { return !(a == b); }
    friend bool operator<(const ValOrInf& a, const ValOrInf& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.v < b.v;
    }
    friend bool operator<=(const ValOrInf& a, const ValOrInf& b) { return a < b || a == b; }
    friend bool operator>(const ValOrInf& a, const ValOrInf& b) { return b < a; }
    friend bool operator>=(const ValOrInf& a, const ValOrInf& b) { return b <= a; }

    friend ValOrInf operator+(const ValOrInf& a, const ValOrInf& b) {
        if (a.inf || b.inf) return infinity();
        return ValOrInf(a.v + b.v);
    }

    std::string str() const { return inf ? "inf" : v.str(); }
};

inline ValOrInf min(const ValOrInf& a, const ValOrInf& b) { return a < b ? a : b; }

} // namespace ganz

#endif
