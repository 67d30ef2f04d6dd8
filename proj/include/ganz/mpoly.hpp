#ifndef GANZ_MPOLY_HPP
#define GANZ_MPOLY_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ganz/kelem.hpp"

namespace ganz {

using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// graded lex, biggest term first: map iteration starts at the leading term
struct GrlexFirst {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over a field C, fixed variable count.
template <class C>
class MPoly {
public:
    using TermMap = std::map<ExpVec, C, GrlexFirst>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}

    static MPoly constant(int nvars, const C& c) {
        MPoly p(nvars);
        p.add_term(ExpVec(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static MPoly variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
        MPoly p(nvars);
        ExpVec e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, C(1));
        return p;
    }

    int nvars() const { return nvars_; }
    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int degree() const {
        if (zero()) return -1;
        return total_degree(terms_.begin()->first);
    }

    void add_term(const ExpVec& e, const C& c) {
        if (e.size() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("exponent vector length mismatch");
        if (is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    C coefficient(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    C leading_coefficient() const {
        if (zero()) return C{};
        return terms_.begin()->second;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a) {
        MPoly r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
    MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
    MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

    friend MPoly operator*(const MPoly& a, const C& s) {
        if (is_zero(s)) return MPoly(a.nvars_);
        MPoly r = a;
        for (auto& [e, c] : r.terms_) c = c * s;
        return r;
    }
    MPoly divided_by(const C& s) const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = c / s;
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        MPoly r = constant(nvars_, C(1));
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // same polynomial over a wider variable set
    MPoly extended(int nvars) const {
        if (nvars < nvars_) throw std::invalid_argument("cannot shrink variable set");
        MPoly r(nvars);
        for (const auto& [e, c] : terms_) {
            ExpVec w = e;
            w.resize(static_cast<std::size_t>(nvars), 0);
            r.add_term(w, c);
        }
        return r;
    }

    // evaluation in any commutative ring T reachable from C
    template <class T>
    T eval_generic(const std::vector<T>& pt) const {
        if (pt.size() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("point arity mismatch");
        T acc{};
        for (const auto& [e, c] : terms_) {
            T m{T(c)};
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) m *= pt[i];
            acc += m;
        }
        return acc;
    }

private:
    int nvars_;
    TermMap terms_;

    void check_vars(const MPoly& b) const {
        if (nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
    }
};

// Point of K^n.
struct Point {
    std::vector<KElem> coords;

    Point() = default;
    explicit Point(std::vector<KElem> cs) : coords(std::move(cs)) {}

    std::size_t size() const { return coords.size(); }
    const KElem& operator[](std::size_t i) const { return coords[i]; }

    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ", ";
            s += expr_string(coords[i]);
        }
        return s + ")";
    }
};

template <class C>
KElem eval(const MPoly<C>& p, const Point& b) {
    std::vector<KElem> pt(b.coords.begin(), b.coords.end());
    return p.template eval_generic<KElem>(pt);
}

template <class C>
std::string monomial_string(const ExpVec& e, const char* var_prefix) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += std::string(var_prefix) + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

template <class C>
std::string expr_string_poly(const MPoly<C>& p, Prec need, const char* var_prefix = "x") {
    if (p.zero()) return "0";
    std::string out;
    int terms = 0;
    for (const auto& [e, c] : p.terms()) {
        int s = sgn(c);
        C a = s < 0 ? C(-c) : c;
        std::string mono = monomial_string<C>(e, var_prefix);
        std::string piece;
        if (mono.empty())
            piece = expr_string(a, Prec::Product);
        else if (a == C(1))
            piece = mono;
        else
            piece = expr_string(a, Prec::Product) + "*" + mono;
        if (terms == 0)
            out = (s < 0 ? "-" : "") + piece;
        else
            out += (s < 0 ? " - " : " + ") + piece;
        ++terms;
    }
    Prec have = terms > 1 ? Prec::Sum
                          : (out.starts_with('-') ? Prec::Unary
                                                  : (out.find('*') != std::string::npos || out.find('/') != std::string::npos
                                                         ? Prec::Product
                                                         : Prec::Atom));
    return wrap_if(out, have, need);
}

inline std::string expr_string(const MPoly<KElem>& p, Prec need = Prec::Sum) {
    return expr_string_poly(p, need, "x");
}
inline std::string expr_string(const MPoly<Rat>& p, Prec need = Prec::Sum) {
    return expr_string_poly(p, need, "y");
}

} // namespace ganz

#endif
