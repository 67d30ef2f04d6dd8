#ifndef GANZ_CERTIFICATES_HPP
#define GANZ_CERTIFICATES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ganz/ratfunc.hpp"
#include "ganz/valuation.hpp"

namespace ganz {

// An open semi-algebraic set intersected with valuation conditions:
//   S = { b : p_i(b) > 0 for all i,  val(g_j(b)) >= 0 for all j }.
// Nonemptiness is not an invariant; probing checks it by sampling.
struct SetDescription {
    int nvars = 0;
    std::vector<MPoly<KElem>> p;
    std::vector<RatFunc> g;

    SetDescription() = default;
    SetDescription(int n, std::vector<MPoly<KElem>> ps, std::vector<RatFunc> gs = {})
        : nvars(n), p(std::move(ps)), g(std::move(gs)) {}

    std::string str() const {
        std::string s = "p:";
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "; " : " ") + expr_string(p[i]);
        if (!g.empty()) {
            s += " | g:";
            for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "; " : " ") + expr_string(g[i]);
        }
        return s;
    }
};

// Sum of squares of rational functions; zero parts are permitted and dropped.
struct SOS {
    std::vector<RatFunc> parts;

    SOS() = default;
    explicit SOS(std::vector<RatFunc> qs) {
        for (auto& q : qs)
            if (!q.zero()) parts.push_back(std::move(q));
    }

    RatFunc value(int nvars) const {
        RatFunc acc(nvars);
        for (const auto& q : parts) acc += q.extended(nvars) * q.extended(nvars);
        return acc;
    }
};

// Element of the positive cone generated by the constraint polynomials:
// a finite sum over subsets J of the constraint list,
//   value = sum_J r_J * prod_{i in J} p_i   with every r_J a sum of squares.
struct ConeCert {
    // keys are sorted 0-based index subsets
    std::map<std::vector<int>, SOS> terms;

    ConeCert() = default;

    void set_term(std::vector<int> subset, SOS sos) { terms[std::move(subset)] = std::move(sos); }

    friend bool operator==(const ConeCert& a, const ConeCert& b);
};

inline RatFunc cone_value(const ConeCert& cert, const SetDescription& s) {
    RatFunc acc(s.nvars);
    for (const auto& [subset, sos] : cert.terms) {
        RatFunc prod = RatFunc::constant(s.nvars, KElem(1));
        for (int i : subset) {
            if (i < 0 || i >= static_cast<int>(s.p.size())) throw IndexOutOfRange();
            prod *= RatFunc(s.p[static_cast<std::size_t>(i)]);
        }
        acc += sos.value(s.nvars) * prod;
    }
    return acc;
}

inline bool operator==(const ConeCert& a, const ConeCert& b) {
    if (a.terms.size() != b.terms.size()) return false;
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    for (; ia != a.terms.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second.parts.size() != ib->second.parts.size()) return false;
        for (std::size_t k = 0; k < ia->second.parts.size(); ++k)
            if (!(ia->second.parts[k] == ib->second.parts[k])) return false;
    }
    return true;
}

// Soundness self-test of the data model: at a point of S where every part
// is defined, every term of the cone expansion evaluates >= 0.
inline bool verify_cone_pointwise(const ConeCert& cert, const SetDescription& s, const Point& b) {
    for (const auto& pi : s.p)
        if (eval(pi, b).sgn() <= 0) throw std::invalid_argument("point is not in S");
    for (const auto& [subset, sos] : cert.terms) {
        KElem prod(1);
        for (int i : subset) {
            if (i < 0 || i >= static_cast<int>(s.p.size())) throw IndexOutOfRange();
            prod *= eval(s.p[static_cast<std::size_t>(i)], b);
        }
        KElem sq;
        for (const auto& q : sos.parts) {
            KElem qv = eval(q.extended(s.nvars), b);  // throws when undefined
            sq += qv * qv;
        }
        if ((sq * prod).sgn() < 0) return false;
    }
    return true;
}

// evaluate the cone value at b without expanding, skipping nothing:
// empty result when some square part is undefined at b
inline std::optional<KElem> try_eval_cone(const ConeCert& cert, const SetDescription& s, const Point& b) {
    KElem acc;
    for (const auto& [subset, sos] : cert.terms) {
        KElem prod(1);
        for (int i : subset) {
            if (i < 0 || i >= static_cast<int>(s.p.size())) throw IndexOutOfRange();
            prod *= eval(s.p[static_cast<std::size_t>(i)], b);
        }
        KElem sq;
        for (const auto& q : sos.parts) {
            EvalOutcome qv = try_eval(q.extended(s.nvars), b);
            if (!qv.defined()) return std::nullopt;
            sq += qv.value * qv.value;
        }
        acc += sq * prod;
    }
    return acc;
}

// 1/(1+f) for a cone element f: the generators of the algebra A.
inline RatFunc generator_value(const ConeCert& cert, const SetDescription& s) {
    RatFunc f = cone_value(cert, s);
    RatFunc one = RatFunc::constant(s.nvars, KElem(1));
    if ((one + f).zero()) throw IdenticallyMinusOne();
    return one / (one + f);
}

// ---- the integral-radical certificate ---------------------------------

// Polynomial over O_K in the generator symbols; exponent vectors run over
// the shared cone generators followed by the extra generators g of the set.
struct AlgebraElem {
    std::map<std::vector<int>, KElem> poly;

    bool zero() const { return poly.empty(); }

    void add_term(std::vector<int> mono, const KElem& coeff) {
        if (coeff.is_zero()) return;
        auto it = poly.find(mono);
        if (it == poly.end()) {
            poly.emplace(std::move(mono), coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) poly.erase(it);
        }
    }

    void check_structure(std::size_t gen_count) const {
        for (const auto& [mono, coeff] : poly) {
            if (mono.size() != gen_count)
                throw StructuralError("generator-monomial length mismatch");
            for (int e : mono)
                if (e < 0) throw StructuralError("negative generator exponent");
            KVal v = coeff.val();
            if (!v.inf && v.v < 0)
                throw StructuralError("algebra coefficient outside the valuation ring of K");
        }
    }

    RatFunc value(const std::vector<RatFunc>& gens, int nvars) const {
        RatFunc acc(nvars);
        for (const auto& [mono, coeff] : poly) {
            RatFunc m = RatFunc::constant(nvars, coeff);
            for (std::size_t k = 0; k < mono.size(); ++k)
                for (int e = 0; e < mono[k]; ++e) m *= gens[k];
            acc += m;
        }
        return acc;
    }
};

inline bool operator==(const AlgebraElem& a, const AlgebraElem& b) {
    if (a.poly.size() != b.poly.size()) return false;
    auto ia = a.poly.begin();
    auto ib = b.poly.begin();
    for (; ia != a.poly.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

// a / (1 + t_m * t_a) with t_m an infinitesimal of K: an element of the
// localization of the algebra at T = { 1 + m*a : m infinitesimal, a in A }
struct LocalizedElem {
    AlgebraElem a;
    KElem t_m;
    AlgebraElem t_a;
};

inline bool operator==(const LocalizedElem& x, const LocalizedElem& y) {
    return x.a == y.a && x.t_m == y.t_m && x.t_a == y.t_a;
}

// h is claimed integral over the localized algebra: the monic polynomial
//   Y^n + c_{n-1} Y^{n-1} + ... + c_0
// vanishes at Y = h as an exact identity in L.
struct RadicalCert {
    RatFunc h;
    std::vector<ConeCert> generators;  // k-th denotes 1/(1 + cone value)
    std::vector<LocalizedElem> coeffs;  // c_0 .. c_{n-1}
};

struct RadicalVerdict {
    bool valid = false;
    RatFunc residual;

    static RadicalVerdict ok(int nvars) { return {true, RatFunc(nvars)}; }
    static RadicalVerdict bad(RatFunc r) { return {false, std::move(r)}; }
};

// Expands the generator list of a radical certificate into rational functions.
inline std::vector<RatFunc> radical_generator_values(const RadicalCert& cert, const SetDescription& s) {
    std::vector<RatFunc> gens;
    gens.reserve(cert.generators.size() + s.g.size());
    for (const auto& c : cert.generators) gens.push_back(generator_value(c, s));
    for (const auto& g : s.g) gens.push_back(g.extended(s.nvars));
    return gens;
}

// Structural checks first (coefficients in O_K, t_m infinitesimal, nonzero
// localization denominators), then the exact expansion of the monic
// identity.  Structural failure throws; a nonzero residual is Invalid.
inline RadicalVerdict verify_radical_cert(const RadicalCert& cert, const SetDescription& s) {
    if (cert.coeffs.empty()) throw StructuralError("monic certificate needs degree at least 1");
    std::size_t gen_count = cert.generators.size() + s.g.size();
    for (const auto& c : cert.coeffs) {
        c.a.check_structure(gen_count);
        c.t_a.check_structure(gen_count);
        KVal tv = c.t_m.val();
        if (tv.inf || tv.v <= 0)
            throw StructuralError("localization multiplier t_m must be a nonzero infinitesimal");
    }
    std::vector<RatFunc> gens = radical_generator_values(cert, s);
    int n = s.nvars;
    RatFunc one = RatFunc::constant(n, KElem(1));

    RatFunc h = cert.h.extended(n);
    long deg = static_cast<long>(cert.coeffs.size());
    RatFunc residual = h.pow(deg);
    for (long i = 0; i < deg; ++i) {
        const LocalizedElem& c = cert.coeffs[static_cast<std::size_t>(i)];
        RatFunc denom = one + RatFunc::constant(n, c.t_m) * c.t_a.value(gens, n);
        if (denom.zero()) throw StructuralError("localization denominator is the zero function");
        RatFunc ci = c.a.value(gens, n) / denom;
        residual += ci * h.pow(i);
    }
    if (residual.zero()) return RadicalVerdict::ok(n);
    return RadicalVerdict::bad(residual);
}

} // namespace ganz

#endif
