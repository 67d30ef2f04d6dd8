#ifndef GANZ_RANDOM_VALUES_HPP
#define GANZ_RANDOM_VALUES_HPP

#include "ganz/certificates.hpp"
#include "ganz/prng.hpp"

namespace ganz {

// Seeded generators for small exact values.  Everything downstream of a
// seed is deterministic, so failures replay exactly.

inline Rat rand_rat(SplitMix64& rng, long num_range = 6, long den_range = 4) {
    return rat(static_cast<long>(rng.range(-num_range, num_range)),
               static_cast<long>(rng.range(1, den_range)));
}

inline EpsPoly rand_epspoly(SplitMix64& rng, int max_deg = 3, bool nonzero = false) {
    EpsPoly p;
    int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    for (int i = 0; i <= d; ++i) {
        Rat c = rand_rat(rng);
        if (!is_zero(c)) p += EpsPoly::monomial(c, i);
    }
    if (nonzero && p.zero()) p = EpsPoly(Rat(1 + static_cast<long>(rng.below(5))));
    return p;
}

inline KElem rand_kelem(SplitMix64& rng, int max_deg = 3, bool nonzero = false) {
    EpsPoly num = rand_epspoly(rng, max_deg, nonzero);
    EpsPoly den = rand_epspoly(rng, max_deg, true);
    return KElem(num, den);
}

// nonzero element of the valuation ring of K
inline KElem rand_kelem_integral(SplitMix64& rng, int max_deg = 3) {
    KElem a = rand_kelem(rng, max_deg, true);
    KVal v = a.val();
    if (v.v < 0) a = a * KElem::eps(static_cast<int>(-v.v));
    return a;
}

inline MPoly<KElem> rand_mpoly(SplitMix64& rng, int nvars, int max_deg = 2, bool nonzero = false,
                               bool rational_coeffs = false) {
    MPoly<KElem> p(nvars);
    int terms = 1 + static_cast<int>(rng.below(3));
    for (int t = 0; t < terms; ++t) {
        ExpVec e(static_cast<std::size_t>(nvars), 0);
        int budget = max_deg;
        for (auto& ei : e) {
            ei = static_cast<int>(rng.below(static_cast<std::uint64_t>(budget) + 1));
            budget -= ei;
        }
        KElem c = rational_coeffs ? KElem(rand_rat(rng)) : rand_kelem(rng, 2);
        p.add_term(e, c);
    }
    if (nonzero && p.zero())
        p = MPoly<KElem>::constant(nvars, KElem(Rat(1 + static_cast<long>(rng.below(5)))));
    return p;
}

inline RatFunc rand_ratfunc(SplitMix64& rng, int nvars, int max_deg = 2, bool nonzero = false) {
    MPoly<KElem> num = rand_mpoly(rng, nvars, max_deg, nonzero);
    MPoly<KElem> den = rand_mpoly(rng, nvars, max_deg, true);
    return RatFunc(num, den);
}

inline Point rand_rational_point(SplitMix64& rng, int nvars, long num_range = 3, long den_range = 3) {
    std::vector<KElem> cs;
    for (int i = 0; i < nvars; ++i) cs.emplace_back(rand_rat(rng, num_range, den_range));
    return Point(std::move(cs));
}

// Square part with rational coefficients and a simple denominator.  Exact
// fraction sums over unrelated eps-denominators grow multiplicatively, so
// certificate generators stay lean; poles are still exercised.
inline RatFunc rand_cone_part(SplitMix64& rng, int nvars, int part_deg = 1) {
    MPoly<KElem> num = rand_mpoly(rng, nvars, part_deg, false, true);
    if (rng.below(3) == 0) num = num * KElem::eps();
    switch (rng.below(4)) {
        case 0:
        case 1:
            return RatFunc(num);
        case 2:
            return RatFunc(num, MPoly<KElem>::variable(nvars, static_cast<int>(rng.below(
                                    static_cast<std::uint64_t>(nvars)))));
        default:
            return RatFunc(num, MPoly<KElem>::constant(nvars, KElem(1)) +
                                    MPoly<KElem>::variable(nvars, static_cast<int>(rng.below(
                                                                      static_cast<std::uint64_t>(nvars)))));
    }
}

inline ConeCert rand_cone_cert(SplitMix64& rng, const SetDescription& s, int max_parts = 2,
                               int part_deg = 1) {
    ConeCert cert;
    std::size_t m = s.p.size();
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        if (!rng.coin()) continue;
        std::vector<int> subset;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1ULL << i)) subset.push_back(static_cast<int>(i));
        std::vector<RatFunc> parts;
        int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_parts)));
        for (int j = 0; j < k; ++j) parts.push_back(rand_cone_part(rng, s.nvars, part_deg));
        cert.set_term(std::move(subset), SOS(std::move(parts)));
    }
    return cert;
}

inline AlgebraElem rand_algebra_elem(SplitMix64& rng, std::size_t gen_count, bool allow_empty = true) {
    AlgebraElem a;
    int terms = static_cast<int>(rng.below(3)) + (allow_empty ? 0 : 1);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> mono(gen_count, 0);
        for (auto& e : mono) e = static_cast<int>(rng.below(3));
        // single-monomial coefficients of nonnegative valuation keep the
        // expanded certificate values small
        Rat c = rand_rat(rng);
        if (is_zero(c)) c = Rat(1);
        a.add_term(std::move(mono), KElem(c) * KElem::eps(static_cast<int>(rng.below(3))));
    }
    return a;
}

inline RadicalCert rand_radical_cert(SplitMix64& rng, const SetDescription& s) {
    RadicalCert cert;
    cert.h = rand_ratfunc(rng, s.nvars, 2, true);
    int gens = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < gens; ++i) cert.generators.push_back(rand_cone_cert(rng, s, 1, 1));
    std::size_t gen_count = cert.generators.size() + s.g.size();
    std::vector<RatFunc> gen_values = radical_generator_values(cert, s);
    int n = 1 + static_cast<int>(rng.below(2));
    RatFunc one = RatFunc::constant(s.nvars, KElem(1));
    for (int i = 0; i < n; ++i) {
        LocalizedElem c;
        c.a = rand_algebra_elem(rng, gen_count);
        c.t_m = KElem::eps(1 + static_cast<int>(rng.below(2))) * KElem(rat(1 + static_cast<long>(rng.below(3))));
        do {
            c.t_a = rand_algebra_elem(rng, gen_count);
        } while ((one + RatFunc::constant(s.nvars, c.t_m) * c.t_a.value(gen_values, s.nvars)).zero());
        cert.coeffs.push_back(std::move(c));
    }
    return cert;
}

} // namespace ganz

#endif
