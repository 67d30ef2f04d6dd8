#ifndef GANZ_HANDELMAN_HPP
#define GANZ_HANDELMAN_HPP

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "ganz/certificates.hpp"
#include "ganz/simplex.hpp"

namespace ganz {

// Lagrange decomposition of a nonnegative integer into four squares,
// largest component first.  Plain descending search; inputs here come
// from small feasibility systems.
inline std::array<mpz_class, 4> four_squares(const mpz_class& n) {
    if (n < 0) throw std::invalid_argument("four_squares needs n >= 0");
    mpz_class a, b, c, rem1, rem2, rem3, d;
    for (a = sqrt(n); a >= 0; --a) {
        rem1 = n - a * a;
        for (b = std::min(a, mpz_class(sqrt(rem1))); b >= 0; --b) {
            rem2 = rem1 - b * b;
            for (c = std::min(b, mpz_class(sqrt(rem2))); c >= 0; --c) {
                rem3 = rem2 - c * c;
                if (mpz_perfect_square_p(rem3.get_mpz_t())) {
                    d = sqrt(rem3);
                    if (d <= c) return {a, b, c, d};
                }
            }
        }
    }
    throw std::logic_error("four-square search failed");  // unreachable
}

// q >= 0 as a sum of at most four rational squares: a single square when
// q is one, else via num*den = s1^2+..+s4^2 and q = sum (s_i/den)^2.
inline std::vector<Rat> rational_square_parts(const Rat& q) {
    if (sgn(q) < 0) throw std::invalid_argument("negative weight");
    if (is_zero(q)) return {};
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        Rat r(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
        r.canonicalize();
        return {r};
    }
    std::array<mpz_class, 4> s = four_squares(num * den);
    std::vector<Rat> out;
    for (const auto& si : s) {
        if (si == 0) continue;
        Rat r(si, den);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

namespace detail {

struct ProductEntry {
    std::vector<int> mult;       // multiplicity per constraint
    MPoly<KElem> value;
};

inline void enumerate_products(const SetDescription& s, int degree_bound, std::size_t idx,
                               std::vector<int>& mult, const MPoly<KElem>& acc, int used,
                               std::vector<ProductEntry>& out, std::size_t column_cap) {
    if (idx == s.p.size()) {
        out.push_back({mult, acc});
        if (out.size() > column_cap) throw BudgetExceeded("too many cone products at this degree bound");
        return;
    }
    const MPoly<KElem>& pi = s.p[idx];
    int d = pi.degree();
    MPoly<KElem> cur = acc;
    for (int k = 0;; ++k) {
        mult[idx] = k;
        enumerate_products(s, degree_bound, idx + 1, mult, cur, used + k * d, out, column_cap);
        if (d == 0 && k == 1) break;   // constants contribute only once
        if (used + (k + 1) * d > degree_bound) break;
        cur *= pi;
    }
    mult[idx] = 0;
}

} // namespace detail

// Bounded-degree search in the subcone of nonnegative rational combinations
// of products of the constraints.  Feasibility is an exact rational LP over
// the lambda weights; an empty result is "unknown", not a refutation.
inline std::optional<ConeCert> handelman_search(const SetDescription& s, const MPoly<KElem>& target,
                                               int degree_bound) {
    if (target.zero()) return ConeCert{};
    if (degree_bound < target.degree())
        throw std::invalid_argument("degree bound below the target degree");
    for (const auto& pi : s.p)
        if (pi.zero()) throw std::invalid_argument("zero constraint polynomial");

    constexpr std::size_t kColumnCap = 512;
    constexpr std::size_t kRowCap = 4096;

    std::vector<detail::ProductEntry> prods;
    std::vector<int> mult(s.p.size(), 0);
    detail::enumerate_products(s, degree_bound, 0, mult,
                               MPoly<KElem>::constant(s.nvars, KElem(1)), 0, prods, kColumnCap);

    // union of monomial supports, in term order
    std::set<ExpVec, GrlexFirst> monos;
    auto note = [&monos](const MPoly<KElem>& p) {
        for (const auto& [e, c] : p.terms()) monos.insert(e);
    };
    note(target);
    for (const auto& pe : prods) note(pe.value);

    // one K-linear equation per monomial, flattened into rational rows by
    // clearing eps-denominators and matching eps-coefficients
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (const auto& e : monos) {
        std::vector<KElem> cs;
        cs.reserve(prods.size());
        EpsPoly common = EpsPoly::one();
        for (const auto& pe : prods) {
            KElem c = pe.value.coefficient(e);
            cs.push_back(c);
            if (!c.is_zero()) common *= c.den();
        }
        KElem ct = target.coefficient(e);
        if (!ct.is_zero()) common *= ct.den();

        auto cleared = [&common](const KElem& c) {
            if (c.is_zero()) return EpsPoly{};
            return c.num() * EpsPoly::divexact(common, c.den());
        };
        std::vector<EpsPoly> cleared_cs;
        int max_deg = -1;
        for (const auto& c : cs) {
            cleared_cs.push_back(cleared(c));
            max_deg = std::max(max_deg, cleared_cs.back().deg());
        }
        EpsPoly cleared_t = cleared(ct);
        max_deg = std::max(max_deg, cleared_t.deg());

        for (int k = 0; k <= max_deg; ++k) {
            std::vector<Rat> row(prods.size(), Rat(0));
            bool nontrivial = false;
            for (std::size_t j = 0; j < prods.size(); ++j) {
                row[j] = cleared_cs[j].coeff(k);
                if (!is_zero(row[j])) nontrivial = true;
            }
            Rat r = cleared_t.coeff(k);
            if (!nontrivial && is_zero(r)) continue;
            rows.push_back(std::move(row));
            rhs.push_back(r);
            if (rows.size() > kRowCap) throw BudgetExceeded("coefficient system too large");
        }
    }

    auto lambda = solve_nonneg(rows, rhs);
    if (!lambda) return std::nullopt;

    ConeCert cert;
    for (std::size_t j = 0; j < prods.size(); ++j) {
        const Rat& l = (*lambda)[j];
        if (is_zero(l)) continue;
        std::vector<int> odd;
        MPoly<KElem> evenpart = MPoly<KElem>::constant(s.nvars, KElem(1));
        for (std::size_t i = 0; i < prods[j].mult.size(); ++i) {
            int k = prods[j].mult[i];
            if (k & 1) odd.push_back(static_cast<int>(i));
            for (int half = 0; half < k / 2; ++half) evenpart *= s.p[i];
        }
        SOS& sos = cert.terms[odd];
        for (const Rat& c : rational_square_parts(l))
            sos.parts.push_back(RatFunc(evenpart * KElem(c)));
    }

    if (!(cone_value(cert, s) == RatFunc(target)))
        throw std::logic_error("handelman certificate failed re-verification");
    return cert;
}

} // namespace ganz

#endif
