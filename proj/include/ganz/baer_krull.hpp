#ifndef GANZ_BAER_KRULL_HPP
#define GANZ_BAER_KRULL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ganz/certificates.hpp"
#include "ganz/valuation.hpp"

namespace ganz {

// ---- F2 linear algebra over parity vectors ---------------------------------

// Incremental Gaussian elimination over F2 with combination tracking.
// Rows are reduced against all earlier rows on insertion, so a single
// left-to-right pass fully reduces any query vector.
class F2Solver {
public:
    // returns true when the mask is independent of everything inserted so far
    bool insert(std::uint64_t mask, std::uint64_t id_bit) {
        std::uint64_t combo = 0;
        reduce(mask, combo);
        if (mask == 0) return false;
        rows_.push_back({mask, combo | id_bit});
        return true;
    }

    // expresses the mask over inserted ids; empty when not in the span
    std::optional<std::uint64_t> solve(std::uint64_t mask) const {
        std::uint64_t combo = 0;
        reduce(mask, combo);
        if (mask != 0) return std::nullopt;
        return combo;
    }

private:
    struct Row {
        std::uint64_t mask;
        std::uint64_t combo;
    };
    std::vector<Row> rows_;

    void reduce(std::uint64_t& mask, std::uint64_t& combo) const {
        for (const Row& r : rows_) {
            std::uint64_t pivot = r.mask & (~r.mask + 1);  // lowest set bit
            if (mask & pivot) {
                mask ^= r.mask;
                combo ^= r.combo;
            }
        }
    }
};

// Maximal F2-independent subset of a parity list, greedy left to right,
// with the elimination data expressing every dropped parity as an XOR of
// chosen ones.
struct ParityBasis {
    std::vector<std::uint64_t> parities;
    std::vector<std::size_t> chosen;                 // ascending input indices
    std::vector<bool> is_chosen;
    std::vector<std::vector<std::size_t>> combos;    // per input; empty for chosen entries
};

inline ParityBasis f2_max_independent(const std::vector<std::uint64_t>& parities) {
    ParityBasis out;
    out.parities = parities;
    out.is_chosen.assign(parities.size(), false);
    out.combos.resize(parities.size());

    struct Row {
        std::uint64_t mask;
        std::vector<std::size_t> combo;  // original chosen indices
    };
    std::vector<Row> rows;

    for (std::size_t i = 0; i < parities.size(); ++i) {
        std::uint64_t m = parities[i];
        std::vector<std::size_t> combo;
        for (const Row& r : rows) {
            std::uint64_t pivot = r.mask & (~r.mask + 1);
            if (m & pivot) {
                m ^= r.mask;
                // symmetric difference keeps the combination exact
                std::vector<std::size_t> merged;
                std::set_symmetric_difference(combo.begin(), combo.end(), r.combo.begin(),
                                              r.combo.end(), std::back_inserter(merged));
                combo = std::move(merged);
            }
        }
        if (m != 0) {
            std::vector<std::size_t> own = combo;
            own.insert(std::lower_bound(own.begin(), own.end(), i), i);
            rows.push_back({m, std::move(own)});
            out.chosen.push_back(i);
            out.is_chosen[i] = true;
        } else {
            out.combos[i] = std::move(combo);
        }
    }
    return out;
}

// ---- semi-sections ----------------------------------------------------------

// The homomorphic monomial section: products of powers of the valuation's
// designated uniformizers, one per value-group coordinate.
inline RatFunc base_section_monomial(const Valuation& v, const ValGroupElem& g) {
    std::vector<RatFunc> unif = v.uniformizers();
    if (g.rank() != unif.size()) throw std::logic_error("value rank mismatch in base section");
    RatFunc out = RatFunc::constant(v.nvars(), KElem(1));
    for (std::size_t j = 0; j < unif.size(); ++j) out *= unif[j].pow(g.c[j]);
    return out;
}

// Semi-section of the value group: val(s(g)) = g, and the defect
// s(g1+g2)/(s(g1)s(g2)) is always an explicit square.  Built from a basis
// of parity classes: forced elements first (their section values are the
// elements themselves), then designated-uniformizer monomials completing
// the basis, with the canonical square s0(g)^2 on the even part.
class SemiSection {
public:
    struct Entry {
        ValGroupElem gamma;
        RatFunc elem;
        std::uint64_t parity;
        bool forced;
    };

    const Valuation& valuation() const { return v_; }
    const std::vector<Entry>& basis() const { return basis_; }
    std::size_t forced_count() const { return forced_count_; }

    RatFunc base_section(const ValGroupElem& g) const { return base_section_monomial(v_, g); }

    RatFunc section(const ValGroupElem& g) const {
        std::uint64_t cmask = solve_combo(g.parity());
        ValGroupElem rem = g;
        RatFunc prod = RatFunc::constant(v_.nvars(), KElem(1));
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (cmask & (1ULL << k)) {
                rem = rem - basis_[k].gamma;
                prod *= basis_[k].elem;
            }
        }
        RatFunc s0 = base_section(rem.half());
        return prod * s0 * s0;
    }

    // witness w with  s(g1+g2) / (s(g1)s(g2)) = w^2  exactly
    RatFunc law_witness(const ValGroupElem& g1, const ValGroupElem& g2) const {
        std::uint64_t c1 = solve_combo(g1.parity());
        std::uint64_t c2 = solve_combo(g2.parity());
        ValGroupElem e1 = even_part(g1, c1);
        ValGroupElem e2 = even_part(g2, c2);
        ValGroupElem e12 = even_part(g1 + g2, c1 ^ c2);
        RatFunc w = base_section(e12 - e1 - e2);
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if ((c1 & c2) & (1ULL << k)) w /= basis_[k].elem;
        return w;
    }

    // witness for the forcing law s(gamma_i)/p_i = w^2 on forced entries
    RatFunc forcing_witness(std::size_t i) const {
        if (i >= forced_count_) throw std::invalid_argument("not a forced entry");
        return RatFunc::constant(v_.nvars(), KElem(1));
    }

private:
    friend SemiSection build_semisection(const Valuation&,
                                         const std::vector<std::pair<ValGroupElem, RatFunc>>&);

    Valuation v_ = Valuation::weighted_gauss({0});
    std::vector<Entry> basis_;
    std::size_t forced_count_ = 0;
    F2Solver solver_;

    explicit SemiSection(Valuation v) : v_(std::move(v)) {}

    std::uint64_t solve_combo(std::uint64_t parity) const {
        auto c = solver_.solve(parity);
        if (!c) throw std::logic_error("semi-section basis does not span the parity group");
        return *c;
    }

    ValGroupElem even_part(const ValGroupElem& g, std::uint64_t cmask) const {
        ValGroupElem rem = g;
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (cmask & (1ULL << k)) rem = rem - basis_[k].gamma;
        return rem.half();
    }
};

inline SemiSection build_semisection(const Valuation& v,
                                     const std::vector<std::pair<ValGroupElem, RatFunc>>& forced) {
    SemiSection s(v);
    const std::size_t r = v.rank();
    for (const auto& [gamma, p] : forced) {
        if (gamma.rank() != r) throw std::invalid_argument("forced valuation rank mismatch");
        ValOrInf actual = v.val_of(p);
        if (actual.inf || !(actual.v == gamma))
            throw std::invalid_argument("forced element does not have the claimed valuation");
    }
    // independence of the forced parities, with the offending combination as evidence
    {
        F2Solver probe;
        for (std::size_t i = 0; i < forced.size(); ++i) {
            if (!probe.insert(forced[i].first.parity(), 1ULL << i)) {
                auto combo = probe.solve(forced[i].first.parity());
                std::vector<std::size_t> evidence;
                for (std::size_t k = 0; k < i; ++k)
                    if (combo && (*combo & (1ULL << k))) evidence.push_back(k);
                throw DependentParities(evidence);
            }
        }
    }
    for (std::size_t i = 0; i < forced.size(); ++i) {
        s.solver_.insert(forced[i].first.parity(), 1ULL << s.basis_.size());
        s.basis_.push_back({forced[i].first, forced[i].second.extended(v.nvars()),
                            forced[i].first.parity(), true});
    }
    s.forced_count_ = s.basis_.size();

    // complete to a basis of (Z/2)^r with uniformizer monomials, masks ascending
    std::vector<RatFunc> unif = v.uniformizers();
    for (std::uint64_t mask = 1; mask < (1ULL << r); ++mask) {
        if (s.basis_.size() == r) break;
        if (!s.solver_.insert(mask, 1ULL << s.basis_.size())) continue;
        RatFunc elem = RatFunc::constant(v.nvars(), KElem(1));
        std::vector<long long> coords(r, 0);
        for (std::size_t j = 0; j < r; ++j)
            if (mask & (1ULL << j)) {
                elem *= unif[j];
                coords[j] = 1;
            }
        s.basis_.push_back({ValGroupElem(coords), elem, mask, false});
    }
    return s;
}

// ---- residue orders ---------------------------------------------------------

// Total order with decidable sign on the residue field: the standard order
// of Q, or an order on Q(y1..yn) with the permuted variables infinitely
// large positive after flipping by the sign vector.
class ResidueOrder {
public:
    static ResidueOrder standard_q() {
        ResidueOrder r;
        r.standard_ = true;
        return r;
    }
    static ResidueOrder leading_sign(std::vector<int> perm, std::vector<int> signs) {
        if (perm.size() != signs.size()) throw std::invalid_argument("permutation/sign size mismatch");
        ResidueOrder r;
        r.standard_ = false;
        r.perm_ = std::move(perm);
        r.signs_ = std::move(signs);
        return r;
    }

    bool is_standard() const { return standard_; }

    int sign(const ResidueElem& r) const {
        if (r.is_zero()) return 0;
        if (standard_) {
            if (!r.is_constant()) throw OrderUndecided();
            return sgn(r.constant_value());
        }
        if (r.is_rational()) return sgn(std::get<Rat>(r.v));
        const QFunc& f = std::get<QFunc>(r.v);
        return poly_sign(f.num()) * poly_sign(f.den());
    }

    std::string str() const {
        if (standard_) return "standard-q";
        std::string s = "leading-sign perm=(";
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(perm_[i] + 1);
        }
        s += ") signs=(";
        for (std::size_t i = 0; i < signs_.size(); ++i) {
            if (i) s += ",";
            s += signs_[i] < 0 ? "-" : "+";
        }
        return s + ")";
    }

private:
    bool standard_ = true;
    std::vector<int> perm_, signs_;

    bool perm_less(const ExpVec& a, const ExpVec& b) const {
        for (int idx : perm_) {
            std::size_t i = static_cast<std::size_t>(idx);
            int ea = i < a.size() ? a[i] : 0;
            int eb = i < b.size() ? b[i] : 0;
            if (ea != eb) return ea < eb;
        }
        return false;
    }

    int poly_sign(const MPoly<Rat>& p) const {
        if (p.zero()) return 0;
        const ExpVec* lead = nullptr;
        const Rat* coeff = nullptr;
        for (const auto& [e, c] : p.terms()) {
            if (!lead || perm_less(*lead, e)) {
                lead = &e;
                coeff = &c;
            }
        }
        int s = sgn(*coeff);
        for (std::size_t i = 0; i < lead->size() && i < signs_.size(); ++i)
            if (signs_[i] < 0 && ((*lead)[i] & 1)) s = -s;
        return s;
    }
};

// ---- the Baer-Krull order ---------------------------------------------------

// sign(f) = residue-order sign of res(f / s(val(f))): a total field order
// on L compatible with the valuation and inducing the residue order.
struct OrderHandle {
    Valuation v;
    SemiSection s;
    ResidueOrder ro;

    int sign(const RatFunc& f) const {
        if (f.zero()) return 0;
        ValOrInf d = v.val_of(f);
        RatFunc unit = f / s.section(d.v);
        return ro.sign(v.residue_of(unit));
    }
};

inline OrderHandle baer_krull_order(const Valuation& v, SemiSection s, ResidueOrder ro) {
    return OrderHandle{v, std::move(s), std::move(ro)};
}

// ---- residue-order search over the even products ---------------------------

struct EvenCaseResult {
    std::optional<ResidueOrder> order;
    // residues of the normalized even products, for diagnostics when the
    // catalog search comes back empty
    std::vector<std::pair<std::size_t, ResidueElem>> residues;
};

inline std::vector<ResidueOrder> residue_order_catalog(const Valuation& v, std::size_t cap = 384) {
    if (v.kind() == Valuation::Kind::NearPoint) return {ResidueOrder::standard_q()};
    std::vector<ResidueOrder> out;
    const std::size_t n = static_cast<std::size_t>(v.nvars());
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    do {
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::vector<int> signs(n, 1);
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ULL << i)) signs[i] = -1;
            out.push_back(ResidueOrder::leading_sign(perm, signs));
            if (out.size() >= cap) return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// For every constraint outside the chosen basis, the product with its
// recorded basis combination has even valuation 2g; the search looks for a
// catalog order making every residue res(q / s0(g)^2) nonnegative.  An
// empty result aborts the pipeline with the residue list for inspection;
// the catalog is finite, so nothing is refuted by NotFound.
inline EvenCaseResult even_case_order_search(const Valuation& v, const SetDescription& s,
                                             const ParityBasis& basis, std::size_t catalog_cap = 384) {
    EvenCaseResult out;
    for (std::size_t i = 0; i < s.p.size(); ++i) {
        if (basis.is_chosen[i]) continue;
        RatFunc q(s.p[i]);
        for (std::size_t j : basis.combos[i]) q *= RatFunc(s.p[j]);
        ValOrInf d = v.val_of(q);
        if (d.inf) throw std::invalid_argument("zero constraint polynomial");
        RatFunc c = base_section_monomial(v, d.v.half());
        out.residues.emplace_back(i, v.residue_of(q / (c * c)));
    }
    for (const ResidueOrder& cand : residue_order_catalog(v, catalog_cap)) {
        bool ok = true;
        for (const auto& [i, r] : out.residues) {
            int sg;
            try {
                sg = cand.sign(r);
            } catch (const OrderUndecided&) {
                ok = false;
                break;
            }
            if (sg < 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.order = cand;
            return out;
        }
    }
    return out;
}

// ---- the sufficiency pipeline ----------------------------------------------

struct PipelineResult {
    enum class Status { Success, ResidueOrderNotFound, HypothesisViolated };

    Status status = Status::Success;
    std::optional<OrderHandle> order;
    ParityBasis basis;
    std::vector<std::pair<std::size_t, ResidueElem>> residues;
    std::string detail;

    bool success() const { return status == Status::Success; }
};

// From a valuation whose ring contains the generated algebra to an order
// making every constraint positive: parity elimination, residue-order
// search over the even products, semi-section forcing of the chosen
// constraints, and the Baer-Krull synthesis.  The algebra hypothesis is
// spot-checked on the caller-supplied generator certificates only.
inline PipelineResult sufficiency_pipeline(const Valuation& v, const SetDescription& s,
                                           const std::vector<ConeCert>& hypothesis_checks = {}) {
    if (v.nvars() != s.nvars) throw std::invalid_argument("valuation/set variable count mismatch");
    PipelineResult out;
    for (std::size_t j = 0; j < s.g.size(); ++j) {
        ValOrInf d = v.val_of(s.g[j]);
        if (!d.inf && d.v < v.zero_value()) {
            out.status = PipelineResult::Status::HypothesisViolated;
            out.detail = "extra generator g" + std::to_string(j + 1) + " has negative valuation";
            return out;
        }
    }
    for (std::size_t k = 0; k < hypothesis_checks.size(); ++k) {
        RatFunc gen = generator_value(hypothesis_checks[k], s);
        ValOrInf d = v.val_of(gen);
        if (!d.inf && d.v < v.zero_value()) {
            out.status = PipelineResult::Status::HypothesisViolated;
            out.detail = "algebra spot-check " + std::to_string(k + 1) +
                         " is outside the valuation ring";
            return out;
        }
    }

    std::vector<std::uint64_t> parities;
    std::vector<ValGroupElem> gammas;
    for (const auto& pi : s.p) {
        if (pi.zero()) throw std::invalid_argument("zero constraint polynomial");
        ValOrInf d = v.val_of(RatFunc(pi));
        gammas.push_back(d.v);
        parities.push_back(d.v.parity());
    }
    out.basis = f2_max_independent(parities);

    EvenCaseResult ec = even_case_order_search(v, s, out.basis);
    out.residues = ec.residues;
    if (!ec.order) {
        out.status = PipelineResult::Status::ResidueOrderNotFound;
        out.detail = "no catalog order makes every even-product residue nonnegative";
        return out;
    }

    std::vector<std::pair<ValGroupElem, RatFunc>> forced;
    for (std::size_t i : out.basis.chosen)
        forced.emplace_back(gammas[i], RatFunc(s.p[i]));
    SemiSection ss = build_semisection(v, forced);
    OrderHandle oh = baer_krull_order(v, std::move(ss), *ec.order);

    for (const auto& pi : s.p)
        if (oh.sign(RatFunc(pi)) != 1)
            throw std::logic_error("pipeline postcondition failed: constraint not positive");

    out.order = std::move(oh);
    out.status = PipelineResult::Status::Success;
    return out;
}

} // namespace ganz

#endif
