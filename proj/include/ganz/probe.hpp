#ifndef GANZ_PROBE_HPP
#define GANZ_PROBE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ganz/certificates.hpp"
#include "ganz/prng.hpp"

namespace ganz {

// Deterministic point source over K^n.  Grid strategies enumerate a
// rational lattice and, for each listed eps order e, the lattice scaled by
// eps^e; pseudorandom strategies draw coordinates q*eps^e from a seeded
// generator.  Points with infinitesimal and infinite coordinates are the
// whole point: plenty of integrality violations only show up there.
struct SampleStrategy {
    enum class Kind { Grid, Pseudorandom };

    Kind kind = Kind::Grid;
    Rat step = Rat(1);
    Rat radius = Rat(1);
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<int> epsilon_orders;

    static SampleStrategy grid(Rat step, Rat radius, std::vector<int> eps_orders = {}) {
        SampleStrategy s;
        s.kind = Kind::Grid;
        s.step = std::move(step);
        s.radius = std::move(radius);
        s.epsilon_orders = std::move(eps_orders);
        return s;
    }
    static SampleStrategy pseudorandom(std::uint64_t seed, int count,
                                       std::vector<int> eps_orders = {}) {
        SampleStrategy s;
        s.kind = Kind::Pseudorandom;
        s.seed = seed;
        s.count = count;
        s.epsilon_orders = std::move(eps_orders);
        return s;
    }

    std::string str() const {
        std::string s;
        if (kind == Kind::Grid)
            s = "grid step=" + step.get_str() + " radius=" + radius.get_str();
        else
            s = "pseudorandom seed=" + std::to_string(seed) + " count=" + std::to_string(count);
        s += " eps-orders=";
        if (epsilon_orders.empty()) s += "none";
        for (std::size_t i = 0; i < epsilon_orders.size(); ++i)
            s += (i ? "," : "") + std::to_string(epsilon_orders[i]);
        return s;
    }
};

inline bool point_in_set(const SetDescription& s, const Point& b) {
    for (const auto& pi : s.p)
        if (eval(pi, b).sgn() <= 0) return false;
    for (const auto& gj : s.g) {
        EvalOutcome r = try_eval(gj.extended(s.nvars), b);
        if (!r.defined()) return false;  // a pole of g_j cannot satisfy the valuation condition
        KVal kv = r.value.val();
        if (!kv.inf && kv.v < 0) return false;
    }
    return true;
}

namespace detail {

inline std::vector<KElem> grid_coordinate_pool(const SampleStrategy& st) {
    if (sgn(st.step) <= 0 || sgn(st.radius) < 0)
        throw std::invalid_argument("grid needs step > 0 and radius >= 0");
    std::vector<Rat> rationals;
    for (Rat q = -st.radius; q <= st.radius; q += st.step) rationals.push_back(q);
    std::vector<KElem> pool;
    for (const Rat& q : rationals) pool.emplace_back(q);
    for (int e : st.epsilon_orders)
        for (const Rat& q : rationals)
            if (!is_zero(q)) pool.push_back(KElem(q) * KElem::eps(e));
    return pool;
}

inline KElem pseudorandom_coordinate(SplitMix64& rng, const std::vector<int>& eps_orders) {
    long long num = rng.range(-8, 8);
    long long den = rng.range(1, 8);
    KElem q(rat(num, den));
    std::size_t pick = static_cast<std::size_t>(rng.below(eps_orders.size() + 1));
    if (pick == 0) return q;
    return q * KElem::eps(eps_orders[pick - 1]);
}

} // namespace detail

struct SampleResult {
    std::vector<Point> points;
    bool nonemptiness_unknown = false;  // budget produced no member of S
};

// Enumerate candidates in a fixed deterministic order and keep the members
// of S.  Membership is exact: strict signs for the p_i, valuation at least
// zero for the g_j.
inline SampleResult sample_set(const SetDescription& s, const SampleStrategy& st) {
    SampleResult out;
    const std::size_t n = static_cast<std::size_t>(s.nvars);
    if (st.kind == SampleStrategy::Kind::Grid) {
        std::vector<KElem> pool = detail::grid_coordinate_pool(st);
        if (pool.empty() || n == 0) {
            out.nonemptiness_unknown = true;
            return out;
        }
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            Point b;
            b.coords.reserve(n);
            for (std::size_t i = 0; i < n; ++i) b.coords.push_back(pool[idx[i]]);
            if (point_in_set(s, b)) out.points.push_back(std::move(b));
            std::size_t i = n;  // odometer, last coordinate fastest
            while (i > 0) {
                if (++idx[i - 1] < pool.size()) break;
                idx[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    } else {
        SplitMix64 rng(st.seed);
        for (int k = 0; k < st.count; ++k) {
            Point b;
            b.coords.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                b.coords.push_back(detail::pseudorandom_coordinate(rng, st.epsilon_orders));
            if (point_in_set(s, b)) out.points.push_back(std::move(b));
        }
    }
    out.nonemptiness_unknown = out.points.empty();
    return out;
}

// Outcome of a sampling probe.  A violation is exact and self-verifying:
// the witness satisfies the membership conditions and the reported
// valuation inequality under re-evaluation.  No violation proves nothing.
struct ProbeReport {
    bool violation = false;
    Point witness;
    KElem value;
    KVal val;
    long tested = 0;             // member points where h was defined and checked
    long skipped_undefined = 0;  // member points where h was not defined
    bool nonemptiness_unknown = false;
};

// Pointwise integrality over sampled members of S: a point with
// val(h(b)) < 0 disproves integrality of h on S.
inline ProbeReport integrality_probe(const RatFunc& h, const SetDescription& s,
                                     const SampleStrategy& st) {
    ProbeReport rep;
    SampleResult sr = sample_set(s, st);
    rep.nonemptiness_unknown = sr.nonemptiness_unknown;
    RatFunc hx = h.extended(s.nvars);
    for (const Point& b : sr.points) {
        EvalOutcome r = try_eval(hx, b);
        if (!r.defined()) {
            ++rep.skipped_undefined;
            continue;
        }
        ++rep.tested;
        KVal kv = r.value.val();
        if (!kv.inf && kv.v < 0) {
            rep.violation = true;
            rep.witness = b;
            rep.value = r.value;
            rep.val = kv;
            return rep;
        }
    }
    return rep;
}

// Pointwise boundedness by a: violation when some defined value leaves the
// closed ball of radius val(a).
inline ProbeReport boundedness_probe(const RatFunc& h, const KElem& a, const SetDescription& s,
                                     const SampleStrategy& st) {
    if (a.is_zero()) throw std::invalid_argument("bound element must be nonzero");
    long long alpha = a.val().v;
    ProbeReport rep;
    SampleResult sr = sample_set(s, st);
    rep.nonemptiness_unknown = sr.nonemptiness_unknown;
    RatFunc hx = h.extended(s.nvars);
    for (const Point& b : sr.points) {
        EvalOutcome r = try_eval(hx, b);
        if (!r.defined()) {
            ++rep.skipped_undefined;
            continue;
        }
        ++rep.tested;
        KVal kv = r.value.val();
        if (!kv.inf && kv.v < alpha) {
            rep.violation = true;
            rep.witness = b;
            rep.value = r.value;
            rep.val = kv;
            return rep;
        }
    }
    return rep;
}

// In K = Q(eps) the convex hull of Z is exactly the valuation ring, so
// membership is a valuation sign check.
inline bool convex_hull_Z_check(const KElem& value) {
    KVal v = value.val();
    return v.inf || v.v >= 0;
}

// Documented deterministic direction sequence for retrying degenerate
// near-point substitutions: all-ones, then unit vectors, then pseudorandom.
inline Point retry_direction(int nvars, int attempt, std::uint64_t seed = 0xd1ec7) {
    std::size_t n = static_cast<std::size_t>(nvars);
    if (attempt == 0) return Point(std::vector<KElem>(n, KElem(1)));
    if (attempt <= nvars) {
        std::vector<KElem> d(n, KElem(0));
        d[static_cast<std::size_t>(attempt - 1)] = KElem(1);
        return Point(std::move(d));
    }
    SplitMix64 rng(seed + static_cast<std::uint64_t>(attempt));
    std::vector<KElem> d(n);
    bool nz = false;
    for (auto& c : d) {
        c = KElem(rat(static_cast<long>(rng.range(-5, 5))));
        if (!c.is_zero()) nz = true;
    }
    if (!nz) d[0] = KElem(1);
    return Point(std::move(d));
}

} // namespace ganz

#endif
