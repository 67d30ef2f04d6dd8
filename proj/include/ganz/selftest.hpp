#ifndef GANZ_SELFTEST_HPP
#define GANZ_SELFTEST_HPP

#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>

#include "ganz/baer_krull.hpp"
#include "ganz/certfile.hpp"
#include "ganz/handelman.hpp"
#include "ganz/probe.hpp"
#include "ganz/random_values.hpp"

namespace ganz {
namespace selftest {

// ---- shipped instances -----------------------------------------------------

inline SetDescription interval_set() {
    return SetDescription(1, {parse_ratfunc("x1", 1).num(), parse_ratfunc("1 - x1", 1).num()});
}
inline SetDescription simplex_set() {
    return SetDescription(2, {parse_ratfunc("x1", 2).num(), parse_ratfunc("x2", 2).num(),
                              parse_ratfunc("1 - x1 - x2", 2).num()});
}
inline SetDescription halfline_set() {
    return SetDescription(1, {parse_ratfunc("x1", 1).num()});
}
inline SetDescription free_set(int nvars) { return SetDescription(nvars, {}); }

// cone certificate for f = x1^2 over no constraints
inline ConeCert square_x1_cone() {
    ConeCert c;
    c.set_term({}, SOS({parse_ratfunc("x1", 1)}));
    return c;
}

// h = 1/(1+x1^2) is integral over the algebra: h - g = 0 for the generator
// g = 1/(1+x1^2).
inline CertificateFile shipped_reciprocal_cert() {
    CertificateFile f;
    f.nvars = 1;
    f.set = free_set(1);
    f.kind = CertificateFile::Kind::Radical;
    f.radical.h = parse_ratfunc("1/(1 + x1^2)", 1);
    f.radical.generators.push_back(square_x1_cone());
    LocalizedElem c0;
    c0.a.add_term({1}, KElem(-1));
    c0.t_m = KElem::eps();
    f.radical.coeffs.push_back(c0);
    return f;
}

// h = x1/(1+x1^2) satisfies h^2 - (g - g^2) = 0 for the same generator.
inline CertificateFile shipped_bounded_cert() {
    CertificateFile f;
    f.nvars = 1;
    f.set = free_set(1);
    f.kind = CertificateFile::Kind::Radical;
    f.radical.h = parse_ratfunc("x1/(1 + x1^2)", 1);
    f.radical.generators.push_back(square_x1_cone());
    LocalizedElem c0;
    c0.a.add_term({1}, KElem(-1));
    c0.a.add_term({2}, KElem(1));
    c0.t_m = KElem::eps();
    LocalizedElem c1;
    c1.t_m = KElem::eps();
    f.radical.coeffs.push_back(c0);
    f.radical.coeffs.push_back(c1);
    return f;
}

struct PipelineInstance {
    std::string name;
    Valuation v;
    SetDescription s;
};

inline std::vector<PipelineInstance> pipeline_instances() {
    std::vector<PipelineInstance> out;
    out.push_back({"weighted-gauss w=1, p=(x1, x1^2+eps^3)", Valuation::weighted_gauss({1}),
                   SetDescription(1, {parse_ratfunc("x1", 1).num(),
                                      parse_ratfunc("x1^2 + eps^3", 1).num()})});
    out.push_back({"near-point b=0 d=1, p=(x1)",
                   Valuation::near_point(Point({KElem(0)}), Point({KElem(1)})), halfline_set()});
    out.push_back({"weighted-gauss w=(1,0), p=(x1, x2, x1*x2)", Valuation::weighted_gauss({1, 0}),
                   SetDescription(2, {parse_ratfunc("x1", 2).num(), parse_ratfunc("x2", 2).num(),
                                      parse_ratfunc("x1*x2", 2).num()})});
    return out;
}

// ---- helpers -----------------------------------------------------------------

struct CmdResult {
    int status = -1;
    std::string output;
};

inline CmdResult run_command(const std::string& cmd) {
    CmdResult r;
    std::string full = cmd + " 2>&1";
    FILE* p = ::popen(full.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t k;
    while ((k = std::fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, k);
    r.status = ::pclose(p);
    return r;
}

// valuation of f at a near-point with the documented retry sequence
inline ValOrInf near_val_with_retry(const Point& b, const RatFunc& f, int max_attempts = 24) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Point d = retry_direction(static_cast<int>(b.size()), attempt);
        try {
            return Valuation::near_point(b, d).val_of(f);
        } catch (const DegenerateDirection&) {
            continue;
        }
    }
    throw DegenerateDirection();
}

// ---- criteria ----------------------------------------------------------------

inline std::string criterion_ovf_axioms() {
    SplitMix64 rng(101);
    for (int checked = 0; checked < 10000;) {
        KElem x = rand_kelem(rng, 3, true);
        KElem y = rand_kelem(rng, 3, true);
        if (x.sgn() < 0) x = -x;
        if (y.sgn() < 0) y = -y;
        if (x == y) continue;
        if ((y - x).sgn() < 0) std::swap(x, y);
        if (!(x.val() >= y.val()))
            return "0 < " + expr_string(x) + " < " + expr_string(y) + " but val(x) < val(y)";
        ++checked;
    }
    SplitMix64 rng2(102);
    for (int i = 0; i < 10000; ++i) {
        KElem a = rand_kelem(rng2, 3);
        KElem b = rand_kelem(rng2, 3);
        KVal va = a.val(), vb = b.val(), vs = (a + b).val();
        if (!(vs >= min(va, vb))) return "ultrametric inequality failed";
        if (va != vb && vs != min(va, vb))
            return "ultrametric equality failed for distinct valuations";
    }
    return "";
}

inline std::string criterion_near_point_conformance() {
    SplitMix64 rng(202);
    RatFunc x[2] = {RatFunc::variable(2, 0), RatFunc::variable(2, 1)};
    for (int i = 0; i < 500; ++i) {
        Point b = rand_rational_point(rng, 2);
        RatFunc van(2);
        do {
            van = RatFunc(2);
            for (int j = 0; j < 2; ++j)
                van += (x[j] - RatFunc::constant(2, b[static_cast<std::size_t>(j)])) *
                       RatFunc(rand_mpoly(rng, 2, 2));
        } while (van.zero());
        MPoly<KElem> q(2);
        do {
            q = rand_mpoly(rng, 2, 2, true);
        } while (eval(q, b).is_zero());
        RatFunc f = van / RatFunc(q);
        ValOrInf v = near_val_with_retry(b, f);
        if (v.inf || v.v.c[0] < 1)
            return "vanishing function got leading coordinate " + v.str() + " at " + b.str();
    }
    SplitMix64 rng2(203);
    for (int i = 0; i < 500; ++i) {
        Point b = rand_rational_point(rng2, 2);
        MPoly<KElem> p(2), q(2);
        do {
            p = rand_mpoly(rng2, 2, 2, true);
        } while (eval(p, b).is_zero());
        do {
            q = rand_mpoly(rng2, 2, 2, true);
        } while (eval(q, b).is_zero());
        RatFunc f = RatFunc(p) / RatFunc(q);
        KElem fb = eval(p, b) / eval(q, b);
        ValOrInf v = near_val_with_retry(b, f);
        ValGroupElem expect({0, fb.val().v});
        if (v.inf || !(v.v == expect))
            return "nonvanishing value " + v.str() + " instead of " + expect.str();
    }
    return "";
}

inline std::string criterion_positive_substitution_sign() {
    SplitMix64 rng(303);
    for (int i = 0; i < 500; ++i) {
        Point b = rand_rational_point(rng, 2);
        MPoly<KElem> p = rand_mpoly(rng, 2, 2, true);
        int tries = 0;
        while (eval(p, b).sgn() <= 0 && tries++ < 10) p = rand_mpoly(rng, 2, 2, true);
        if (eval(p, b).sgn() <= 0)
            p = p * p + MPoly<KElem>::constant(2, KElem(1));
        RatFunc f(p);
        std::vector<KElem> dc = {KElem(rat(static_cast<long>(rng.range(-5, 5)))),
                                 KElem(rat(static_cast<long>(rng.range(-5, 5))))};
        if (dc[0].is_zero() && dc[1].is_zero()) dc[0] = KElem(1);
        Point d(std::move(dc));
        int sign = 0;
        for (int attempt = -1;; ++attempt) {
            if (attempt >= 24) return "no usable direction found";
            try {
                sign = substitution_order_sign(b, attempt < 0 ? d : retry_direction(2, attempt), f);
                break;
            } catch (const DegenerateDirection&) {
            }
        }
        if (sign != 1)
            return "p(b) > 0 but substitution sign is " + std::to_string(sign) + " at " + b.str();
    }
    return "";
}

inline std::string criterion_cone_generators_integral() {
    struct Family {
        SetDescription s;
        std::uint64_t seed;
        int budget;
    };
    std::vector<Family> fams = {{interval_set(), 404, 600}, {simplex_set(), 405, 1500}};
    for (const auto& fam : fams) {
        SampleResult pts = sample_set(fam.s, SampleStrategy::pseudorandom(fam.seed, fam.budget, {1, 2}));
        if (pts.points.size() < 100)
            return "sampling produced only " + std::to_string(pts.points.size()) + " members";
        SplitMix64 rng(fam.seed + 1);
        for (int c = 0; c < 100; ++c) {
            ConeCert cert = rand_cone_cert(rng, fam.s);
            for (std::size_t k = 0; k < 100; ++k) {
                auto fv = try_eval_cone(cert, fam.s, pts.points[k]);
                if (!fv) continue;
                KElem gen = KElem(1) / (KElem(1) + *fv);
                KVal v = gen.val();
                if (!v.inf && v.v < 0)
                    return "generator value has negative valuation at " + pts.points[k].str();
            }
        }
    }
    return "";
}

inline std::string criterion_radical_verifier() {
    CertificateFile f = shipped_bounded_cert();
    RadicalVerdict v = verify_radical_cert(f.radical, f.set);
    if (!v.valid) return "shipped certificate rejected with residual " + expr_string(v.residual);
    SplitMix64 rng(505);
    for (int i = 0; i < 20; ++i) {
        CertificateFile g = shipped_bounded_cert();
        std::size_t ci = rng.below(g.radical.coeffs.size());
        std::vector<int> mono{static_cast<int>(rng.below(3))};
        KElem delta = KElem::eps(1 + static_cast<int>(rng.below(2))) *
                      KElem(rat(1 + static_cast<long>(rng.below(3))));
        g.radical.coeffs[ci].a.add_term(mono, delta);
        RadicalVerdict pv = verify_radical_cert(g.radical, g.set);
        if (pv.valid) return "perturbation " + std::to_string(i) + " still verified as valid";
        if (pv.residual.zero()) return "invalid verdict carried a zero residual";
    }
    return "";
}

inline std::string criterion_semisection_laws() {
    struct Instance {
        std::string name;
        Valuation v;
        RatFunc forced_elem;
        ValGroupElem forced_gamma;
    };
    RatFunc x1 = RatFunc::variable(1, 0);
    std::vector<Instance> instances;
    instances.push_back({"near-point", Valuation::near_point(Point({KElem(0)}), Point({KElem(1)})),
                         x1, ValGroupElem({1, 0})});
    instances.push_back({"weighted-gauss", Valuation::weighted_gauss({1}), x1, ValGroupElem({1})});
    SplitMix64 rng(606);
    for (const auto& inst : instances) {
        SemiSection ss = build_semisection(inst.v, {{inst.forced_gamma, inst.forced_elem}});
        std::size_t r = inst.v.rank();
        for (int i = 0; i < 200; ++i) {
            std::vector<long long> c1(r), c2(r);
            for (auto& c : c1) c = rng.range(-5, 5);
            for (auto& c : c2) c = rng.range(-5, 5);
            ValGroupElem g1(c1), g2(c2);
            RatFunc s1 = ss.section(g1), s2 = ss.section(g2), s12 = ss.section(g1 + g2);
            ValOrInf v1 = inst.v.val_of(s1);
            if (v1.inf || !(v1.v == g1))
                return inst.name + ": val(s(g)) = " + v1.str() + " != " + g1.str();
            RatFunc w = ss.law_witness(g1, g2);
            if (!(w * w == s12 / (s1 * s2)))
                return inst.name + ": law witness square mismatch at " + g1.str() + ", " + g2.str();
        }
        RatFunc fw = ss.forcing_witness(0);
        if (!(fw * fw == ss.section(inst.forced_gamma) / inst.forced_elem))
            return inst.name + ": forcing witness square mismatch";
    }
    return "";
}

inline std::string criterion_baer_krull_order() {
    auto instances = pipeline_instances();
    std::uint64_t seed = 707;
    for (const auto& inst : instances) {
        PipelineResult pr = sufficiency_pipeline(inst.v, inst.s);
        if (!pr.success()) return inst.name + ": pipeline failed";
        const OrderHandle& oh = *pr.order;
        SplitMix64 rng(seed++);
        int convexity_checked = 0;
        for (int i = 0; i < 1000; ++i) {
            RatFunc f = rand_ratfunc(rng, inst.s.nvars, 2, true);
            RatFunc g = rand_ratfunc(rng, inst.s.nvars, 2, true);
            int sf = oh.sign(f), sg = oh.sign(g);
            if (sf == 0 || sg == 0) return inst.name + ": nonzero element got sign 0";
            if (oh.sign(-f) != -sf) return inst.name + ": trichotomy failed";
            if (oh.sign(f * g) != sf * sg) return inst.name + ": multiplicativity failed";
            if (sf == 1 && sg == 1 && oh.sign(f + g) != 1)
                return inst.name + ": sum of positives not positive";
            // inducing: valuation-zero elements take the residue-order sign
            ValOrInf vf = oh.v.val_of(f);
            RatFunc f0 = f / oh.s.section(vf.v);
            if (oh.sign(f0) != oh.ro.sign(oh.v.residue_of(f0)))
                return inst.name + ": order does not induce the residue order";
            if (sf == 1 && sg == 1 && oh.sign(g - f) == 1) {
                ++convexity_checked;
                if (!(oh.v.val_of(f) >= oh.v.val_of(g)))
                    return inst.name + ": convexity failed (0 < f < g with val(f) < val(g))";
            }
        }
        if (convexity_checked == 0) return inst.name + ": no convexity pairs sampled";
    }
    return "";
}

inline std::string criterion_sufficiency_pipeline() {
    for (const auto& inst : pipeline_instances()) {
        PipelineResult pr = sufficiency_pipeline(inst.v, inst.s);
        if (!pr.success()) return inst.name + ": pipeline did not return an order";
        for (const auto& pi : inst.s.p)
            if (pr.order->sign(RatFunc(pi)) != 1)
                return inst.name + ": constraint " + expr_string(pi) + " not positive";
    }
    return "";
}

inline std::string criterion_probe_consistency() {
    std::vector<CertificateFile> shipped = {shipped_reciprocal_cert(), shipped_bounded_cert()};
    for (const auto& f : shipped) {
        RadicalVerdict v = verify_radical_cert(f.radical, f.set);
        if (!v.valid) return "shipped certificate unexpectedly invalid";
        ProbeReport rep = integrality_probe(f.radical.h, f.set,
                                            SampleStrategy::pseudorandom(9001, 500, {1, 2, -1}));
        if (rep.violation)
            return "probe found a violation against a valid certificate at " + rep.witness.str();
        if (rep.tested + rep.skipped_undefined < 500) return "probe lost sample points";
    }
    ProbeReport rep = integrality_probe(parse_ratfunc("1/x1", 1), halfline_set(),
                                        SampleStrategy::pseudorandom(7, 200, {1, 2, -1}));
    if (!rep.violation) return "1/x1 on {x1 > 0}: no violation within 200 samples at seed 7";
    if (!point_in_set(halfline_set(), rep.witness)) return "violation witness is not in S";
    KElem re = eval(parse_ratfunc("1/x1", 1), rep.witness);
    if (!(re == rep.value) || re.val() != rep.val || re.val().inf || re.val().v >= 0)
        return "violation witness does not reproduce";
    return "";
}

inline std::string criterion_handelman_roundtrip() {
    SetDescription s = interval_set();
    MPoly<KElem> target = parse_ratfunc("x1 - x1^2", 1).num();
    auto cert = handelman_search(s, target, 2);
    if (!cert) return "no certificate found for x1 - x1^2 over (x1, 1 - x1)";
    if (!(cone_value(*cert, s) == RatFunc(target))) return "certificate value differs from target";
    auto none = handelman_search(halfline_set(), parse_ratfunc("-x1", 1).num(), 3);
    if (none) return "-x1 over (x1) unexpectedly got a certificate";
    return "";
}

inline std::string criterion_serialization(const std::string& cli_path) {
    SplitMix64 rng(1111);
    SetDescription cone_set = interval_set();
    for (int i = 0; i < 100; ++i) {
        CertificateFile f;
        f.nvars = cone_set.nvars;
        f.set = cone_set;
        f.kind = CertificateFile::Kind::Cone;
        f.cone = rand_cone_cert(rng, cone_set);
        CertificateFile g = read_certificate(write_certificate(f));
        if (!(cone_value(g.cone, g.set) == cone_value(f.cone, f.set)))
            return "cone certificate " + std::to_string(i) + " changed value through the file format";
    }
    SetDescription rad_set(1, {parse_ratfunc("x1", 1).num()}, {parse_ratfunc("1/(1 + x1)", 1)});
    SplitMix64 rng2(1112);
    for (int i = 0; i < 100; ++i) {
        CertificateFile f;
        f.nvars = rad_set.nvars;
        f.set = rad_set;
        f.kind = CertificateFile::Kind::Radical;
        f.radical = rand_radical_cert(rng2, rad_set);
        CertificateFile g = read_certificate(write_certificate(f));
        // each component value is exact-compared; together they determine
        // the certificate's expanded value
        if (!(g.radical.h == f.radical.h)) return "radical h changed through the file format";
        if (g.radical.generators.size() != f.radical.generators.size())
            return "generator count changed";
        for (std::size_t k = 0; k < f.radical.generators.size(); ++k)
            if (!(g.radical.generators[k] == f.radical.generators[k]))
                return "generator " + std::to_string(k) + " changed through the file format";
        if (g.radical.coeffs.size() != f.radical.coeffs.size()) return "coefficient count changed";
        for (std::size_t k = 0; k < f.radical.coeffs.size(); ++k)
            if (!(g.radical.coeffs[k] == f.radical.coeffs[k]))
                return "radical coefficient " + std::to_string(k) + " changed value";
    }
    if (cli_path.empty()) return "no CLI path supplied for the determinism check";
    std::vector<std::string> cmds = {
        "\"" + cli_path + "\" probe-integrality --h \"1/x1\" --set \"p: x1\" --seed 7 --count 200",
        "\"" + cli_path + "\" parse \"(1 - x1^2) / (1 + eps)\"",
    };
    for (const auto& cmd : cmds) {
        CmdResult r1 = run_command(cmd);
        CmdResult r2 = run_command(cmd);
        if (r1.output != r2.output || r1.status != r2.status)
            return "CLI output differs between runs of: " + cmd;
        if (r1.output.empty()) return "CLI produced no output for: " + cmd;
    }
    return "";
}

// ---- driver ------------------------------------------------------------------

struct Criterion {
    int number;
    std::string name;
    std::function<std::string()> body;
};

inline int run_all(std::ostream& out, const std::string& cli_path) {
    std::vector<Criterion> list = {
        {1, "ovf axioms: order/valuation compatibility and the ultrametric law", criterion_ovf_axioms},
        {2, "near-point conformance: vanishing and nonvanishing functions", criterion_near_point_conformance},
        {3, "positive functions get positive substitution signs", criterion_positive_substitution_sign},
        {4, "cone generators 1/(1+f) are integral on sampled members of S", criterion_cone_generators_integral},
        {5, "radical verifier: shipped certificate valid, perturbations invalid", criterion_radical_verifier},
        {6, "semi-section laws with explicit square witnesses", criterion_semisection_laws},
        {7, "baer-krull order: field-order laws, inducing, convexity", criterion_baer_krull_order},
        {8, "sufficiency pipeline makes every constraint positive", criterion_sufficiency_pipeline},
        {9, "probe consistency with valid certificates; 1/x1 refuted", criterion_probe_consistency},
        {10, "handelman search round trip and honest unknowns", criterion_handelman_roundtrip},
        {11, "serialization round trips; CLI output deterministic",
         [cli_path]() { return criterion_serialization(cli_path); }},
    };
    int failures = 0;
    for (const auto& c : list) {
        std::string detail;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            out << "PASS  criterion " << c.number << ": " << c.name << "\n";
        } else {
            out << "FAIL  criterion " << c.number << ": " << c.name << " -- " << detail << "\n";
            ++failures;
        }
    }
    out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
        << "\n";
    return failures;
}

} // namespace selftest
} // namespace ganz

#endif
