// ganz: exact toolkit for integrality certificates and order construction
// over the ordered valued field Q(eps).
//
// Exit codes: 0 valid/pass/no-violation, 1 invalid/refuted/violation,
// 2 usage or input error, 3 degenerate input (no usable direction, empty
// sample, residue-order search exhausted).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ganz/baer_krull.hpp"
#include "ganz/certfile.hpp"
#include "ganz/handelman.hpp"
#include "ganz/probe.hpp"
#include "ganz/selftest.hpp"

namespace {

using namespace ganz;

constexpr int kExitPass = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// --set "p: x1; 1 - x1 | g: 1/(1 + x1)"
struct SetSpec {
    std::vector<std::string> p, g;

    static SetSpec parse(const std::string& text) {
        SetSpec spec;
        for (const std::string& rawsec : split(text, '|')) {
            std::string sec = strip(rawsec);
            if (sec.empty()) continue;
            char head = sec[0];
            if ((head != 'p' && head != 'g') || sec.size() < 2 || sec[1] != ':')
                throw Error("set sections must look like \"p: ...\" or \"g: ...\"");
            for (const std::string& entry : split(sec.substr(2), ';')) {
                std::string e = strip(entry);
                if (e.empty()) continue;
                (head == 'p' ? spec.p : spec.g).push_back(e);
            }
        }
        return spec;
    }

    int max_var_index() const {
        int mx = 0;
        for (const auto& e : p) mx = std::max(mx, detail::scan_max_var_index(e));
        for (const auto& e : g) mx = std::max(mx, detail::scan_max_var_index(e));
        return mx;
    }

    SetDescription build(int nvars) const {
        SetDescription s;
        s.nvars = nvars;
        for (const auto& e : p) {
            RatFunc f = parse_ratfunc(e, nvars);
            if (!f.is_polynomial()) throw Error("constraint is not a polynomial: " + e);
            s.p.push_back(f.num());
        }
        for (const auto& e : g) s.g.push_back(parse_ratfunc(e, nvars));
        return s;
    }
};

Point parse_point(const std::string& text, const char* what) {
    Point b;
    for (const std::string& entry : split(text, ',')) {
        std::string e = strip(entry);
        if (e.empty()) throw Error(std::string(what) + ": empty coordinate");
        b.coords.push_back(parse_kelem(e));
    }
    return b;
}

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    for (const std::string& entry : split(text, ',')) {
        std::string e = strip(entry);
        if (e.empty()) continue;
        try {
            out.push_back(std::stoll(e));
        } catch (const std::exception&) {
            throw Error(std::string(what) + ": expected an integer, got '" + e + "'");
        }
    }
    return out;
}

std::vector<int> parse_eps_orders(const std::string& text) {
    std::vector<int> out;
    for (long long v : parse_int_list(text, "--eps-orders")) out.push_back(static_cast<int>(v));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ProbeFlags {
    std::string set_text;
    std::uint64_t seed = 0;
    int count = 200;
    std::string grid_step, radius;
    std::string eps_orders = "1,2,-1";

    SampleStrategy strategy() const {
        std::vector<int> eps = parse_eps_orders(eps_orders);
        if (!grid_step.empty()) {
            Rat step = parse_kelem(grid_step).as_rational();
            Rat rad = radius.empty() ? Rat(1) : parse_kelem(radius).as_rational();
            return SampleStrategy::grid(step, rad, eps);
        }
        return SampleStrategy::pseudorandom(seed, count, eps);
    }
};

int report_probe(const std::string& command, const std::string& hdr_h, const RatFunc& h,
                 const SetDescription& s, const SampleStrategy& st, const ProbeReport& rep,
                 const std::string& extra = "") {
    std::cout << "command: " << command << "\n";
    std::cout << "h: " << hdr_h << "\n";
    if (!extra.empty()) std::cout << extra;
    std::cout << "set: " << s.str() << "\n";
    std::cout << "strategy: " << st.str() << "\n";
    std::cout << "tested: " << rep.tested << "\n";
    std::cout << "skipped-undefined: " << rep.skipped_undefined << "\n";
    if (rep.violation) {
        std::cout << "verdict: violation\n";
        std::cout << "witness: " << rep.witness.str() << "\n";
        KElem hb = eval(h.extended(s.nvars), rep.witness);
        std::cout << "value: " << expr_string(hb) << "\n";
        std::cout << "val: " << rep.val.str() << "\n";
        return kExitRefuted;
    }
    if (rep.nonemptiness_unknown) {
        std::cout << "verdict: nonemptiness-unknown\n";
        std::cout << "note: the budget produced no member of S; nothing was tested\n";
        return kExitDegenerate;
    }
    std::cout << "verdict: no-violation-found\n";
    std::cout << "note: sampling is a refutation tool; absence of a violation proves nothing\n";
    return kExitPass;
}

int cmd_parse(const std::string& expr) {
    RatFunc f = parse_ratfunc(expr);
    std::cout << "command: parse\n";
    std::cout << "input: " << expr << "\n";
    std::cout << "canonical: " << expr_string(f) << "\n";
    return kExitPass;
}

int cmd_val(const std::string& expr) {
    KElem a = parse_kelem(expr);
    std::cout << "command: val\n";
    std::cout << "input: " << expr << "\n";
    std::cout << "value: " << expr_string(a) << "\n";
    std::cout << "val: " << a.val().str() << "\n";
    return kExitPass;
}

int cmd_sign(const std::string& expr) {
    KElem a = parse_kelem(expr);
    std::cout << "command: sign\n";
    std::cout << "input: " << expr << "\n";
    std::cout << "sign: " << (a.sgn() > 0 ? "+1" : a.sgn() < 0 ? "-1" : "0") << "\n";
    return kExitPass;
}

int cmd_near_val(const std::string& h_text, const std::string& b_text, const std::string& d_text) {
    Point b = parse_point(b_text, "--b");
    Point d = parse_point(d_text, "--d");
    int nvars = std::max(static_cast<int>(b.size()), detail::scan_max_var_index(h_text));
    RatFunc h = parse_ratfunc(h_text, nvars);
    std::cout << "command: near-val\n";
    std::cout << "h: " << expr_string(h) << "\n";
    std::cout << "b: " << b.str() << "\n";
    std::cout << "d: " << d.str() << "\n";
    Valuation v = Valuation::near_point(b, d);
    ValOrInf val = v.val_of(h);
    int sg = substitution_order_sign(b, d, h);
    std::cout << "val: " << val.str() << "\n";
    std::cout << "sign: " << (sg > 0 ? "+1" : sg < 0 ? "-1" : "0") << "\n";
    return kExitPass;
}

int cmd_cone_verify(const std::string& path, const std::string& b_text, const std::string& format) {
    CertificateFile f = read_certificate(read_file(path));
    if (f.kind != CertificateFile::Kind::Cone) throw StructuralError("expected a cone certificate");
    std::cout << "command: cone-verify\n";
    std::cout << "file: " << path << "\n";
    std::cout << "set: " << f.set.str() << "\n";
    RatFunc value = cone_value(f.cone, f.set);
    std::cout << "cone-value: " << expr_string(value) << "\n";
    if (!b_text.empty()) {
        Point b = parse_point(b_text, "--b");
        bool ok = verify_cone_pointwise(f.cone, f.set, b);
        KElem at = eval(value, b);
        std::cout << "pointwise-at: " << b.str() << "\n";
        std::cout << "pointwise-value: " << expr_string(at) << "\n";
        std::cout << "pointwise: " << (ok ? "nonnegative" : "NEGATIVE TERM") << "\n";
        if (!ok) return kExitRefuted;
    }
    std::cout << "verdict: well-formed\n";
    if (format == "structured") std::cout << write_certificate(f);
    return kExitPass;
}

int cmd_cone_search(const std::string& set_text, const std::string& target_text, int degree_bound,
                    const std::string& format) {
    SetSpec spec = SetSpec::parse(set_text);
    int nvars = std::max(spec.max_var_index(), detail::scan_max_var_index(target_text));
    SetDescription s = spec.build(nvars);
    RatFunc tf = parse_ratfunc(target_text, nvars);
    if (!tf.is_polynomial()) throw Error("target must be a polynomial");
    MPoly<KElem> target = tf.num();
    std::cout << "command: cone-search\n";
    std::cout << "set: " << s.str() << "\n";
    std::cout << "target: " << expr_string(target) << "\n";
    std::cout << "degree-bound: " << degree_bound << "\n";
    auto cert = handelman_search(s, target, degree_bound);
    if (!cert) {
        std::cout << "verdict: unknown\n";
        std::cout << "note: the bounded search is incomplete; unknown is not a refutation\n";
        return kExitRefuted;
    }
    std::cout << "verdict: found\n";
    if (format == "structured") {
        CertificateFile f;
        f.nvars = nvars;
        f.set = s;
        f.kind = CertificateFile::Kind::Cone;
        f.cone = *cert;
        std::cout << write_certificate(f);
    } else {
        for (const auto& [subset, sos] : cert->terms) {
            std::cout << "term: J={";
            for (std::size_t i = 0; i < subset.size(); ++i)
                std::cout << (i ? "," : "") << subset[i] + 1;
            std::cout << "} sos=[";
            for (std::size_t i = 0; i < sos.parts.size(); ++i)
                std::cout << (i ? ", " : "") << expr_string(sos.parts[i]);
            std::cout << "]\n";
        }
    }
    return kExitPass;
}

int cmd_radical_verify(const std::string& path, const std::string& format) {
    CertificateFile f = read_certificate(read_file(path));
    if (f.kind != CertificateFile::Kind::Radical)
        throw StructuralError("expected a radical certificate");
    std::cout << "command: radical-verify\n";
    std::cout << "file: " << path << "\n";
    std::cout << "set: " << f.set.str() << "\n";
    std::cout << "h: " << expr_string(f.radical.h) << "\n";
    std::cout << "degree: " << f.radical.coeffs.size() << "\n";
    RadicalVerdict v = verify_radical_cert(f.radical, f.set);
    if (v.valid) {
        std::cout << "verdict: valid\n";
        if (format == "structured") std::cout << write_certificate(f);
        return kExitPass;
    }
    std::cout << "verdict: invalid\n";
    std::cout << "residual: " << expr_string(v.residual) << "\n";
    return kExitRefuted;
}

int cmd_order_pipeline(const std::string& set_text, const std::string& w_text,
                       const std::string& b_text, const std::string& d_text) {
    SetSpec spec = SetSpec::parse(set_text);
    int nvars = spec.max_var_index();
    if (!b_text.empty()) nvars = std::max<int>(nvars, static_cast<int>(split(b_text, ',').size()));
    if (!w_text.empty()) nvars = std::max<int>(nvars, static_cast<int>(split(w_text, ',').size()));
    if (nvars == 0) nvars = 1;
    SetDescription s = spec.build(nvars);

    Valuation v = Valuation::weighted_gauss({1});
    if (!w_text.empty()) {
        std::vector<long long> w = parse_int_list(w_text, "--w");
        w.resize(static_cast<std::size_t>(nvars), 0);
        v = Valuation::weighted_gauss(w);
    } else if (!b_text.empty() && !d_text.empty()) {
        v = Valuation::near_point(parse_point(b_text, "--b"), parse_point(d_text, "--d"));
    } else {
        throw Error("order-pipeline needs --w or both --b and --d");
    }

    std::cout << "command: order-pipeline\n";
    std::cout << "set: " << s.str() << "\n";
    std::cout << "valuation: " << v.str() << "\n";
    PipelineResult pr = sufficiency_pipeline(v, s);
    std::cout << "chosen:";
    for (std::size_t i : pr.basis.chosen) std::cout << " p" << i + 1;
    if (pr.basis.chosen.empty()) std::cout << " none";
    std::cout << "\n";
    for (const auto& [i, r] : pr.residues)
        std::cout << "even-residue: p" << i + 1 << " -> " << r.str() << "\n";
    if (!pr.success()) {
        std::cout << "verdict: "
                  << (pr.status == PipelineResult::Status::ResidueOrderNotFound
                          ? "residue-order-not-found"
                          : "hypothesis-violated")
                  << "\n";
        std::cout << "detail: " << pr.detail << "\n";
        return pr.status == PipelineResult::Status::ResidueOrderNotFound ? kExitDegenerate
                                                                         : kExitRefuted;
    }
    std::cout << "residue-order: " << pr.order->ro.str() << "\n";
    for (const auto& pi : s.p)
        std::cout << "sign: " << expr_string(pi) << " -> +1\n";
    std::cout << "verdict: order-constructed\n";
    return kExitPass;
}

int cmd_probe_integrality(const std::string& h_text, const ProbeFlags& flags) {
    SetSpec spec = SetSpec::parse(flags.set_text);
    int nvars = std::max(spec.max_var_index(), detail::scan_max_var_index(h_text));
    if (nvars == 0) nvars = 1;
    SetDescription s = spec.build(nvars);
    RatFunc h = parse_ratfunc(h_text, nvars);
    SampleStrategy st = flags.strategy();
    ProbeReport rep = integrality_probe(h, s, st);
    return report_probe("probe-integrality", expr_string(h), h, s, st, rep);
}

int cmd_probe_bounded(const std::string& h_text, const std::string& bound_text,
                      const ProbeFlags& flags) {
    SetSpec spec = SetSpec::parse(flags.set_text);
    int nvars = std::max(spec.max_var_index(), detail::scan_max_var_index(h_text));
    if (nvars == 0) nvars = 1;
    SetDescription s = spec.build(nvars);
    RatFunc h = parse_ratfunc(h_text, nvars);
    KElem a = parse_kelem(bound_text);
    SampleStrategy st = flags.strategy();
    ProbeReport rep = boundedness_probe(h, a, s, st);
    std::string extra = "bound: " + expr_string(a) + "\nbound-val: " + a.val().str() + "\n";
    return report_probe("probe-bounded", expr_string(h), h, s, st, rep, extra);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integrality certificates and orders over Q(eps)"};
    app.require_subcommand(1);
    // --h is a normative flag name, so help keeps only its long form
    app.set_help_flag("--help", "print help");

    std::string expr, h_text, b_text, d_text, w_text, set_text, target_text, bound_text;
    std::string format = "text", file_path;
    ProbeFlags probe_flags;
    int degree_bound = 2;

    CLI::App* c_parse = app.add_subcommand("parse", "parse an expression and print it canonically");
    c_parse->set_help_flag("--help", "print help");
    c_parse->add_option("expr", expr, "expression")->required();

    CLI::App* c_val = app.add_subcommand("val", "valuation of a constant expression");
    c_val->set_help_flag("--help", "print help");
    c_val->add_option("expr", expr, "constant expression")->required();

    CLI::App* c_sign = app.add_subcommand("sign", "sign of a constant expression");
    c_sign->set_help_flag("--help", "print help");
    c_sign->add_option("expr", expr, "constant expression")->required();

    CLI::App* c_nearval = app.add_subcommand("near-val", "near-point valuation and substitution sign");
    c_nearval->set_help_flag("--help", "print help");
    c_nearval->add_option("--h", h_text, "rational function")->required();
    c_nearval->add_option("--b", b_text, "base point, comma-separated")->required();
    c_nearval->add_option("--d", d_text, "direction, comma-separated")->required();

    CLI::App* c_coneverify = app.add_subcommand("cone-verify", "recompute a cone certificate");
    c_coneverify->set_help_flag("--help", "print help");
    c_coneverify->add_option("file", file_path, "certificate file")->required();
    c_coneverify->add_option("--b", b_text, "optional point for a pointwise check");
    c_coneverify->add_option("--format", format, "text|structured");

    CLI::App* c_conesearch = app.add_subcommand("cone-search", "bounded-degree cone representation search");
    c_conesearch->set_help_flag("--help", "print help");
    c_conesearch->add_option("--set", set_text, "constraints")->required();
    c_conesearch->add_option("--target", target_text, "target polynomial")->required();
    c_conesearch->add_option("--degree-bound", degree_bound, "total degree cap");
    c_conesearch->add_option("--format", format, "text|structured");

    CLI::App* c_radical = app.add_subcommand("radical-verify", "verify an integral-radical certificate");
    c_radical->set_help_flag("--help", "print help");
    c_radical->add_option("file", file_path, "certificate file")->required();
    c_radical->add_option("--format", format, "text|structured");

    CLI::App* c_pipeline = app.add_subcommand("order-pipeline", "construct a compatible order making the constraints positive");
    c_pipeline->set_help_flag("--help", "print help");
    c_pipeline->add_option("--set", set_text, "constraints")->required();
    c_pipeline->add_option("--w", w_text, "weighted-gauss weights");
    c_pipeline->add_option("--b", b_text, "near-point base");
    c_pipeline->add_option("--d", d_text, "near-point direction");

    CLI::App* c_probe = app.add_subcommand("probe-integrality", "sample S and test integrality of h");
    c_probe->set_help_flag("--help", "print help");
    c_probe->add_option("--h", h_text, "rational function")->required();
    c_probe->add_option("--set", probe_flags.set_text, "set description");
    c_probe->add_option("--seed", probe_flags.seed, "pseudorandom seed");
    c_probe->add_option("--count", probe_flags.count, "pseudorandom candidate count");
    c_probe->add_option("--grid-step", probe_flags.grid_step, "grid step (switches to grid sampling)");
    c_probe->add_option("--radius", probe_flags.radius, "grid radius");
    c_probe->add_option("--eps-orders", probe_flags.eps_orders, "eps powers mixed into coordinates");

    CLI::App* c_bounded = app.add_subcommand("probe-bounded", "sample S and test boundedness of h by a");
    c_bounded->set_help_flag("--help", "print help");
    c_bounded->add_option("--h", h_text, "rational function")->required();
    c_bounded->add_option("--bound", bound_text, "bound element a")->required();
    c_bounded->add_option("--set", probe_flags.set_text, "set description");
    c_bounded->add_option("--seed", probe_flags.seed, "pseudorandom seed");
    c_bounded->add_option("--count", probe_flags.count, "pseudorandom candidate count");
    c_bounded->add_option("--grid-step", probe_flags.grid_step, "grid step (switches to grid sampling)");
    c_bounded->add_option("--radius", probe_flags.radius, "grid radius");
    c_bounded->add_option("--eps-orders", probe_flags.eps_orders, "eps powers mixed into coordinates");

    CLI::App* c_selftest = app.add_subcommand("selftest", "run the full acceptance suite");
    c_selftest->set_help_flag("--help", "print help");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c_parse->parsed()) return cmd_parse(expr);
        if (c_val->parsed()) return cmd_val(expr);
        if (c_sign->parsed()) return cmd_sign(expr);
        if (c_nearval->parsed()) return cmd_near_val(h_text, b_text, d_text);
        if (c_coneverify->parsed()) return cmd_cone_verify(file_path, b_text, format);
        if (c_conesearch->parsed()) return cmd_cone_search(set_text, target_text, degree_bound, format);
        if (c_radical->parsed()) return cmd_radical_verify(file_path, format);
        if (c_pipeline->parsed()) return cmd_order_pipeline(set_text, w_text, b_text, d_text);
        if (c_probe->parsed()) return cmd_probe_integrality(h_text, probe_flags);
        if (c_bounded->parsed()) return cmd_probe_bounded(h_text, bound_text, probe_flags);
        if (c_selftest->parsed()) {
            int failures = selftest::run_all(std::cout, argv[0]);
            return failures == 0 ? kExitPass : kExitRefuted;
        }
    } catch (const DegenerateDirection& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StructuralError& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
