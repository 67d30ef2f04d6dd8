#ifndef GANZ_CERTFILE_HPP
#define GANZ_CERTFILE_HPP

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ganz/certificates.hpp"
#include "ganz/parse.hpp"

namespace ganz {

// On-disk certificate document.  Field names and nesting are normative;
// unknown fields are rejected.  Every expression uses the toolkit grammar,
// subsets are written 1-based.
struct CertificateFile {
    enum class Kind { Cone, Radical };

    int version = 1;
    int nvars = 0;
    SetDescription set;
    Kind kind = Kind::Cone;
    ConeCert cone;
    RadicalCert radical;
};

namespace certfile_detail {

using json = nlohmann::ordered_json;

inline void require_keys(const json& j, const std::set<std::string>& allowed,
                         const std::set<std::string>& required, const char* where) {
    if (!j.is_object()) throw StructuralError(std::string(where) + ": expected an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k))
            throw StructuralError(std::string(where) + ": unknown field '" + k + "'");
    for (const auto& k : required)
        if (!j.contains(k))
            throw StructuralError(std::string(where) + ": missing field '" + k + "'");
}

inline json cone_to_json(const ConeCert& c) {
    json arr = json::array();
    for (const auto& [subset, sos] : c.terms) {
        json entry;
        json js = json::array();
        for (int i : subset) js.push_back(i + 1);
        entry["subset"] = js;
        json q = json::array();
        for (const auto& part : sos.parts) q.push_back(expr_string(part));
        entry["sos"] = q;
        arr.push_back(entry);
    }
    return arr;
}

inline ConeCert cone_from_json(const json& j, int nvars, std::size_t m) {
    if (!j.is_array()) throw StructuralError("cone: expected an array of terms");
    ConeCert c;
    for (const auto& entry : j) {
        require_keys(entry, {"subset", "sos"}, {"subset", "sos"}, "cone term");
        std::vector<int> subset;
        for (const auto& v : entry.at("subset")) {
            if (!v.is_number_integer()) throw StructuralError("cone term: subset indices must be integers");
            int idx = v.get<int>();
            if (idx < 1 || idx > static_cast<int>(m)) throw IndexOutOfRange();
            subset.push_back(idx - 1);
        }
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
        std::vector<RatFunc> parts;
        for (const auto& v : entry.at("sos")) {
            if (!v.is_string()) throw StructuralError("cone term: sos parts must be expressions");
            parts.push_back(parse_ratfunc(v.get<std::string>(), nvars));
        }
        c.set_term(std::move(subset), SOS(std::move(parts)));
    }
    return c;
}

inline json algebra_to_json(const AlgebraElem& a) {
    json terms = json::array();
    for (const auto& [mono, coeff] : a.poly) {
        json t;
        t["monomial"] = mono;
        t["coeff"] = expr_string(coeff);
        terms.push_back(t);
    }
    json out;
    out["poly"] = terms;
    return out;
}

inline AlgebraElem algebra_from_json(const json& j, const char* where) {
    require_keys(j, {"poly"}, {"poly"}, where);
    if (!j.at("poly").is_array()) throw StructuralError(std::string(where) + ": poly must be an array");
    AlgebraElem a;
    for (const auto& t : j.at("poly")) {
        require_keys(t, {"monomial", "coeff"}, {"monomial", "coeff"}, "algebra term");
        std::vector<int> mono;
        for (const auto& v : t.at("monomial")) {
            if (!v.is_number_integer()) throw StructuralError("algebra term: exponents must be integers");
            mono.push_back(v.get<int>());
        }
        if (!t.at("coeff").is_string()) throw StructuralError("algebra term: coeff must be an expression");
        a.add_term(std::move(mono), parse_kelem(t.at("coeff").get<std::string>()));
    }
    return a;
}

} // namespace certfile_detail

inline std::string write_certificate(const CertificateFile& f) {
    using certfile_detail::json;
    json j;
    j["version"] = f.version;
    j["nvars"] = f.nvars;
    json set;
    json ps = json::array();
    for (const auto& p : f.set.p) ps.push_back(expr_string(p));
    json gs = json::array();
    for (const auto& g : f.set.g) gs.push_back(expr_string(g));
    set["p"] = ps;
    set["g"] = gs;
    j["set"] = set;
    if (f.kind == CertificateFile::Kind::Cone) {
        j["kind"] = "cone";
        j["cone"] = certfile_detail::cone_to_json(f.cone);
    } else {
        j["kind"] = "radical";
        json r;
        r["h"] = expr_string(f.radical.h);
        json gens = json::array();
        for (const auto& g : f.radical.generators) gens.push_back(certfile_detail::cone_to_json(g));
        r["generators"] = gens;
        json coeffs = json::array();
        for (const auto& c : f.radical.coeffs) {
            json jc = certfile_detail::algebra_to_json(c.a);
            json out;
            out["poly"] = jc["poly"];
            out["t_m"] = expr_string(c.t_m);
            out["t_a"] = certfile_detail::algebra_to_json(c.t_a);
            coeffs.push_back(out);
        }
        r["coeffs"] = coeffs;
        j["radical"] = r;
    }
    return j.dump(2) + "\n";
}

inline CertificateFile read_certificate(const std::string& text) {
    using certfile_detail::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("certificate is not well-formed: ") + e.what());
    }
    certfile_detail::require_keys(j, {"version", "nvars", "set", "kind", "cone", "radical"},
                                  {"version", "nvars", "set", "kind"}, "certificate");
    CertificateFile f;
    if (!j.at("version").is_number_integer() || j.at("version").get<int>() != 1)
        throw StructuralError("unsupported certificate version");
    if (!j.at("nvars").is_number_integer() || j.at("nvars").get<int>() < 0)
        throw StructuralError("nvars must be a nonnegative integer");
    f.nvars = j.at("nvars").get<int>();

    certfile_detail::require_keys(j.at("set"), {"p", "g"}, {"p", "g"}, "set");
    f.set.nvars = f.nvars;
    for (const auto& v : j.at("set").at("p")) {
        if (!v.is_string()) throw StructuralError("set: p entries must be expressions");
        RatFunc pf = parse_ratfunc(v.get<std::string>(), f.nvars);
        if (!pf.is_polynomial()) throw StructuralError("set: constraints must be polynomials");
        f.set.p.push_back(pf.num());
    }
    for (const auto& v : j.at("set").at("g")) {
        if (!v.is_string()) throw StructuralError("set: g entries must be expressions");
        f.set.g.push_back(parse_ratfunc(v.get<std::string>(), f.nvars));
    }

    std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    if (kind == "cone") {
        f.kind = CertificateFile::Kind::Cone;
        if (!j.contains("cone") || j.contains("radical"))
            throw StructuralError("cone certificate must carry exactly the 'cone' payload");
        f.cone = certfile_detail::cone_from_json(j.at("cone"), f.nvars, f.set.p.size());
    } else if (kind == "radical") {
        f.kind = CertificateFile::Kind::Radical;
        if (!j.contains("radical") || j.contains("cone"))
            throw StructuralError("radical certificate must carry exactly the 'radical' payload");
        const json& r = j.at("radical");
        certfile_detail::require_keys(r, {"h", "generators", "coeffs"}, {"h", "generators", "coeffs"},
                                      "radical");
        if (!r.at("h").is_string()) throw StructuralError("radical: h must be an expression");
        f.radical.h = parse_ratfunc(r.at("h").get<std::string>(), f.nvars);
        for (const auto& g : r.at("generators"))
            f.radical.generators.push_back(certfile_detail::cone_from_json(g, f.nvars, f.set.p.size()));
        std::size_t gen_count = f.radical.generators.size() + f.set.g.size();
        for (const auto& c : r.at("coeffs")) {
            certfile_detail::require_keys(c, {"poly", "t_m", "t_a"}, {"poly", "t_m", "t_a"},
                                          "radical coefficient");
            LocalizedElem le;
            json wrapped;
            wrapped["poly"] = c.at("poly");
            le.a = certfile_detail::algebra_from_json(wrapped, "radical coefficient");
            if (!c.at("t_m").is_string()) throw StructuralError("radical coefficient: t_m must be an expression");
            le.t_m = parse_kelem(c.at("t_m").get<std::string>());
            le.t_a = certfile_detail::algebra_from_json(c.at("t_a"), "t_a");
            le.a.check_structure(gen_count);
            le.t_a.check_structure(gen_count);
            f.radical.coeffs.push_back(std::move(le));
        }
    } else {
        throw StructuralError("kind must be \"cone\" or \"radical\"");
    }
    return f;
}

} // namespace ganz

#endif
