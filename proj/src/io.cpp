#include "finhankel/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>

#include "finhankel/errors.hpp"

namespace finhankel {
namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) throw parse_error("unknown key '" + key + "' in " + where);
    }
}

double as_double(const json& v, const std::string& where) {
    if (!v.is_number()) throw parse_error(where + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw parse_error(where + " must be finite");
    return x;
}

complex as_complex(const json& v, const std::string& where) {
    if (v.is_number()) return {as_double(v, where), 0.0};
    if (!v.is_array() || v.size() != 2) throw parse_error(where + " must be [re, im] or a number");
    return {as_double(v[0], where + "[0]"), as_double(v[1], where + "[1]")};
}

const json& required(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw parse_error(where + " is missing '" + key + "'");
    return *it;
}

json nullable(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

RadialProfile parse_profile(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("profile document must be a JSON object");
    reject_unknown(doc, {"dimension", "vanishes_near_one", "terms"}, "profile");

    const json& dim = required(doc, "dimension", "profile");
    if (!dim.is_number_integer()) throw parse_error("dimension must be an integer");
    const auto dimension = dim.get<long long>();
    if (dimension < 2 || dimension > 1000) throw parse_error("dimension must lie in [2, 1000]");

    bool vanishes = false;
    if (auto it = doc.find("vanishes_near_one"); it != doc.end()) {
        if (!it->is_boolean()) throw parse_error("vanishes_near_one must be a boolean");
        vanishes = it->get<bool>();
    }

    const json& terms = required(doc, "terms", "profile");
    if (!terms.is_array()) throw parse_error("terms must be an array");
    if (terms.empty()) throw parse_error("terms must not be empty");
    std::vector<ProfileTerm> out;
    bool any_nonzero = false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string where = "terms[" + std::to_string(i) + "]";
        const json& t = terms[i];
        if (!t.is_object()) throw parse_error(where + " must be an object");
        reject_unknown(t, {"coeff", "lambda", "rho"}, where);
        ProfileTerm term{as_complex(required(t, "coeff", where), where + ".coeff"),
                         as_complex(required(t, "lambda", where), where + ".lambda"),
                         as_complex(required(t, "rho", where), where + ".rho")};
        any_nonzero = any_nonzero || term.coeff != complex{};
        out.push_back(term);
    }
    if (!any_nonzero) throw parse_error("every coefficient is zero");
    return RadialProfile(static_cast<int>(dimension), std::move(out), vanishes);
}

RadialProfile load_profile(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw parse_error("cannot open profile file '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_profile(text);
}

json profile_to_json(const RadialProfile& profile) {
    json terms = json::array();
    for (const auto& t : profile.terms()) {
        terms.push_back({{"coeff", complex_to_json(t.coeff)},
                         {"lambda", complex_to_json(t.lambda)},
                         {"rho", complex_to_json(t.rho)}});
    }
    return {{"dimension", profile.dimension()}, {"vanishes_near_one", profile.vanishes_near_one()}, {"terms", terms}};
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json complex_to_json(complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json term_to_json(const AsymptoticTerm& t) {
    json phase = nullptr;
    if (t.phase) phase = {{"freq", t.phase->freq}, {"offset", complex_to_json(t.phase->offset)}};
    return {{"amplitude", complex_to_json(t.amplitude)}, {"exponent", complex_to_json(t.exponent)}, {"phase", phase}};
}

json verdict_to_json(const Verdict& v) {
    return {{"status", to_string(v.status)}, {"rule", v.rule}, {"trace", v.trace}, {"children", json::array()}};
}

json certificate_to_json(const Certificate& c) {
    json children = json::array();
    for (const auto& child : c.children) children.push_back(certificate_to_json(child));
    json out = verdict_to_json(c.verdict);
    out["children"] = std::move(children);
    return out;
}

json check_report_to_json(const CheckReport& r, bool with_windows) {
    json out = {{"passed", r.passed},
                {"A", r.params.A},
                {"B", r.params.B},
                {"C", r.params.C},
                {"alpha", r.params.alpha},
                {"worst_margin", nullable(r.worst_margin)},
                {"worst_x", r.worst_x},
                {"windows_checked", r.windows.size()},
                {"tolerance_misses", r.tolerance_misses},
                {"warnings", r.warnings}};
    if (with_windows) {
        json rows = json::array();
        for (const auto& w : r.windows) {
            rows.push_back({{"x", w.x}, {"sup", w.sup}, {"threshold", w.threshold}, {"pass", w.pass}});
        }
        out["windows"] = std::move(rows);
    }
    return out;
}

json expansion_to_json(const RadialProfile& profile, int n_origin_terms, int max_k, int max_j) {
    const Order nu = profile.order();
    const auto origin = origin_expansion(profile, max_k);
    json c_k = json::array();
    for (const auto& c : origin.coeffs) c_k.push_back(complex_to_json(c));
    json K = json::array();
    json k0 = nullptr;
    if (!origin.all_zero()) {
        const auto ks = k_set(origin, nu);
        for (int k : ks.members) K.push_back(k);
        if (ks.k0) k0 = *ks.k0;
    }
    json origin_doc = {{"mu", complex_to_json(origin.mu)},
                       {"c_k", c_k},
                       {"K", K},
                       {"k0", k0},
                       {"max_k", origin.max_k},
                       {"K_provably_empty", K.empty() && k_set_provably_empty(profile)}};

    json boundary_doc = nullptr;
    if (!profile.vanishes_near_one()) {
        const auto b = boundary_expansion(profile, max_j, 0);
        json lambda_k = json::array(), a_k = json::array();
        for (const auto& t : b.terms) {
            lambda_k.push_back(complex_to_json(t.exponent));
            a_k.push_back(complex_to_json(t.coeff));
        }
        boundary_doc = {{"lambda_k", lambda_k}, {"a_k", a_k}, {"Lambda", complex_to_json(b.Lambda)}};
    }

    const auto p = predict(profile, n_origin_terms, max_k, max_j);
    json terms = json::array();
    for (const auto& t : p.origin_terms) {
        json j = term_to_json(t);
        j["family"] = "origin";
        terms.push_back(std::move(j));
    }
    for (const auto& t : p.boundary_terms) {
        json j = term_to_json(t);
        j["family"] = "boundary";
        terms.push_back(std::move(j));
    }
    return {{"dimension", profile.dimension()},
            {"nu", profile.nu()},
            {"origin", origin_doc},
            {"boundary", boundary_doc},
            {"terms", terms},
            {"valid_error_order", nullable(p.valid_error_order)}};
}

}  // namespace finhankel
