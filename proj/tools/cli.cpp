#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finhankel/errors.hpp"
#include "finhankel/io.hpp"
#include "finhankel/quadrature.hpp"

namespace finhankel::cli {
namespace {

enum class Format { csv, json };
enum class Spacing { linear, log };
enum class Snap { none, extrema, zeros };

struct RunConfig {
    std::string profile_path;
    double r_min = 10.0;
    double r_max = 1000.0;
    int count = 16;
    Spacing spacing = Spacing::log;
    std::optional<Format> format;
    int max_k = 8;
    int n_terms = 1;
    std::optional<int> N;
    QuadratureConfig quad;

    bool fourier = false;
    Snap snap = Snap::none;
    bool verify = false;
    double B = 2.0 * 3.141592653589793;
    double grid_step = 3.141592653589793 / 16.0;
};

class usage_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, Format> kFormats{{"csv", Format::csv}, {"json", Format::json}};
const std::map<std::string, Spacing> kSpacings{{"linear", Spacing::linear}, {"log", Spacing::log}};
const std::map<std::string, Snap> kSnaps{{"none", Snap::none}, {"extrema", Snap::extrema}, {"zeros", Snap::zeros}};

void add_common(CLI::App* cmd, RunConfig& cfg, bool grid, bool quadrature) {
    cmd->add_option("--profile", cfg.profile_path, "profile JSON file, '-' for standard input")->required();
    cmd->add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(kFormats));
    cmd->add_option("--max-k", cfg.max_k, "origin coefficients scanned")->capture_default_str();
    if (grid) {
        cmd->add_option("--r-min", cfg.r_min, "smallest radius")->capture_default_str();
        cmd->add_option("--r-max", cfg.r_max, "largest radius")->capture_default_str();
    }
    if (quadrature) {
        cmd->add_option("--tol", cfg.quad.target_rel_tol, "quadrature relative tolerance")->capture_default_str();
        cmd->add_option("--max-panels", cfg.quad.max_panels, "quadrature panel budget")->capture_default_str();
        cmd->add_option("--nodes", cfg.quad.nodes_per_panel, "Gauss nodes per panel")->capture_default_str();
    }
}

void add_grid_shape(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--count", cfg.count, "number of grid points")->capture_default_str();
    cmd->add_option("--spacing", cfg.spacing, "linear or log")->transform(CLI::CheckedTransformer(kSpacings));
}

std::vector<double> make_grid(const RunConfig& cfg) {
    if (!(cfg.r_min > 0.0) || !std::isfinite(cfg.r_max)) throw usage_error("--r-min must be positive and --r-max finite");
    if (cfg.count < 1) throw usage_error("--count must be at least 1");
    if (cfg.count > 1 && cfg.r_max < cfg.r_min) throw usage_error("--r-max must not be below --r-min");
    std::vector<double> r(static_cast<std::size_t>(cfg.count));
    if (cfg.count == 1) {
        r[0] = cfg.r_min;
        return r;
    }
    const double last = cfg.count - 1;
    for (int i = 0; i < cfg.count; ++i) {
        const double t = i / last;
        r[i] = cfg.spacing == Spacing::log ? cfg.r_min * std::pow(cfg.r_max / cfg.r_min, t)
                                           : cfg.r_min + t * (cfg.r_max - cfg.r_min);
    }
    r.back() = cfg.r_max;
    return r;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
}

json rows_to_json(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < header.size(); ++i) {
            obj[header[i]] = std::isfinite(row[i]) ? json(row[i]) : json(nullptr);
        }
        out.push_back(std::move(obj));
    }
    return out;
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

Format table_format(const RunConfig& cfg) { return cfg.format.value_or(Format::csv); }

void require_json(const RunConfig& cfg, const char* command) {
    if (cfg.format && *cfg.format != Format::json) {
        throw usage_error(std::string(command) + " emits JSON only");
    }
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
    const RadialProfile profile = load_profile(cfg.profile_path);
    const auto grid = make_grid(cfg);
    const std::vector<std::string> header{"r", "re", "im", "error_estimate"};
    std::vector<std::vector<double>> rows;
    bool all_met = true;
    for (double r : grid) {
        QuadratureResult q = finite_hankel(profile, r, cfg.quad);
        if (cfg.fourier) {
            const double f = fourier_prefactor(profile.dimension(), r);
            q.value *= f;
            q.error_estimate *= std::fabs(f);
        }
        all_met = all_met && q.tolerance_met;
        rows.push_back({r, q.value.real(), q.value.imag(), q.error_estimate});
    }
    if (table_format(cfg) == Format::csv) {
        write_csv(out, header, rows);
    } else {
        write_json(out, {{"command", "transform"},
                         {"quantity", cfg.fourier ? "radial_fourier" : "finite_hankel"},
                         {"tolerance_met", all_met},
                         {"rows", rows_to_json(header, rows)}});
    }
    return all_met ? ok : tolerance_failure;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
    require_json(cfg, "expand");
    const RadialProfile profile = load_profile(cfg.profile_path);
    write_json(out, expansion_to_json(profile, cfg.n_terms, cfg.max_k));
    return ok;
}

std::vector<double> snap_grid(const std::vector<double>& grid, const Prediction& p, Snap snap, double r_min,
                              double r_max) {
    if (snap == Snap::none) return grid;
    if (p.boundary_terms.empty() || !p.boundary_terms.front().phase) {
        throw hypothesis_error("--snap needs a boundary term with a cosine phase");
    }
    const Phase& phase = *p.boundary_terms.front().phase;
    const auto marks = snap == Snap::extrema ? cosine_extrema(phase, r_min, r_max) : cosine_zeros(phase, r_min, r_max);
    if (marks.empty()) throw usage_error("no snap points inside [r-min, r-max]");
    std::vector<double> out;
    for (double r : grid) {
        auto it = std::lower_bound(marks.begin(), marks.end(), r);
        if (it == marks.end() || (it != marks.begin() && r - *(it - 1) < *it - r)) --it;
        if (out.empty() || out.back() != *it) out.push_back(*it);
    }
    return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const RadialProfile profile = load_profile(cfg.profile_path);
    const Prediction p = predict(profile, cfg.n_terms, cfg.max_k);
    const auto grid = snap_grid(make_grid(cfg), p, cfg.snap, cfg.r_min, cfg.r_max);
    const std::vector<std::string> header{"r",          "quadrature_re", "quadrature_im", "prediction_re",
                                          "prediction_im", "abs_err",    "rel_err"};
    std::vector<std::vector<double>> rows;
    std::vector<double> xs, errs;
    bool all_met = true;
    for (double r : grid) {
        const QuadratureResult q = finite_hankel(profile, r, cfg.quad);
        all_met = all_met && q.tolerance_met;
        const complex pred = evaluate_prediction(p, r);
        const double abs_err = std::abs(q.value - pred);
        const double mag = std::abs(q.value);
        const double rel_err = mag > 0.0 ? abs_err / mag : std::numeric_limits<double>::infinity();
        rows.push_back({r, q.value.real(), q.value.imag(), pred.real(), pred.imag(), abs_err, rel_err});
        xs.push_back(r);
        errs.push_back(abs_err);
    }
    double slope = std::numeric_limits<double>::quiet_NaN();
    try {
        slope = loglog_slope(xs, errs);
    } catch (const domain_error&) {
    }
    if (table_format(cfg) == Format::csv) {
        write_csv(out, header, rows);
        out << "# remainder_slope," << format_double(slope) << '\n';
        out << "# valid_error_order," << format_double(p.valid_error_order) << '\n';
    } else {
        write_json(out, {{"command", "verify"},
                         {"tolerance_met", all_met},
                         {"remainder_slope", std::isfinite(slope) ? json(slope) : json(nullptr)},
                         {"valid_error_order",
                          std::isfinite(p.valid_error_order) ? json(p.valid_error_order) : json(nullptr)},
                         {"rows", rows_to_json(header, rows)}});
    }
    return all_met ? ok : tolerance_failure;
}

CheckReport run_check(const RadialProfile& profile, const RunConfig& cfg) {
    if (!(cfg.r_min > 0.0) || !(cfg.r_max >= cfg.r_min)) throw usage_error("invalid radius range");
    VerifyOptions opts;
    opts.B = cfg.B;
    opts.grid_step = cfg.grid_step;
    opts.max_k = cfg.max_k;
    return verify_profile_slow_decrease(profile, cfg.r_min, cfg.r_max, cfg.quad, opts);
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    require_json(cfg, "classify");
    const RadialProfile profile = load_profile(cfg.profile_path);
    const Verdict v = classify(profile, cfg.max_k, cfg.N);
    json doc = certificate_to_json(certify(v));
    int code = ok;
    if (cfg.verify) {
        const CheckReport report = run_check(profile, cfg);
        doc["slow_decrease"] = check_report_to_json(report, false);
        if (report.tolerance_misses > 0) code = tolerance_failure;
    }
    write_json(out, doc);
    return code;
}

int cmd_slowdecrease(const RunConfig& cfg, std::ostream& out) {
    const RadialProfile profile = load_profile(cfg.profile_path);
    const CheckReport report = run_check(profile, cfg);
    if (table_format(cfg) == Format::csv) {
        std::vector<std::vector<double>> rows;
        for (const auto& w : report.windows) rows.push_back({w.x, w.sup, w.threshold, w.pass ? 1.0 : 0.0});
        write_csv(out, {"x", "sup", "threshold", "pass"}, rows);
        out << "# passed," << (report.passed ? 1 : 0) << '\n';
        out << "# worst_margin," << format_double(report.worst_margin) << '\n';
        out << "# worst_x," << format_double(report.worst_x) << '\n';
        out << "# A," << format_double(report.params.A) << '\n';
        out << "# C," << format_double(report.params.C) << '\n';
        out << "# alpha," << format_double(report.params.alpha) << '\n';
    } else {
        json doc = check_report_to_json(report, true);
        doc["command"] = "slowdecrease";
        write_json(out, doc);
    }
    return report.tolerance_misses > 0 ? tolerance_failure : ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite Hankel transforms, endpoint asymptotics and invertibility of radial profiles", "finhankel"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* transform = app.add_subcommand("transform", "quadrature of the finite Hankel transform on a radius grid");
    add_common(transform, cfg, true, true);
    add_grid_shape(transform, cfg);
    transform->add_flag("--fourier", cfg.fourier, "emit the radial Fourier transform instead");

    auto* expand = app.add_subcommand("expand", "origin and boundary expansion data with predicted terms");
    add_common(expand, cfg, false, false);
    expand->add_option("--n-terms", cfg.n_terms, "origin terms kept in the prediction")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "compare the prediction with quadrature and fit the remainder slope");
    add_common(verify, cfg, true, true);
    add_grid_shape(verify, cfg);
    verify->add_option("--n-terms", cfg.n_terms, "origin terms kept in the prediction")->capture_default_str();
    verify->add_option("--snap", cfg.snap, "move grid points to boundary cosine extrema or zeros")
        ->transform(CLI::CheckedTransformer(kSnaps));

    auto* classify_cmd = app.add_subcommand("classify", "invertibility verdict as certificate JSON");
    add_common(classify_cmd, cfg, true, true);
    classify_cmd->add_option("--N", cfg.N, "smoothness budget");
    classify_cmd->add_flag("--verify", cfg.verify, "also run the slow-decrease check on [r-min, r-max]");

    auto* slow = app.add_subcommand("slowdecrease", "windowed slow-decrease check of r^nu |H(r)|");
    add_common(slow, cfg, true, true);
    slow->add_option("--B", cfg.B, "window half-width")->capture_default_str();
    slow->add_option("--grid-step", cfg.grid_step, "sampling step")->capture_default_str();

    // The slow-decrease defaults follow the corroboration range.
    for (auto* cmd : {classify_cmd, slow}) {
        cmd->preparse_callback([&cfg](std::size_t) {
            cfg.r_min = 50.0;
            cfg.r_max = 2000.0;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : parse_failure;
    }

    try {
        cfg.quad.validate();
        if (cfg.max_k < 0 || cfg.max_k > 64) throw usage_error("--max-k must lie in [0, 64]");
        if (cfg.n_terms < 0) throw usage_error("--n-terms must be nonnegative");
        if (cfg.N && *cfg.N < 0) throw usage_error("--N must be nonnegative");
        if (transform->parsed()) return cmd_transform(cfg, out);
        if (expand->parsed()) return cmd_expand(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (classify_cmd->parsed()) return cmd_classify(cfg, out);
        return cmd_slowdecrease(cfg, out);
    } catch (const parse_error& e) {
        err << "finhankel: " << e.what() << '\n';
        return parse_failure;
    } catch (const usage_error& e) {
        err << "finhankel: " << e.what() << '\n';
        return parse_failure;
    } catch (const hypothesis_error& e) {
        err << "finhankel: hypothesis violated: " << e.what() << '\n';
        return hypothesis_violation;
    } catch (const domain_error& e) {
        err << "finhankel: " << e.what() << '\n';
        return parse_failure;
    } catch (const std::exception& e) {
        err << "finhankel: internal error: " << e.what() << '\n';
        return internal_failure;
    }
}

}  // namespace finhankel::cli
