#include "finhankel/invertibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "finhankel/errors.hpp"

namespace finhankel {
namespace {

constexpr double kTol = 1e-12;

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string num(complex z) {
    if (z.imag() == 0.0) return num(z.real());
    return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::fabs(z.imag())) + "i";
}

bool in_n0(complex z) {
    if (std::fabs(z.imag()) > kTol) return false;
    const double n = std::round(z.real());
    return n >= 0.0 && std::fabs(z.real() - n) <= kTol;
}

int ceil_tol(double x) { return static_cast<int>(std::ceil(x - kTol)); }

std::string list(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

// Exponents of phi at t = 1 with nonzero coefficient, ascending.
std::vector<complex> exponent_universe(const BoundaryExpansion& b) {
    std::vector<complex> out;
    for (const auto& t : b.terms) out.push_back(t.exponent);
    for (const auto& e : b.tail_exponents) out.push_back(e);
    return out;
}

// With phi = sum_{Re e < Re Lambda} a_e (1-t)^e + (1-t)^Lambda psi, psi^(k)
// is integrable near 1 for k <= N iff each remaining exponent e has
// e - Lambda in N_0 or Re(e - Lambda) > N - 1.
bool psi_integrable(const std::vector<complex>& universe, complex Lambda, int N, std::string& why) {
    for (const auto& e : universe) {
        if (e.real() < Lambda.real() - kTol) continue;
        const complex d = e - Lambda;
        if (in_n0(d) || d.real() > N - 1 + kTol) continue;
        why = "exponent " + num(e) + " leaves (1-t)^(" + num(d) + ") in psi, whose derivatives of order <= " +
              std::to_string(N) + " are not all integrable";
        return false;
    }
    return true;
}

bool retained_distinct(const std::vector<complex>& universe, complex Lambda) {
    std::vector<double> re;
    for (const auto& e : universe) {
        if (e.real() < Lambda.real() - kTol) re.push_back(e.real());
    }
    for (std::size_t i = 1; i < re.size(); ++i) {
        if (std::fabs(re[i] - re[i - 1]) <= kTol) return false;
    }
    return true;
}

Verdict finish(Verdict v, Status s, const char* rule, std::string step) {
    v.status = s;
    v.rule = rule;
    v.trace.push_back(std::move(step));
    return v;
}

}  // namespace

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::invertible: return "Invertible";
        case Status::not_invertible: return "NotInvertible";
        case Status::inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

const char* to_string(CertKind k) noexcept {
    switch (k) {
        case CertKind::radial_profile: return "RadialProfileCert";
        case CertKind::point_mass: return "FinitePointMass";
        case CertKind::convolution: return "Convolution";
        case CertKind::scaled: return "Scaled";
        case CertKind::translated: return "Translated";
        case CertKind::diffop_sum: return "DiffOpSum";
        case CertKind::smooth_perturbed: return "SmoothPerturbed";
        case CertKind::tensor: return "Tensor";
    }
    return "RadialProfileCert";
}

Verdict classify(const RadialProfile& profile, int max_k, std::optional<int> N, int max_j) {
    Verdict v;
    const double nu = profile.nu();
    v.trace.push_back("dimension n = " + std::to_string(profile.dimension()) + ", nu = n/2 - 1 = " + num(nu));
    if (N && *N < 0) return finish(v, Status::inconclusive, rules::none, "N = " + std::to_string(*N) + " < 0");

    OriginExpansion origin;
    try {
        origin = origin_expansion(profile, max_k);
    } catch (const hypothesis_error& e) {
        return finish(v, Status::inconclusive, rules::none, std::string("origin expansion unavailable: ") + e.what());
    }
    if (origin.all_zero()) {
        return finish(v, Status::inconclusive, rules::none,
                      "c_k = 0 for every k <= " + std::to_string(max_k) + "; no nonzero leading coefficient c_0");
    }
    v.trace.push_back("Re(mu + nu) = " + num(origin.mu.real() + nu) + " > -1 with mu = " + num(origin.mu));
    v.trace.push_back("c_0 = " + num(origin.coeff(0)) + " != 0");
    const KSet K = k_set(origin, profile.order());
    v.trace.push_back("K within k <= " + std::to_string(max_k) + " = " + list(K.members));

    if (profile.vanishes_near_one()) {
        v.trace.push_back("profile vanishes near s = 1: invertible iff K is nonempty");
        if (!K.empty()) {
            return finish(v, Status::invertible, rules::boundary_free,
                          "K nonempty, k0 = " + std::to_string(*K.k0) + ": invertible");
        }
        if (k_set_provably_empty(profile)) {
            return finish(v, Status::not_invertible, rules::boundary_free,
                          "every nonzero coefficient sits on an exponent with (mu + k - nu - 1)/2 in N_0, so K "
                          "is empty for all k: not invertible");
        }
        return finish(v, Status::inconclusive, rules::boundary_free,
                      "K is empty for k <= " + std::to_string(max_k) +
                          " but coefficients beyond the scan are not ruled out");
    }

    BoundaryExpansion boundary;
    try {
        boundary = boundary_expansion(profile, max_j, N.value_or(0));
    } catch (const hypothesis_error& e) {
        return finish(v, Status::inconclusive, rules::none, std::string("boundary expansion unavailable: ") + e.what());
    }
    const complex lambda0 = boundary.terms.front().exponent;
    const complex a0 = boundary.terms.front().coeff;
    v.trace.push_back("boundary: lambda_0 = " + num(lambda0) + ", a_0 = " + num(a0) + " != 0");

    // A wider expansion supplies the exponents needed to test psi.
    const int need = std::max(N.value_or(0), ceil_tol(lambda0.real() + 1.0));
    const int wide_j = std::max(max_j, 2 * std::max(need, 0) + 8);
    std::vector<complex> universe;
    try {
        universe = exponent_universe(boundary_expansion(profile, wide_j, 0));
    } catch (const hypothesis_error& e) {
        return finish(v, Status::inconclusive, rules::none, std::string("boundary expansion unavailable: ") + e.what());
    }

    // Flat boundary: phi = (1-t)^Lambda psi with the origin term dominant.
    if (!K.empty()) {
        const double order = origin.mu.real() + *K.k0 + 0.5;
        const int Nb = N.value_or(std::max(0, ceil_tol(order)));
        std::string step = "flat-boundary route with N = " + std::to_string(Nb) + ": Re(mu + k0 + 1/2) = " + num(order);
        if (order <= Nb + kTol) {
            step += " <= N";
            bool done = false;
            for (const complex Lambda : {complex(Nb), lambda0}) {
                if (Lambda.real() < Nb - kTol || Lambda.real() > lambda0.real() + kTol) continue;
                std::string why;
                if (psi_integrable(universe, Lambda, Nb, why)) {
                    step += "; Re(lambda_0) = " + num(lambda0.real()) + " >= Re(Lambda) = " + num(Lambda.real()) +
                            " >= N, psi derivatives integrable";
                    done = true;
                    break;
                }
            }
            if (done) return finish(v, Status::invertible, rules::flat_boundary, step + ": invertible");
            step += "; but no Lambda with N <= Re(Lambda) <= Re(lambda_0) = " + num(lambda0.real()) + " fits";
        } else {
            step += " > N";
        }
        v.trace.push_back(step + ": route not applicable");
    } else {
        v.trace.push_back("flat-boundary route not applicable: K is empty within the scan");
    }

    // General route: both expansions present.
    const int Nc = N.value_or(std::max(0, ceil_tol(lambda0.real() + 1.0)));
    std::string step = "smooth-profile route with N = " + std::to_string(Nc) + ": -1 < Re(lambda_0) = " +
                       num(lambda0.real());
    if (!(lambda0.real() > -1.0)) {
        return finish(v, Status::inconclusive, rules::none, step + " fails Re(lambda_0) > -1");
    }
    if (lambda0.real() > Nc - 1 + kTol) {
        return finish(v, Status::inconclusive, rules::none, step + " > N - 1: hypothesis fails");
    }
    step += " <= N - 1";
    std::vector<complex> candidates{complex(Nc)};
    for (const auto& e : universe) {
        if (e.real() >= Nc - kTol) candidates.push_back(e);
    }
    std::string last_reason = "no candidate Lambda";
    for (const auto& Lambda : candidates) {
        if (Lambda.real() < Nc - kTol || Lambda.real() <= lambda0.real() + kTol) continue;
        if (!retained_distinct(universe, Lambda)) {
            last_reason = "retained exponents below Lambda = " + num(Lambda) + " share a real part";
            continue;
        }
        if (psi_integrable(universe, Lambda, Nc, last_reason)) {
            return finish(v, Status::invertible, rules::smooth_profile,
                          step + "; Lambda = " + num(Lambda) + " with N <= Re(Lambda), psi derivatives of order <= N "
                                 "integrable: invertible");
        }
    }
    return finish(v, Status::inconclusive, rules::none, step + "; " + last_reason);
}

void SlowDecreaseParams::validate() const {
    if (!(A > 0.0) || !(B > 0.0) || !(C > 0.0) || !(alpha >= 0.0)) {
        throw domain_error("slow-decrease parameters need A, B, C > 0 and alpha >= 0");
    }
}

CheckReport slow_decrease_check(const std::function<double(double)>& sampler, const SlowDecreaseParams& params,
                                double r_min, double r_max, double grid_step) {
    params.validate();
    if (!(r_min >= params.B) || !(r_max >= r_min)) {
        throw domain_error("slow-decrease check needs B <= r_min <= r_max");
    }
    if (!(grid_step > 0.0) || grid_step > params.B / 8.0 + 1e-15) {
        throw domain_error("grid_step must lie in (0, B/8]");
    }

    // Samples on y_i = r_min - B + i * step covering every window.
    const int reach = static_cast<int>(std::ceil(params.B / grid_step));
    const int centers = static_cast<int>(std::floor((r_max - r_min) / grid_step + 1e-9)) + 1;
    const int total = centers + 2 * reach;
    const double y0 = r_min - reach * grid_step;
    std::vector<double> y(total), q(total);
    for (int i = 0; i < total; ++i) {
        y[i] = y0 + i * grid_step;
        q[i] = y[i] > 0.0 ? std::fabs(sampler(y[i])) : 0.0;
    }

    CheckReport report;
    report.params = params;
    report.passed = true;
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (int c = 0; c < centers; ++c) {
        const int i = c + reach;
        const double x = y[i];
        double sup = 0.0;
        for (int j = i - reach; j <= i + reach; ++j) {
            if (std::fabs(y[j] - x) < params.B) sup = std::max(sup, q[j]);
        }
        const double threshold = params.C * std::pow(x, -params.A);
        const bool pass = sup > threshold;
        report.windows.push_back({x, sup, threshold, pass});
        report.passed = report.passed && pass;
        const double margin = sup / threshold;
        if (margin < report.worst_margin) {
            report.worst_margin = margin;
            report.worst_x = x;
        }
    }

    // Local minima of |q| come twice per period of q.
    int minima = 0;
    for (int i = 1; i + 1 < total; ++i) {
        if (q[i] < q[i - 1] && q[i] <= q[i + 1]) ++minima;
    }
    if (minima > 0) {
        const double period = 2.0 * (y.back() - y.front()) / minima;
        if (period < 6.0 * grid_step) {
            report.warnings.push_back("insufficient resolution: estimated oscillation period " + num(period) +
                                      " is below 6 * grid_step = " + num(6.0 * grid_step));
        }
    }
    return report;
}

CheckReport verify_profile_slow_decrease(const RadialProfile& profile, double r_min, double r_max,
                                         const QuadratureConfig& cfg, const VerifyOptions& opts) {
    const double nu = profile.nu();
    int misses = 0;
    auto sampler = [&](double r) {
        const auto res = finite_hankel(profile, r, cfg);
        if (!res.tolerance_met) ++misses;
        return std::pow(r, nu) * std::abs(res.value);
    };

    SlowDecreaseParams params;
    params.B = opts.B;
    params.alpha = 2.0 * nu;
    std::vector<std::string> notes;
    bool anchored = false;
    try {
        const Prediction p = predict(profile, 1, opts.max_k);
        const AsymptoticTerm& t = dominant_term(p);
        params.A = t.exponent.real() - nu + 1.0;
        params.C = 0.5 * std::abs(t.amplitude);
        notes.push_back("parameters from dominant term amplitude " + num(std::abs(t.amplitude)) + ", exponent " +
                        num(t.exponent));
    } catch (const hypothesis_error&) {
        anchored = true;
    }
    if (anchored || !(params.A > 0.0) || !(params.C > 0.0)) {
        // No usable predicted term: anchor C at r_min so the first window
        // has margin 2, with a fixed power A = nu + 3.
        params.A = nu + 3.0;
        double sup = 0.0;
        for (double y = r_min - opts.B + opts.grid_step; y < r_min + opts.B; y += opts.grid_step) {
            sup = std::max(sup, sampler(y));
        }
        params.C = sup > 0.0 ? 0.5 * sup * std::pow(r_min, params.A) : std::numeric_limits<double>::min();
        notes.push_back("no predicted term: A = nu + 3 and C anchored at r_min");
    }

    CheckReport report = slow_decrease_check(sampler, params, r_min, r_max, opts.grid_step);
    report.warnings.insert(report.warnings.begin(), notes.begin(), notes.end());
    report.tolerance_misses = misses;
    if (misses > 0) {
        report.warnings.push_back(std::to_string(misses) + " quadrature samples missed the tolerance target");
    }
    return report;
}

Certificate certify(const Verdict& v) {
    Certificate c;
    c.kind = CertKind::radial_profile;
    c.verdict = v;
    return c;
}

Certificate point_mass_certificate(const std::vector<double>& weights) {
    const bool nonzero = std::any_of(weights.begin(), weights.end(), [](double w) { return w != 0.0; });
    if (!nonzero) throw rule_violation("point-mass certificate needs a nonzero weight");
    Certificate c;
    c.kind = CertKind::point_mass;
    c.verdict = {Status::invertible, rules::point_mass,
                 {"finitely supported nonzero distribution with " + std::to_string(weights.size()) +
                  " point masses: invertible"}};
    return c;
}

Certificate combine(CertKind kind, std::vector<Certificate> children, const CombineParams& params) {
    const char* rule = nullptr;
    std::size_t min_children = 1, max_children = std::numeric_limits<std::size_t>::max();
    bool needs_invertible = true;
    switch (kind) {
        case CertKind::convolution: rule = rules::convolution; min_children = 2; break;
        case CertKind::tensor: rule = rules::tensor; min_children = 2; break;
        case CertKind::diffop_sum: rule = rules::diffop_sum; break;
        case CertKind::scaled: rule = rules::scaling; max_children = 1; break;
        case CertKind::translated: rule = rules::translation; max_children = 1; break;
        case CertKind::smooth_perturbed:
            rule = rules::smooth_perturbation;
            max_children = 1;
            needs_invertible = false;
            break;
        case CertKind::radial_profile:
        case CertKind::point_mass: throw rule_violation("leaf certificates are built with certify()");
    }
    if (children.size() < min_children || children.size() > max_children) {
        throw rule_violation(std::string(rule) + " takes " + std::to_string(min_children) +
                             (max_children == 1 ? "" : " or more") + " children, got " +
                             std::to_string(children.size()));
    }
    if (kind == CertKind::scaled && (params.alpha == 0.0 || !std::isfinite(params.alpha))) {
        throw rule_violation("scaling needs a finite nonzero factor");
    }
    if (needs_invertible) {
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (children[i].verdict.status != Status::invertible) {
                throw rule_violation(std::string(rule) + " needs invertible children; child " + std::to_string(i) +
                                     " is " + to_string(children[i].verdict.status));
            }
        }
    }

    Certificate out;
    out.kind = kind;
    out.verdict.rule = rule;
    out.verdict.status = needs_invertible ? Status::invertible : children.front().verdict.status;
    for (const auto& c : children) {
        out.verdict.trace.insert(out.verdict.trace.end(), c.verdict.trace.begin(), c.verdict.trace.end());
    }
    std::string step = std::string(rule) + " of " + std::to_string(children.size()) + " certificate(s)";
    if (kind == CertKind::scaled) step += " with factor " + num(params.alpha);
    if (kind == CertKind::translated && !params.shift.empty()) {
        step += " by (";
        for (std::size_t i = 0; i < params.shift.size(); ++i) step += (i ? ", " : "") + num(params.shift[i]);
        step += ")";
    }
    out.verdict.trace.push_back(step + ": " + to_string(out.verdict.status));
    out.children = std::move(children);
    return out;
}

}  // namespace finhankel
