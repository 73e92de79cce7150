#include "finhankel/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "finhankel/errors.hpp"

namespace finhankel {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTol = 1e-12;

// Is z a nonnegative integer, within kTol on both parts?
bool in_n0(complex z) {
    if (std::fabs(z.imag()) > kTol) return false;
    const double n = std::round(z.real());
    return n >= 0.0 && std::fabs(z.real() - n) <= kTol;
}

complex real_power(double r, complex e) {
    if (e.imag() == 0.0) return std::pow(r, e.real());
    return std::exp(e * std::log(r));
}

std::vector<double> phase_grid(const Phase& phase, double shift, double r_min, double r_max) {
    std::vector<double> out;
    if (!(r_max >= r_min) || !(phase.freq > 0.0)) return out;
    const double base = -phase.offset.real() + shift;
    double j = std::ceil((r_min * phase.freq - base) / kPi);
    for (;; j += 1.0) {
        const double r = (base + j * kPi) / phase.freq;
        if (r > r_max) break;
        if (r >= r_min) out.push_back(r);
    }
    return out;
}

}  // namespace

complex AsymptoticTerm::evaluate(double r) const {
    if (!(r > 0.0)) throw domain_error("asymptotic terms are evaluated at r > 0");
    complex v = amplitude * real_power(r, -exponent);
    if (phase) v *= std::cos(phase->freq * r + phase->offset);
    return v;
}

KSet k_set(const OriginExpansion& origin, Order nu) {
    if (!(origin.mu.real() + nu.value() > -1.0)) {
        throw hypothesis_error("K set needs Re(mu + nu) > -1, got Re(mu + nu) = " +
                               std::to_string(origin.mu.real() + nu.value()));
    }
    KSet out;
    out.max_k = origin.max_k;
    for (int k = 0; k <= origin.max_k; ++k) {
        if (origin.coeff(k) == complex{}) continue;
        if (in_n0(0.5 * (origin.mu + static_cast<double>(k) - nu.value() - 1.0))) continue;
        out.members.push_back(k);
    }
    if (!out.members.empty()) out.k0 = out.members.front();
    return out;
}

bool k_set_provably_empty(const RadialProfile& profile) {
    const double nu = profile.nu();
    struct Contribution {
        complex exponent, coeff;
        double scale;
    };
    std::vector<Contribution> open;
    for (const auto& t : profile.terms()) {
        if (t.coeff == complex{}) continue;
        // Every exponent lambda + 2j is excluded when (lambda - nu - 1)/2 is.
        if (in_n0(0.5 * (t.lambda - nu - 1.0))) continue;
        // Otherwise only a terminating binomial series can still cancel.
        const complex m = t.rho - 1.0;
        if (!in_n0(m)) return false;
        const int terms = static_cast<int>(std::round(m.real()));
        complex b = 1.0;
        for (int j = 0; j <= terms; ++j) {
            if (j > 0) b *= -(m - static_cast<double>(j - 1)) / static_cast<double>(j);
            const complex e = t.lambda + 2.0 * j;
            if (in_n0(0.5 * (e - nu - 1.0))) continue;
            const complex c = t.coeff * b;
            auto hit = std::find_if(open.begin(), open.end(),
                                    [&](const Contribution& x) { return std::abs(x.exponent - e) <= kTol; });
            if (hit == open.end()) {
                open.push_back({e, c, std::abs(c)});
            } else {
                hit->coeff += c;
                hit->scale += std::abs(c);
            }
        }
    }
    return std::all_of(open.begin(), open.end(),
                       [](const Contribution& x) { return std::abs(x.coeff) <= 1e-13 * x.scale; });
}

AsymptoticTerm origin_term(const OriginExpansion& origin, Order nu, int k) {
    const complex c = origin.coeff(k);
    const complex m = origin.mu + static_cast<double>(k);
    const double n = nu.value();
    AsymptoticTerm t;
    t.exponent = m + 1.0;
    if (c == complex{}) return t;
    t.amplitude = c * specfun::gamma(0.5 * (m + n + 1.0)) * real_power(2.0, m) *
                  specfun::reciprocal_gamma(0.5 * (n + 1.0 - m));
    return t;
}

AsymptoticTerm boundary_term(const BoundaryExpansion& boundary, Order nu) {
    if (boundary.terms.empty()) throw hypothesis_error("boundary expansion has no terms");
    const complex lambda0 = boundary.terms.front().exponent;
    const complex a0 = boundary.terms.front().coeff;
    if (!(lambda0.real() > -1.0)) {
        throw hypothesis_error("boundary term needs Re(lambda_0) > -1, got " + std::to_string(lambda0.real()));
    }
    if (a0 == complex{}) throw hypothesis_error("boundary term needs a_0 != 0");
    AsymptoticTerm t;
    t.amplitude = a0 * real_power(2.0, lambda0 + 0.5) * specfun::gamma(lambda0 + 1.0) / std::sqrt(kPi);
    t.exponent = lambda0 + 1.5;
    t.phase = Phase{1.0, -0.5 * kPi * (nu.value() + lambda0 + 1.0) - 0.25 * kPi};
    return t;
}

Prediction predict(const RadialProfile& profile, int n_origin_terms, int max_k, int max_j) {
    if (n_origin_terms < 0) throw domain_error("n_origin_terms must be nonnegative");
    const Order nu = profile.order();
    const auto origin = origin_expansion(profile, max_k);
    Prediction p;

    double origin_order = kInf;
    if (!origin.all_zero()) {
        const KSet K = k_set(origin, nu);
        const int take = std::min<int>(n_origin_terms, static_cast<int>(K.members.size()));
        for (int i = 0; i < take; ++i) p.origin_terms.push_back(origin_term(origin, nu, K.members[i]));
        if (take > 0) {
            origin_order = origin.mu.real() + K.members[take - 1] + 1.0;
        } else if (K.k0) {
            origin_order = origin.mu.real() + *K.k0 + 1.0;
        } else if (!k_set_provably_empty(profile)) {
            origin_order = origin.mu.real() + max_k + 1.0;
        }
    }

    double boundary_order = kInf;
    if (!profile.vanishes_near_one()) {
        const auto boundary = boundary_expansion(profile, max_j, 0);
        const auto b = boundary_term(boundary, nu);
        boundary_order = b.exponent.real();
        p.boundary_terms.push_back(b);
    }
    p.valid_error_order = std::min(origin_order, boundary_order);
    return p;
}

complex evaluate_prediction(const Prediction& p, double r) {
    complex sum{};
    for (const auto& t : p.origin_terms) sum += t.evaluate(r);
    for (const auto& t : p.boundary_terms) sum += t.evaluate(r);
    return sum;
}

DominanceReport dominance(const Prediction& p) {
    if (p.empty()) throw empty_prediction("dominance of an empty prediction");
    DominanceReport out{Dominance::balanced, kInf, kInf};
    for (const auto& t : p.origin_terms) {
        if (t.amplitude != complex{}) {
            out.origin_order = t.exponent.real();
            break;
        }
    }
    for (const auto& t : p.boundary_terms) {
        if (t.amplitude != complex{}) {
            out.boundary_order = t.exponent.real();
            break;
        }
    }
    if (std::isinf(out.origin_order) && std::isinf(out.boundary_order)) {
        throw empty_prediction("every predicted term has zero amplitude");
    }
    const double gap = out.origin_order - out.boundary_order;
    if (std::isinf(out.boundary_order) || gap < -kTol) {
        out.kind = Dominance::origin;
    } else if (std::isinf(out.origin_order) || gap > kTol) {
        out.kind = Dominance::boundary;
    } else {
        out.kind = Dominance::balanced;
    }
    return out;
}

const AsymptoticTerm& dominant_term(const Prediction& p) {
    const auto report = dominance(p);
    const auto& family = report.kind == Dominance::boundary ? p.boundary_terms : p.origin_terms;
    for (const auto& t : family) {
        if (t.amplitude != complex{}) return t;
    }
    return family.front();
}

std::vector<double> cosine_zeros(const Phase& phase, double r_min, double r_max) {
    return phase_grid(phase, 0.5 * kPi, r_min, r_max);
}

std::vector<double> cosine_extrema(const Phase& phase, double r_min, double r_max) {
    return phase_grid(phase, 0.0, r_min, r_max);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw domain_error("slope fit needs two or more points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(std::fabs(y[i]) > 0.0)) continue;
        const double lx = std::log(x[i]), ly = std::log(std::fabs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++m;
    }
    if (m < 2) throw domain_error("slope fit needs two or more nonzero points");
    const double dm = static_cast<double>(m);
    return (dm * sxy - sx * sy) / (dm * sxx - sx * sx);
}

}  // namespace finhankel
