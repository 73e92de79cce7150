#include "finhankel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "finhankel/errors.hpp"

namespace finhankel {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSubstitutionPower = 40;
constexpr int kGradingLevels = 15;
constexpr double kGradingRatio = 0.25;
// Below this value of r s the kernel has no more than a few oscillations.
constexpr double kQuietArgument = 12.0;

enum class Map { plain, left, right };

struct Panel {
    Map map;
    double a, b;
    complex fine, coarse;
    double err = 0.0;
    double mag = 0.0;
    bool alive = true;
    bool settled = false;
};

struct Term {
    complex coeff, lambda, rho_m1;
    bool real;
};

class Integrand {
public:
    Integrand(std::span<const ProfileTerm> terms, Order order, double r, bool cutoff)
        : order_(order), r_(r), cutoff_(cutoff) {
        for (const auto& t : terms) {
            if (t.coeff == complex{}) continue;
            const bool real = t.coeff.imag() == 0.0 && t.lambda.imag() == 0.0 && t.rho.imag() == 0.0;
            terms_.push_back({t.coeff, t.lambda, t.rho - 1.0, real});
        }
    }

    // Integrand times Jacobian, given log s, log(1 - s^2) and log of the
    // Jacobian; s itself is only needed for the Bessel argument and cutoff.
    complex operator()(double s, double log_s, double log_w, double log_jac) const {
        complex sum{};
        for (const auto& t : terms_) {
            if (t.real) {
                sum += t.coeff.real() *
                       std::exp(t.lambda.real() * log_s + t.rho_m1.real() * log_w + log_jac);
            } else {
                sum += t.coeff * std::exp(t.lambda * log_s + t.rho_m1 * log_w + log_jac);
            }
        }
        double k = specfun::bessel_j(order_, r_ * s);
        if (cutoff_) k *= smooth_cutoff(s);
        return sum * k;
    }

private:
    std::vector<Term> terms_;
    Order order_;
    double r_;
    bool cutoff_;
};

struct Layout {
    double left_scale = 0.0;   // s = left_scale * u^q on u in [0, 1]
    int q = 1;
    double right_scale = 0.0;  // 1 - s = right_scale * v^p on v in [0, 1]
    int p = 1;
};

class Engine {
public:
    Engine(const Integrand& f, const Layout& layout, const QuadratureConfig& cfg)
        : f_(f), layout_(layout), fine_(gauss_legendre(cfg.nodes_per_panel)),
          coarse_(gauss_legendre(std::max(cfg.nodes_per_panel / 2, 4))) {}

    void evaluate(Panel& p) const {
        double mag = 0.0;
        p.fine = rule(p, fine_, &mag);
        p.coarse = rule(p, coarse_, nullptr);
        p.err = std::abs(p.fine - p.coarse);
        p.mag = mag;
        // Differences at rounding level cannot be reduced by refinement.
        p.settled = p.err <= 64.0 * kEps * mag;
    }

private:
    complex rule(const Panel& p, const GaussLegendre& g, double* mag) const {
        const double half = 0.5 * (p.b - p.a), mid = 0.5 * (p.a + p.b);
        complex sum{};
        double abs_sum = 0.0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            const double x = mid + half * g.nodes[i];
            const complex v = at(p.map, x);
            sum += g.weights[i] * v;
            abs_sum += g.weights[i] * std::abs(v);
        }
        if (mag) *mag = half * abs_sum;
        return half * sum;
    }

    complex at(Map map, double x) const {
        switch (map) {
            case Map::plain: {
                if (!(x > 0.0 && x < 1.0)) return {};
                const double w = 1.0 - x;
                return f_(x, std::log(x), std::log(w * (1.0 + x)), 0.0);
            }
            case Map::left: {
                if (!(x > 0.0)) return {};
                const double lu = std::log(x);
                const double log_s = std::log(layout_.left_scale) + layout_.q * lu;
                const double s = std::exp(log_s);
                const double log_jac = std::log(layout_.q * layout_.left_scale) + (layout_.q - 1) * lu;
                return f_(s, log_s, std::log1p(-s * s), log_jac);
            }
            case Map::right: {
                if (!(x > 0.0)) return {};
                const double lv = std::log(x);
                const double log_w = std::log(layout_.right_scale) + layout_.p * lv;
                const double w = std::exp(log_w);
                const double s = 1.0 - w;
                if (!(s > 0.0)) return {};
                const double log_jac = std::log(layout_.p * layout_.right_scale) + (layout_.p - 1) * lv;
                return f_(s, std::log(s), log_w + std::log(2.0 - w), log_jac);
            }
        }
        return {};
    }

    const Integrand& f_;
    Layout layout_;
    GaussLegendre fine_, coarse_;
};

int substitution_power(double exponent_plus_one) {
    // Integrand ~ x^(e) near the endpoint with e + 1 = exponent_plus_one > 0;
    // x = y^m turns it into y^(m (e + 1) - 1), with m (e + 1) >= 2.
    if (exponent_plus_one >= 2.0) return 1;
    return std::min(kMaxSubstitutionPower, static_cast<int>(std::ceil(2.0 / exponent_plus_one)));
}

void push_graded(std::vector<Panel>& out, Map map) {
    double hi = 1.0;
    for (int level = 0; level < kGradingLevels; ++level) {
        const double lo = hi * kGradingRatio;
        out.push_back({map, lo, hi, {}, {}});
        hi = lo;
    }
    out.push_back({map, 0.0, hi, {}, {}});
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(target_rel_tol > 0.0 && target_rel_tol < 1.0)) {
        throw domain_error("target_rel_tol must lie in (0, 1)");
    }
    if (nodes_per_panel < 8) throw domain_error("nodes_per_panel must be at least 8");
    if (max_panels < 1) throw domain_error("max_panels must be positive");
    if (half_periods_per_panel < 1) throw domain_error("half_periods_per_panel must be positive");
}

GaussLegendre gauss_legendre(int n) {
    GaussLegendre g;
    g.nodes.resize(n);
    g.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        g.nodes[i] = -x;
        g.nodes[n - 1 - i] = x;
        g.weights[i] = w;
        g.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) g.nodes[n / 2] = 0.0;
    return g;
}

QuadratureResult hankel_of_terms(std::span<const ProfileTerm> terms, Order order, double r,
                                 const QuadratureConfig& cfg, bool with_cutoff) {
    if (!(r > 0.0) || !std::isfinite(r)) throw domain_error("transform radius must be finite and > 0");
    cfg.validate();
    const double nu = order.value();

    double lambda_min = std::numeric_limits<double>::infinity();
    double rho_min = std::numeric_limits<double>::infinity();
    for (const auto& t : terms) {
        if (t.coeff == complex{}) continue;
        lambda_min = std::min(lambda_min, t.lambda.real());
        rho_min = std::min(rho_min, t.rho.real());
    }
    if (!std::isfinite(lambda_min)) return {};
    if (!(lambda_min + nu > -1.0) || (!with_cutoff && !(rho_min > 0.0))) {
        throw domain_error("integrand is not integrable on (0, 1)");
    }

    const double end = with_cutoff ? 2.0 / 3.0 : 1.0;
    Layout layout;
    layout.left_scale = std::min(kQuietArgument / r, 0.5 * end);
    layout.q = substitution_power(1.0 + lambda_min + nu);
    double right_start = end;
    if (!with_cutoff) {
        layout.right_scale = std::min(2.0 * kPi / r, 0.5);
        layout.p = substitution_power(rho_min);
        right_start = 1.0 - layout.right_scale;
    }

    std::vector<Panel> panels;
    push_graded(panels, Map::left);
    if (!with_cutoff) push_graded(panels, Map::right);

    // Oscillatory middle: break points on approximate zeros of the kernel,
    // s_j = (nu pi / 2 + 3 pi / 4 + j pi) / r.
    const double lo = layout.left_scale, hi = right_start;
    if (hi > lo) {
        const double stride = cfg.half_periods_per_panel * kPi / r;
        std::vector<double> cuts{lo};
        const double phase0 = 0.5 * nu * kPi + 0.75 * kPi;
        const double j0 = std::ceil((r * lo - phase0) / kPi);
        for (double j = std::max(j0, 0.0);; j += cfg.half_periods_per_panel) {
            const double s = (phase0 + j * kPi) / r;
            if (s >= hi) break;
            if (s - cuts.back() > 0.5 * stride) cuts.push_back(s);
        }
        if (hi - cuts.back() < 0.5 * stride && cuts.size() > 1) cuts.pop_back();
        cuts.push_back(hi);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            panels.push_back({Map::plain, cuts[i], cuts[i + 1], {}, {}});
        }
    }

    const Integrand f(terms, order, r, with_cutoff);
    const Engine engine(f, layout, cfg);
    for (auto& p : panels) engine.evaluate(p);

    auto cmp = [&](std::size_t x, std::size_t y) { return panels[x].err < panels[y].err; };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> queue(cmp);
    complex total{};
    double err = 0.0, mag = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        total += panels[i].fine;
        err += panels[i].err;
        mag += panels[i].mag;
        if (!panels[i].settled) queue.push(i);
    }
    int live = static_cast<int>(panels.size());
    auto converged = [&] { return err <= std::max(cfg.target_rel_tol * std::abs(total), 64.0 * kEps * mag); };
    while (!converged() && !queue.empty() && live < cfg.max_panels) {
        const std::size_t i = queue.top();
        queue.pop();
        Panel parent = panels[i];
        const double mid = 0.5 * (parent.a + parent.b);
        if (!(mid > parent.a && mid < parent.b)) continue;
        panels[i].alive = false;
        total -= parent.fine;
        err -= parent.err;
        mag -= parent.mag;
        for (const auto& [a, b] : {std::pair{parent.a, mid}, std::pair{mid, parent.b}}) {
            Panel child{parent.map, a, b, {}, {}};
            engine.evaluate(child);
            total += child.fine;
            err += child.err;
            mag += child.mag;
            panels.push_back(child);
            if (!child.settled) queue.push(panels.size() - 1);
        }
        ++live;
    }

    // Final sums in a fixed panel order, independent of refinement history.
    std::vector<const Panel*> order_by_position;
    for (const auto& p : panels) {
        if (p.alive) order_by_position.push_back(&p);
    }
    std::sort(order_by_position.begin(), order_by_position.end(), [](const Panel* x, const Panel* y) {
        if (x->map != y->map) return x->map < y->map;
        return x->a < y->a;
    });
    QuadratureResult out;
    complex sum{}, carry{};
    double err_sum = 0.0, mag_sum = 0.0;
    for (const Panel* p : order_by_position) {
        const complex y = p->fine - carry;
        const complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        err_sum += p->err;
        mag_sum += p->mag;
    }
    out.value = sum;
    out.error_estimate = err_sum;
    out.panels_used = static_cast<int>(order_by_position.size());
    out.tolerance_met = err_sum <= std::max(cfg.target_rel_tol * std::abs(sum), 64.0 * kEps * mag_sum);
    return out;
}

QuadratureResult finite_hankel(const RadialProfile& profile, double r, const QuadratureConfig& cfg) {
    return hankel_of_terms(profile.terms(), profile.order(), r, cfg, profile.vanishes_near_one());
}

double fourier_prefactor(int dimension, double r) {
    const double half_n = 0.5 * dimension;
    return std::pow(2.0 * kPi, half_n) * std::pow(r, 1.0 - half_n);
}

complex radial_fourier(const RadialProfile& profile, double r, const QuadratureConfig& cfg) {
    return fourier_prefactor(profile.dimension(), r) * finite_hankel(profile, r, cfg).value;
}

QuadratureResult iterated_transform(const RadialProfile& profile, int k, double r, const QuadratureConfig& cfg) {
    const auto terms = derivative_terms(profile, k);
    return hankel_of_terms(terms, Order{profile.nu() + k}, r, cfg, false);
}

}  // namespace finhankel
