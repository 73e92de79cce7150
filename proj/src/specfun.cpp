#include "finhankel/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "finhankel/errors.hpp"

namespace finhankel {

Order::Order(double nu) : nu_(nu) {
    if (!std::isfinite(nu) || !(nu > -1.0)) {
        throw domain_error("Bessel order must be a finite real number > -1");
    }
}

namespace specfun {
namespace {

constexpr double kPi = std::numbers::pi;

// Above this argument the power series loses too many digits to cancellation
// even in long double (the largest term grows like e^x / sqrt(2 pi x)).
constexpr double kSeriesLimit = 17.0;
constexpr int kMaxHankelTerms = 60;

// sin(pi x) and cos(pi x) for real x, exact at integers and half-integers.
double sinpi_real(double x) {
    double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
    const double sign = r < 0 ? -1.0 : 1.0;
    r = std::fabs(r);
    double v;
    if (r <= 0.25) {
        v = std::sin(kPi * r);
    } else if (r <= 0.75) {
        v = std::cos(kPi * (r - 0.5));
    } else {
        v = std::sin(kPi * (1.0 - r));
    }
    return sign * v;
}

double cospi_real(double x) {
    double r = std::fabs(x - 2.0 * std::round(0.5 * x));
    if (r <= 0.25) return std::cos(kPi * r);
    if (r <= 0.75) return -std::sin(kPi * (r - 0.5));
    return -std::cos(kPi * (1.0 - r));
}

bool is_nonpositive_integer(complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// Lanczos approximation, g = 7, nine coefficients; valid for Re z >= 1/2.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

complex log_gamma_right(complex z) {
    const complex zm = z - 1.0;
    complex series = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        series += kLanczos[i] / (zm + static_cast<double>(i));
    }
    const complex t = zm + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(series);
}

struct Neumaier {
    long double sum = 0.0L;
    long double carry = 0.0L;
    void add(long double x) {
        const long double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    long double value() const { return sum + carry; }
};

double bessel_series(double nu, double x) {
    const long double half = 0.5L * x;
    const long double q = -half * half;
    Neumaier acc;
    long double term = 1.0L;
    acc.add(term);
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<long double>(k) * (nu + k));
        acc.add(term);
        if (k > half && std::fabs(term) < 1e-22L * std::fabs(acc.value())) break;
    }
    const long double prefactor =
        std::exp(nu * std::log(half) - std::lgamma(static_cast<long double>(nu) + 1.0L));
    return static_cast<double>(prefactor * acc.value());
}

// Hankel large-argument expansion. Returns false when the asymptotic series
// does not get below 1e-15 before its terms start growing.
bool bessel_hankel(double nu, double x, double& out) {
    const double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double previous = 1.0;
    bool converged = false;
    for (int k = 1; k <= kMaxHankelTerms; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k * x);
        const double mag = std::fabs(term);
        if (mag > previous && k > 1) break;
        // k = 1, 2, 3, 4, ... contribute +Q, -P, -Q, +P, ...
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            default: p += term; break;
        }
        if (mag < 1e-17) {
            converged = true;
            break;
        }
        previous = mag;
    }
    if (!converged && previous > 1e-15) return false;

    // cos(x - c) and sin(x - c) with c = (nu/2 + 1/4) pi, without forming x - c.
    const double c = (0.5 * nu + 0.25) * kPi;
    const double sx = std::sin(x), cx = std::cos(x);
    const double sc = std::sin(c), cc = std::cos(c);
    const double cos_chi = cx * cc + sx * sc;
    const double sin_chi = sx * cc - cx * sc;
    out = std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
    return true;
}

// Miller backward recurrence normalised with
//   (x/2)^nu / Gamma(nu+1) = sum_k (nu+2k) (nu+1)_{k-1} / k! J_{nu+2k}(x).
double bessel_miller(double nu, double x) {
    int top = static_cast<int>(std::ceil(x + 40.0 + 12.0 * std::cbrt(x)));
    if (top % 2 != 0) ++top;
    long double above = 0.0L;
    long double current = 1e-300L;
    long double norm = 0.0L;
    std::vector<long double> weight(top / 2 + 1);
    weight[0] = 1.0L;
    long double g = 1.0L;  // (nu+1)_{k-1} / k!
    for (int k = 1; k <= top / 2; ++k) {
        if (k > 1) g *= (nu + k - 1) / static_cast<long double>(k);
        weight[k] = (nu + 2.0L * k) * g;
    }
    for (int j = top; j > 0; --j) {
        if (j % 2 == 0) norm += weight[j / 2] * current;
        const long double below = (2.0L * (nu + j) / x) * current - above;
        above = current;
        current = below;
        if (std::fabs(current) > 1e250L) {
            current *= 1e-250L;
            above *= 1e-250L;
            norm *= 1e-250L;
        }
    }
    norm += current;  // j = 0 term, weight 1
    const long double lhs =
        std::exp(nu * std::log(0.5L * x) - std::lgamma(static_cast<long double>(nu) + 1.0L));
    return static_cast<double>(current * lhs / norm);
}

}  // namespace

double bessel_j(Order order, double x) {
    const double nu = order.value();
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw domain_error("bessel_j: argument must be finite and >= 0");
    }
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw domain_error("bessel_j: J_nu(0) is unbounded for negative order");
    }
    if (x <= kSeriesLimit) return bessel_series(nu, x);
    double value;
    if (bessel_hankel(nu, x, value)) return value;
    return bessel_miller(nu, x);
}

double bessel_j_leading(Order order, double z) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw domain_error("bessel_j_leading: argument must be > 0");
    }
    const double c = (0.5 * order.value() + 0.25) * kPi;
    const double cos_chi = std::cos(z) * std::cos(c) + std::sin(z) * std::sin(c);
    return std::sqrt(2.0 / (kPi * z)) * cos_chi;
}

complex sin_pi(complex z) {
    const double a = z.real(), b = z.imag();
    if (b == 0.0) return {sinpi_real(a), 0.0};
    return {sinpi_real(a) * std::cosh(kPi * b), cospi_real(a) * std::sinh(kPi * b)};
}

complex gamma(complex z) {
    if (is_nonpositive_integer(z)) {
        throw pole_error("gamma: pole at nonpositive integer");
    }
    if (z.real() < 0.5) {
        return kPi / (sin_pi(z) * std::exp(log_gamma_right(1.0 - z)));
    }
    return std::exp(log_gamma_right(z));
}

complex reciprocal_gamma(complex z) {
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    if (z.real() < 0.5) {
        return sin_pi(z) * std::exp(log_gamma_right(1.0 - z)) / kPi;
    }
    return std::exp(-log_gamma_right(z));
}

complex falling_factorial(complex a, int j) {
    complex p = 1.0;
    for (int i = 0; i < j; ++i) p *= a - static_cast<double>(i);
    return p;
}

complex binomial(complex a, int j) {
    complex p = 1.0;
    for (int i = 0; i < j; ++i) p *= (a - static_cast<double>(i)) / static_cast<double>(i + 1);
    return p;
}

}  // namespace specfun
}  // namespace finhankel
