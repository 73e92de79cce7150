#include "finhankel/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "finhankel/errors.hpp"

namespace finhankel {
namespace {

constexpr double kExponentTol = 1e-12;
constexpr double kCancelTol = 1e-13;
// Extra ladder positions explored beyond max_k so that re-basing mu after
// cancellation still yields max_k + 1 coefficients.
constexpr int kLadderSlack = 64;

bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// s^e for s > 0 on the principal branch.
complex real_pow(double s, complex e) {
    if (e.imag() == 0.0) return std::pow(s, e.real());
    return std::exp(e * std::log(s));
}

// Integer offset d = z if z is a nonnegative integer within tolerance.
bool nonneg_integer(complex z, int& d) {
    if (std::fabs(z.imag()) > kExponentTol) return false;
    const double r = std::round(z.real());
    if (std::fabs(z.real() - r) > kExponentTol || r < 0.0 || r > 1e6) return false;
    d = static_cast<int>(r);
    return true;
}

std::string describe(complex z) {
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

}  // namespace

RadialProfile::RadialProfile(int dimension, std::vector<ProfileTerm> terms, bool vanishes_near_one)
    : dimension_(dimension), terms_(std::move(terms)), vanishes_near_one_(vanishes_near_one) {
    if (dimension_ < 2) throw invalid_profile("dimension must be at least 2");
    if (terms_.empty()) throw invalid_profile("profile needs at least one term");
    bool any = false;
    for (const auto& t : terms_) {
        if (!finite(t.coeff) || !finite(t.lambda) || !finite(t.rho)) {
            throw invalid_profile("profile term has a non-finite component");
        }
        if (t.coeff == complex{}) continue;
        if (!any || t.lambda.real() < mu_.real()) mu_ = t.lambda;
        any = true;
        if (!vanishes_near_one_ && !(t.rho.real() > 0.0)) {
            throw invalid_profile("Re(rho) must be positive, got rho = " + describe(t.rho));
        }
    }
    if (!any) throw invalid_profile("all term coefficients are zero");
    if (!(mu_.real() + nu() > -1.0)) {
        throw invalid_profile("Re(mu + nu) must exceed -1, got mu = " + describe(mu_));
    }
}

RadialProfile RadialProfile::scaled(complex factor) const {
    auto terms = terms_;
    for (auto& t : terms) t.coeff *= factor;
    return RadialProfile(dimension_, std::move(terms), vanishes_near_one_);
}

bool OriginExpansion::all_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](complex c) { return c == complex{}; });
}

complex BoundaryExpansion::coefficient_at(complex exponent) const {
    for (const auto& t : terms) {
        if (std::abs(t.exponent - exponent) <= kExponentTol) return t.coeff;
    }
    return {};
}

double smooth_cutoff(double s) {
    constexpr double a = 1.0 / 3.0, b = 2.0 / 3.0;
    if (s <= a) return 1.0;
    if (s >= b) return 0.0;
    const double left = std::exp(-1.0 / (b - s));
    const double right = std::exp(-1.0 / (s - a));
    return left / (left + right);
}

complex evaluate_terms(std::span<const ProfileTerm> terms, double s) {
    const double w = (1.0 - s) * (1.0 + s);
    complex sum{};
    for (const auto& t : terms) {
        if (t.coeff == complex{}) continue;
        sum += t.coeff * real_pow(s, t.lambda) * real_pow(w, t.rho - 1.0);
    }
    return sum;
}

complex evaluate(const RadialProfile& profile, double s) {
    if (!(s > 0.0 && s < 1.0)) throw domain_error("evaluate: s must lie in (0, 1)");
    const complex v = evaluate_terms(profile.terms(), s);
    return profile.vanishes_near_one() ? v * smooth_cutoff(s) : v;
}

complex evaluate_phi(const RadialProfile& profile, double t) {
    if (!(t > 0.0 && t < 1.0)) throw domain_error("evaluate_phi: t must lie in (0, 1)");
    const double s = std::sqrt(t);
    return evaluate(profile, s) / std::pow(t, 0.25 * profile.dimension());
}

OriginExpansion origin_expansion(const RadialProfile& profile, int max_k) {
    if (max_k < 0) throw domain_error("origin_expansion: max_k must be nonnegative");
    const complex mu0 = profile.mu();
    const int span = max_k + kLadderSlack;
    std::vector<complex> raw(span + 1);
    std::vector<double> scale(span + 1, 0.0);
    for (const auto& t : profile.terms()) {
        if (t.coeff == complex{}) continue;
        int d = 0;
        if (!nonneg_integer(t.lambda - mu0, d)) {
            throw incompatible_ladder("term exponent " + describe(t.lambda) +
                                      " is not mu plus a nonnegative integer, mu = " + describe(mu0));
        }
        complex b = 1.0;  // (-1)^j binom(rho - 1, j)
        for (int j = 0; d + 2 * j <= span; ++j) {
            if (j > 0) b *= -(t.rho - 1.0 - static_cast<double>(j - 1)) / static_cast<double>(j);
            const complex contribution = t.coeff * b;
            raw[d + 2 * j] += contribution;
            scale[d + 2 * j] += std::abs(contribution);
        }
    }
    for (int k = 0; k <= span; ++k) {
        if (std::abs(raw[k]) <= kCancelTol * scale[k]) raw[k] = {};
    }

    OriginExpansion out;
    out.max_k = max_k;
    out.coeffs.assign(max_k + 1, complex{});
    out.mu = mu0;
    int first = 0;
    while (first <= span && raw[first] == complex{}) ++first;
    if (first > span) return out;
    out.mu = mu0 + static_cast<double>(first);
    for (int k = 0; k <= max_k && first + k <= span; ++k) out.coeffs[k] = raw[first + k];
    return out;
}

BoundaryExpansion boundary_expansion(const RadialProfile& profile, int max_j, int N) {
    if (profile.vanishes_near_one()) {
        throw not_applicable("profile vanishes near s = 1; it has no boundary expansion");
    }
    if (max_j < 0 || N < 0) throw domain_error("boundary_expansion: max_j and N must be nonnegative");

    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& t : profile.terms()) {
        if (t.coeff == complex{}) continue;
        const double b = t.rho.real() - 1.0;
        lo = first ? b : std::min(lo, b);
        hi = first ? b : std::max(hi, b);
        first = false;
    }
    // Every exponent below lo + 2 (max_j + 1) is generated, which covers the
    // retained window and one more window of tail exponents.
    const int count = static_cast<int>(std::ceil(hi - lo)) + 2 * (max_j + 1) + kLadderSlack;

    struct Raw {
        complex exponent;
        complex coeff;
        double scale;
    };
    std::vector<Raw> raw;
    const double quarter_n = 0.25 * profile.dimension();
    for (const auto& t : profile.terms()) {
        if (t.coeff == complex{}) continue;
        const complex a = 0.5 * t.lambda - quarter_n;
        complex b = 1.0;  // (-1)^j binom(a, j)
        for (int j = 0; j <= count; ++j) {
            if (j > 0) b *= -(a - static_cast<double>(j - 1)) / static_cast<double>(j);
            if (b == complex{}) break;
            const complex e = t.rho - 1.0 + static_cast<double>(j);
            const complex c = t.coeff * b;
            auto hit = std::find_if(raw.begin(), raw.end(),
                                    [&](const Raw& r) { return std::abs(r.exponent - e) <= kExponentTol; });
            if (hit == raw.end()) {
                raw.push_back({e, c, std::abs(c)});
            } else {
                hit->coeff += c;
                hit->scale += std::abs(c);
            }
        }
    }
    std::erase_if(raw, [](const Raw& r) { return std::abs(r.coeff) <= kCancelTol * r.scale; });
    std::stable_sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
        return x.exponent.real() < y.exponent.real();
    });
    if (raw.empty()) throw hypothesis_error("boundary expansion vanishes identically");

    BoundaryExpansion out;
    out.N = N;
    out.Lambda = raw.front().exponent + static_cast<double>(max_j + 1);
    const double cut = out.Lambda.real();
    for (const auto& r : raw) {
        if (r.exponent.real() < cut - kExponentTol) {
            out.terms.push_back({r.exponent, r.coeff});
        } else if (r.exponent.real() < cut + max_j + 1) {
            out.tail_exponents.push_back(r.exponent);
        }
    }
    for (std::size_t i = 1; i < out.terms.size(); ++i) {
        if (std::fabs(out.terms[i].exponent.real() - out.terms[i - 1].exponent.real()) <= kExponentTol) {
            throw exponent_collision("boundary exponents " + describe(out.terms[i - 1].exponent) + " and " +
                                     describe(out.terms[i].exponent) + " share a real part");
        }
    }
    return out;
}

std::vector<ProfileTerm> derivative_terms(const RadialProfile& profile, int k) {
    if (k < 0 || k > 8) throw smoothness_budget("derivative order must lie in [0, 8]");
    if (profile.vanishes_near_one()) {
        throw not_applicable("derivative terms are not available for profiles with a cutoff");
    }
    std::vector<ProfileTerm> out;
    const double quarter_n = 0.25 * profile.dimension();
    for (const auto& t : profile.terms()) {
        if (t.coeff == complex{}) continue;
        if (t.rho.real() - 1.0 < k - kExponentTol) {
            throw smoothness_budget("Re(rho - 1) = " + std::to_string(t.rho.real() - 1.0) +
                                    " is below the derivative order " + std::to_string(k));
        }
        const complex a = 0.5 * t.lambda - quarter_n;
        const complex b = t.rho - 1.0;
        for (int j = 0; j <= k; ++j) {
            // binom(k, j) [t^a]^(j) [(1 - t)^b]^(k - j)
            const complex c = t.coeff * specfun::binomial(static_cast<double>(k), j) *
                              specfun::falling_factorial(a, j) * specfun::falling_factorial(b, k - j) *
                              ((k - j) % 2 == 0 ? 1.0 : -1.0);
            if (c == complex{}) continue;
            out.push_back({c, t.lambda + static_cast<double>(k - 2 * j), t.rho - static_cast<double>(k - j)});
        }
    }
    return out;
}

}  // namespace finhankel
