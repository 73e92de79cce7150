#pragma once

#include <span>
#include <vector>

#include "finhankel/specfun.hpp"

namespace finhankel {

/// coeff * s^lambda * (1 - s^2)^(rho - 1) on (0, 1).
struct ProfileTerm {
    complex coeff;
    complex lambda;
    complex rho;
};

/// Radial profile in dimension n >= 2: a finite sum of closed-form terms.
///
/// With vanishes_near_one set, the terms describe the profile near the origin
/// only; the profile itself is taken to be the term sum multiplied by a fixed
/// smooth cutoff that equals 1 on (0, 1/3] and 0 on [2/3, 1).
class RadialProfile {
public:
    RadialProfile(int dimension, std::vector<ProfileTerm> terms, bool vanishes_near_one = false);

    int dimension() const noexcept { return dimension_; }
    double nu() const noexcept { return 0.5 * dimension_ - 1.0; }
    Order order() const { return Order{nu()}; }
    std::span<const ProfileTerm> terms() const noexcept { return terms_; }
    bool vanishes_near_one() const noexcept { return vanishes_near_one_; }

    /// lambda of minimal real part over the terms with nonzero coefficient.
    complex mu() const noexcept { return mu_; }

    /// Same profile with every coefficient multiplied by `factor`.
    RadialProfile scaled(complex factor) const;

private:
    int dimension_;
    std::vector<ProfileTerm> terms_;
    bool vanishes_near_one_;
    complex mu_;
};

struct OriginExpansion {
    complex mu;
    std::vector<complex> coeffs;  // coeffs[k] = c_k for k = 0..max_k
    int max_k = 0;

    complex coeff(int k) const { return k >= 0 && k <= max_k ? coeffs[k] : complex{}; }
    bool all_zero() const;
};

struct BoundaryTerm {
    complex exponent;
    complex coeff;
};

struct BoundaryExpansion {
    std::vector<BoundaryTerm> terms;  // increasing real part, all coefficients nonzero
    complex Lambda;
    int N = 0;
    /// Dropped exponents (real part >= Re Lambda) of the expansion, ascending;
    /// they describe the regularity of the remainder factor psi.
    std::vector<complex> tail_exponents;

    /// a_k for the given exponent, zero when absent.
    complex coefficient_at(complex exponent) const;
};

/// Infinitely smooth step: 1 on (0, 1/3], 0 on [2/3, 1).
double smooth_cutoff(double s);

/// Profile value at s in (0, 1), including the cutoff for vanishes_near_one.
complex evaluate(const RadialProfile& profile, double s);

/// Value of the term sum alone (no cutoff); accepts any s in (0, 1).
complex evaluate_terms(std::span<const ProfileTerm> terms, double s);

/// phi(t) = profile(sqrt t) / t^(n/4), the function expanded at t = 1.
complex evaluate_phi(const RadialProfile& profile, double t);

OriginExpansion origin_expansion(const RadialProfile& profile, int max_k = 8);

BoundaryExpansion boundary_expansion(const RadialProfile& profile, int max_j = 8, int N = 0);

/// Terms of s^(nu+k+1) phi^(k)(s^2), where phi^(k) is the k-th derivative of
/// phi(t) in t. Requires Re(rho - 1) >= k for every term and 0 <= k <= 8.
std::vector<ProfileTerm> derivative_terms(const RadialProfile& profile, int k);

}  // namespace finhankel
