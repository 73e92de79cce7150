#pragma once

#include <span>
#include <vector>

#include "finhankel/profiles.hpp"

namespace finhankel {

struct QuadratureConfig {
    double target_rel_tol = 1e-10;
    int max_panels = 20000;
    int nodes_per_panel = 32;
    /// Width of the initial oscillatory panels, in half-periods of cos(r s).
    int half_periods_per_panel = 4;

    /// Throws domain_error when a field is out of range.
    void validate() const;
};

struct QuadratureResult {
    complex value;
    double error_estimate = 0.0;
    int panels_used = 0;
    /// False when the panel budget ran out before the target was reached;
    /// value and error_estimate still hold the best available result.
    bool tolerance_met = true;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Integral over (0, 1) of sum_t c s^lambda (1 - s^2)^(rho - 1) J_nu(r s),
/// optionally multiplied by smooth_cutoff(s).
QuadratureResult hankel_of_terms(std::span<const ProfileTerm> terms, Order order, double r,
                                 const QuadratureConfig& cfg = {}, bool with_cutoff = false);

/// Finite Hankel transform of the profile at r > 0.
QuadratureResult finite_hankel(const RadialProfile& profile, double r, const QuadratureConfig& cfg = {});

/// (2 pi)^(n/2) r^(1 - n/2).
double fourier_prefactor(int dimension, double r);

/// Fourier transform of the radial function on R^n at |xi| = r.
complex radial_fourier(const RadialProfile& profile, double r, const QuadratureConfig& cfg = {});

/// I_k = integral of s^(nu+k+1) phi^(k)(s^2) J_(nu+k)(r s) over (0, 1).
QuadratureResult iterated_transform(const RadialProfile& profile, int k, double r,
                                    const QuadratureConfig& cfg = {});

}  // namespace finhankel
