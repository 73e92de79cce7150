#pragma once

#include <optional>
#include <span>
#include <vector>

#include "finhankel/profiles.hpp"

namespace finhankel {

struct KSet {
    std::vector<int> members;  // ascending, within [0, max_k]
    std::optional<int> k0;
    int max_k = 0;

    bool empty() const noexcept { return members.empty(); }
};

/// cos(freq * r + offset); offset is complex when lambda_0 is.
struct Phase {
    double freq = 1.0;
    complex offset;
};

/// amplitude * r^(-exponent) [* cos(freq r + offset)].
struct AsymptoticTerm {
    complex amplitude;
    complex exponent;
    std::optional<Phase> phase;

    complex evaluate(double r) const;
};

struct Prediction {
    std::vector<AsymptoticTerm> origin_terms;
    std::vector<AsymptoticTerm> boundary_terms;
    /// Remainder is o(r^-valid_error_order); infinite when it decays faster
    /// than every power.
    double valid_error_order = 0.0;

    bool empty() const noexcept { return origin_terms.empty() && boundary_terms.empty(); }
};

enum class Dominance { origin, boundary, balanced };

struct DominanceReport {
    Dominance kind;
    double origin_order;    // Re(mu + k0 + 1), +inf without origin terms
    double boundary_order;  // Re(lambda_0 + 3/2), +inf without boundary terms
};

/// Indices k <= max_k with c_k != 0 and (mu + k - nu - 1)/2 not in N_0.
KSet k_set(const OriginExpansion& origin, Order nu);

/// True when K is empty for every k, not only within a scan bound: each
/// coefficient of the full expansion either vanishes or sits on an excluded
/// exponent.
bool k_set_provably_empty(const RadialProfile& profile);

/// Origin term c_k Gamma((mu+k+nu+1)/2) 2^(mu+k) / Gamma((nu-mu-k+1)/2) r^-(mu+k+1).
AsymptoticTerm origin_term(const OriginExpansion& origin, Order nu, int k);

/// Leading boundary term
/// a_0 2^(lambda_0 + 1/2) Gamma(lambda_0 + 1) / sqrt(pi) r^-(lambda_0 + 3/2) cos(r - pi (nu + lambda_0 + 1)/2 - pi/4).
AsymptoticTerm boundary_term(const BoundaryExpansion& boundary, Order nu);

Prediction predict(const RadialProfile& profile, int n_origin_terms, int max_k = 8, int max_j = 8);

complex evaluate_prediction(const Prediction& p, double r);

/// Throws empty_prediction when the prediction has no terms.
DominanceReport dominance(const Prediction& p);

/// The term that controls the decay: origin or boundary per dominance(),
/// first nonzero one of that family.
const AsymptoticTerm& dominant_term(const Prediction& p);

/// Points r_j = -Re(offset) + pi/2 + j pi in [r_min, r_max] where the phase
/// factor vanishes.
std::vector<double> cosine_zeros(const Phase& phase, double r_min, double r_max);

/// Points r_j = -Re(offset) + j pi in [r_min, r_max] where |cos| = 1.
std::vector<double> cosine_extrema(const Phase& phase, double r_min, double r_max);

/// Least-squares slope of log|y| against log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace finhankel
