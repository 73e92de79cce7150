#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finhankel/asymptotics.hpp"
#include "finhankel/quadrature.hpp"

namespace finhankel {

enum class Status { invertible, not_invertible, inconclusive };

const char* to_string(Status s) noexcept;

/// Rule tags carried by verdicts and certificates.
namespace rules {
inline constexpr const char* smooth_profile = "smooth-profile";  // both endpoint expansions present
inline constexpr const char* flat_boundary = "flat-boundary";    // profile flat at s = 1, origin dominant
inline constexpr const char* boundary_free = "boundary-free";    // profile vanishes near s = 1
inline constexpr const char* convolution = "convolution";
inline constexpr const char* scaling = "scaling";
inline constexpr const char* translation = "translation";
inline constexpr const char* diffop_sum = "diffop-sum";
inline constexpr const char* smooth_perturbation = "smooth-perturbation";
inline constexpr const char* tensor = "tensor";
inline constexpr const char* point_mass = "point-mass";
inline constexpr const char* external = "external";
inline constexpr const char* none = "none";
}  // namespace rules

struct Verdict {
    Status status = Status::inconclusive;
    std::string rule = rules::none;
    std::vector<std::string> trace;
};

/// Classifies the compactly supported radial distribution built from the
/// profile. N fixes the smoothness budget; by default the smallest budget
/// that can satisfy each route is used. Hypothesis failures end up in the
/// trace of an inconclusive verdict; nothing is thrown.
Verdict classify(const RadialProfile& profile, int max_k = 8, std::optional<int> N = std::nullopt,
                 int max_j = 8);

struct SlowDecreaseParams {
    double A = 1.0;
    double B = 6.283185307179586;
    double C = 1.0;
    double alpha = 0.0;  // weight exponent of the sampled q relative to the transform

    void validate() const;
};

struct WindowResult {
    double x;
    double sup;
    double threshold;
    bool pass;
};

struct CheckReport {
    SlowDecreaseParams params;
    std::vector<WindowResult> windows;
    bool passed = false;
    double worst_margin = 0.0;  // min over windows of sup / threshold
    double worst_x = 0.0;
    std::vector<std::string> warnings;
    int tolerance_misses = 0;  // samples whose quadrature missed its target
};

/// For each grid center x in [r_min, r_max] compares the discrete sup of
/// `sampler` over |y - x| < B with C x^-A. Requires r_min >= B and
/// grid_step <= B / 8.
CheckReport slow_decrease_check(const std::function<double(double)>& sampler, const SlowDecreaseParams& params,
                                double r_min, double r_max, double grid_step);

struct VerifyOptions {
    double B = 6.283185307179586;
    double grid_step = 0.19634954084936207;  // pi / 16
    int max_k = 8;
};

/// Samples q(r) = r^nu |H(r)| by quadrature and runs slow_decrease_check
/// with A, C taken from the dominant predicted term.
CheckReport verify_profile_slow_decrease(const RadialProfile& profile, double r_min, double r_max,
                                         const QuadratureConfig& cfg = {}, const VerifyOptions& opts = {});

enum class CertKind { radial_profile, point_mass, convolution, scaled, translated, diffop_sum, smooth_perturbed, tensor };

const char* to_string(CertKind k) noexcept;

struct CombineParams {
    double alpha = 1.0;                // scaling factor for CertKind::scaled
    std::vector<double> shift;         // translation vector for CertKind::translated
};

struct Certificate {
    CertKind kind = CertKind::radial_profile;
    Verdict verdict;
    std::vector<Certificate> children;
};

/// Leaf certificate from a classifier verdict.
Certificate certify(const Verdict& v);

/// Leaf certificate for a finitely supported distribution with the given
/// weights; invertible when any weight is nonzero.
Certificate point_mass_certificate(const std::vector<double>& weights);

/// Applies a closure rule; throws rule_violation when a premise fails.
Certificate combine(CertKind kind, std::vector<Certificate> children, const CombineParams& params = {});

}  // namespace finhankel
