#pragma once

#include <complex>

namespace finhankel {

using complex = std::complex<double>;

/// Real Bessel order. Construction enforces nu > -1.
class Order {
public:
    explicit Order(double nu);
    double value() const noexcept { return nu_; }

private:
    double nu_;
};

namespace specfun {

/// J_nu(x) for x >= 0. Power series for small x, Hankel expansion for large
/// x, Miller backward recurrence where neither converges fast enough.
double bessel_j(Order order, double x);

/// Leading large-argument form sqrt(2/(pi z)) cos(z - nu pi/2 - pi/4).
double bessel_j_leading(Order order, double z);

/// Gamma on the complex plane (Lanczos with reflection). Throws pole_error at
/// z = 0, -1, -2, ...
complex gamma(complex z);

/// 1/Gamma(z); entire, and exactly zero at the nonpositive integers.
complex reciprocal_gamma(complex z);

/// sin(pi z) with exact zeros at integer z.
complex sin_pi(complex z);

/// Generalized binomial coefficient a (a-1) ... (a-j+1) / j!.
complex binomial(complex a, int j);

/// a (a-1) ... (a-j+1); equals 1 for j = 0.
complex falling_factorial(complex a, int j);

}  // namespace specfun
}  // namespace finhankel
