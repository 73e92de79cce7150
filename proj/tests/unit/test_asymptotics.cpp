#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "finhankel/asymptotics.hpp"
#include "finhankel/errors.hpp"
#include "finhankel/quadrature.hpp"
#include "oracles/oracle_values.hpp"

using namespace finhankel;

namespace {

constexpr double kPi = std::numbers::pi;

RadialProfile single(int n, complex c, complex lambda, complex rho, bool vanishes = false) {
    return RadialProfile(n, {{c, lambda, rho}}, vanishes);
}

OriginExpansion manual(complex mu, std::vector<complex> coeffs) {
    OriginExpansion e;
    e.mu = mu;
    e.max_k = static_cast<int>(coeffs.size()) - 1;
    e.coeffs = std::move(coeffs);
    return e;
}

}  // namespace

TEST_CASE("k_set examples") {
    const auto a = k_set(manual(0.0, std::vector<complex>(7, 1.0)), Order{0.0});
    CHECK(a.members == std::vector<int>{0, 2, 4, 6});
    REQUIRE(a.k0);
    CHECK(*a.k0 == 0);

    const auto sonine = origin_expansion(single(3, 1.0, 1.5, 2.75), 8);
    CHECK(k_set(sonine, Order{0.5}).empty());
    CHECK(!k_set(sonine, Order{0.5}).k0);

    const auto b = k_set(manual(0.5, {0.0, 1.0}), Order{0.0});
    CHECK(b.members == std::vector<int>{1});
    CHECK(*b.k0 == 1);

    CHECK_THROWS_AS(k_set(manual(-1.0, {1.0}), Order{0.0}), hypothesis_error);

    // complex mu is never excluded
    const auto c = k_set(manual(complex(1.0, 0.5), {1.0, 1.0}), Order{0.0});
    CHECK(c.members == std::vector<int>{0, 1});
}

TEST_CASE("provable emptiness of K") {
    CHECK(k_set_provably_empty(single(2, 1.0, 1.0, 0.3, true)));
    CHECK(k_set_provably_empty(single(4, 2.0, 2.0, 1.7)));
    CHECK(k_set_provably_empty(single(2, 1.0, 3.0, 2.2)));  // (3 - 1)/2 = 1
    CHECK(!k_set_provably_empty(single(2, 1.0, 0.0, 1.0)));
    CHECK(!k_set_provably_empty(single(3, 1.0, 1.0, 0.5)));
    // terminating series whose surviving contributions cancel exactly
    const RadialProfile cancel(2, {{1.0, 0.0, 2.0}, {-1.0, 0.0, 1.0}, {1.0, 2.0, 1.0}});
    CHECK(k_set_provably_empty(cancel));
    // same shape but the cancellation fails
    const RadialProfile partial(2, {{1.0, 0.0, 2.0}, {-1.0, 0.0, 1.0}});
    CHECK(!k_set_provably_empty(partial));
}

TEST_CASE("origin_term amplitudes") {
    const auto e = manual(0.5, {1.0});
    const auto t = origin_term(e, Order{0.0}, 0);
    CHECK(std::abs(t.amplitude - oracle::kOriginAmplitudeHalf) < 1e-13);
    CHECK(t.exponent == complex(1.5));
    CHECK(!t.phase);

    const auto killed = origin_term(manual(1.0, {1.0}), Order{0.0}, 0);
    CHECK(killed.amplitude == complex{});

    // every k outside K yields an exact zero
    const auto s = origin_expansion(single(4, 1.0, 2.0, 0.4), 8);
    const auto K = k_set(s, Order{1.0});
    for (int k = 0; k <= 8; ++k) {
        const bool member = std::find(K.members.begin(), K.members.end(), k) != K.members.end();
        if (!member) CHECK(origin_term(s, Order{1.0}, k).amplitude == complex{});
    }

    // structure: c_k Gamma((mu+k+nu+1)/2) 2^(mu+k) / Gamma((nu-mu-k+1)/2)
    const auto g = manual(0.2, {2.0, -1.0, 0.5});
    for (int k = 0; k <= 2; ++k) {
        const double m = 0.2 + k, nu = 1.5;
        const double expected =
            g.coeffs[k].real() * std::tgamma((m + nu + 1) / 2) * std::pow(2.0, m) / std::tgamma((nu - m + 1) / 2);
        CHECK(std::abs(origin_term(g, Order{nu}, k).amplitude - expected) <= 1e-12 * std::fabs(expected));
    }
}

TEST_CASE("boundary_term examples") {
    BoundaryExpansion b;
    b.terms = {{0.0, 1.0}};
    const auto t = boundary_term(b, Order{0.0});
    CHECK(std::abs(t.amplitude - std::sqrt(2.0 / kPi)) < 1e-15);
    CHECK(t.exponent == complex(1.5));
    REQUIRE(t.phase);
    CHECK(std::abs(t.phase->offset - (-0.75 * kPi)) < 1e-15);

    b.terms = {{1.0, 2.0}};
    const auto u = boundary_term(b, Order{0.5});
    CHECK(std::abs(u.amplitude - 2.0 * std::pow(2.0, 1.5) / std::sqrt(kPi)) < 1e-14);
    CHECK(u.exponent == complex(2.5));

    b.terms = {{-1.0, 1.0}};
    CHECK_THROWS_AS(boundary_term(b, Order{0.0}), hypothesis_error);

    // matches the leading large-r form of the Sonine closed form
    for (double alpha : {0.0, 1.0, 2.5}) {
        for (double nu : {0.0, 0.5, 1.5}) {
            b.terms = {{alpha, 1.0}};
            const auto s = boundary_term(b, Order{nu});
            for (double r : {100.0, 1234.5}) {
                const double lead = std::pow(2.0, alpha) * std::tgamma(alpha + 1) * std::pow(r, -(alpha + 1)) *
                                    specfun::bessel_j_leading(Order{nu + alpha + 1}, r);
                CHECK(std::abs(s.evaluate(r) - lead) <= 1e-12 * std::pow(r, -(alpha + 1.5)));
            }
        }
    }
}

TEST_CASE("evaluate_prediction") {
    Prediction p;
    CHECK(evaluate_prediction(p, 3.0) == complex{});
    p.origin_terms.push_back({2.0, 1.5, std::nullopt});
    CHECK(std::abs(evaluate_prediction(p, 4.0) - 0.25) < 1e-15);

    Prediction q;
    q.boundary_terms.push_back({1.0, 1.5, Phase{1.0, -0.75 * kPi}});
    for (double r : cosine_zeros(*q.boundary_terms[0].phase, 100.0, 120.0)) {
        CHECK(std::abs(evaluate_prediction(q, r)) < 1e-16);
    }

    // complex exponent: r^-e = r^-Re(e) exp(-i Im(e) ln r)
    const AsymptoticTerm z{1.0, complex(1.0, 2.0), std::nullopt};
    const double r = 7.0;
    CHECK(std::abs(z.evaluate(r) - std::exp(complex(0, -2.0 * std::log(r))) / r) < 1e-15);
}

TEST_CASE("predict on example profiles") {
    // f = |x|^(lambda - n/2) (1 - |x|^2)^(rho - 1): mu = lambda and lambda_0 = rho - 1
    const auto p = predict(single(3, 1.0, 0.0, 0.5), 1);
    REQUIRE(p.origin_terms.size() == 1);
    CHECK(std::abs(p.origin_terms[0].exponent - 1.0) < 1e-15);
    REQUIRE(p.boundary_terms.size() == 1);
    CHECK(std::abs(p.boundary_terms[0].exponent - (-0.5 + 1.5)) < 1e-15);

    const auto sonine = predict(single(2, 1.0, 1.0, 3.0), 3);
    CHECK(sonine.origin_terms.empty());
    REQUIRE(sonine.boundary_terms.size() == 1);
    CHECK(std::abs(sonine.boundary_terms[0].exponent - 3.5) < 1e-15);
    CHECK(sonine.valid_error_order == doctest::Approx(3.5));

    const auto cut = predict(single(2, 1.0, 1.0, 1.0, true), 2);
    CHECK(cut.boundary_terms.empty());
    CHECK(cut.origin_terms.empty());
    CHECK(std::isinf(cut.valid_error_order));

    const auto origin_only = predict(single(2, 1.0, 0.5, 6.0), 3);
    REQUIRE(origin_only.origin_terms.size() == 3);
    CHECK(std::abs(origin_only.origin_terms[2].exponent - 5.5) < 1e-15);
    CHECK(origin_only.valid_error_order == doctest::Approx(5.5));
}

TEST_CASE("dominance") {
    Prediction p;
    CHECK_THROWS_AS(dominance(p), empty_prediction);

    p.origin_terms.push_back({1.0, 1.5, std::nullopt});
    p.boundary_terms.push_back({1.0, 6.5, Phase{1.0, 0.0}});
    CHECK(dominance(p).kind == Dominance::origin);

    p.origin_terms[0].amplitude = 0.0;
    CHECK(dominance(p).kind == Dominance::boundary);

    p.origin_terms[0] = {1.0, 6.5, std::nullopt};
    CHECK(dominance(p).kind == Dominance::balanced);

    const auto q = predict(single(2, 1.0, 0.5, 6.0), 1);
    CHECK(dominance(q).kind == Dominance::origin);
    CHECK(&dominant_term(q) == &q.origin_terms[0]);
}

TEST_CASE("phase grids") {
    const Phase ph{1.0, -0.75 * kPi};
    const auto zeros = cosine_zeros(ph, 50.0, 80.0);
    const auto ext = cosine_extrema(ph, 50.0, 80.0);
    REQUIRE(zeros.size() >= 9);
    for (double r : zeros) {
        CHECK(r >= 50.0);
        CHECK(r <= 80.0);
        CHECK(std::fabs(std::cos(r + ph.offset.real())) < 1e-6);
    }
    for (double r : ext) CHECK(std::fabs(std::fabs(std::cos(r + ph.offset.real())) - 1.0) < 1e-12);
}

TEST_CASE("loglog slope") {
    std::vector<double> x, y;
    for (double r = 10; r < 1000; r *= 1.3) {
        x.push_back(r);
        y.push_back(-3.0 * std::pow(r, -2.5));
    }
    CHECK(loglog_slope(x, y) == doctest::Approx(-2.5).epsilon(1e-12));
    CHECK_THROWS_AS(loglog_slope(std::vector<double>{1.0}, std::vector<double>{1.0}), domain_error);
}

TEST_CASE("origin-dominant prediction tracks the quadrature oracle") {
    const auto profile = single(2, 1.0, 0.5, 6.0);
    const auto p = predict(profile, 1);
    double previous = 1.0;
    for (double r : {500.0, 1000.0, 2000.0}) {
        const complex q = finite_hankel(profile, r).value;
        const double err = std::abs(q - evaluate_prediction(p, r)) / std::abs(q);
        CAPTURE(r);
        CHECK(err < 0.02);
        CHECK(err < previous);
        previous = err;
    }
}
