#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tap/generator.hpp"
#include "tap/rate.hpp"

using namespace tap;

TEST_CASE("slope_fit basics") {
    std::vector<double> xs{0.5, 0.25, 0.125, 0.0625};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(x * x * x);
    SlopeFit fit = slope_fit(xs, ys);
    CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.residual < 1e-12);

    ys.clear();
    for (double x : xs) ys.push_back(2.7 * std::pow(x, 1.5));
    fit = slope_fit(xs, ys);
    CHECK(fit.slope == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(std::exp(fit.intercept) == doctest::Approx(2.7).epsilon(1e-12));

    std::vector<double> two_x{0.5, 0.25}, two_y{1.0, 2.0};
    CHECK_THROWS_AS(slope_fit(two_x, two_y), std::invalid_argument);
    std::vector<double> bad_x{0.5, 0.25, -0.1}, bad_y{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(slope_fit(bad_x, bad_y), std::invalid_argument);
}

TEST_CASE("generator determinism and exact block energies") {
    DecaySpec spec;
    spec.d = 2;
    spec.K = 6;
    spec.s = 1.25;
    spec.seed = 4242;
    const SpectralFunction a = generate_test_function(spec);
    const SpectralFunction b = generate_test_function(spec);
    CHECK(max_abs_coeff_diff(a, b) == 0.0);  // bit-identical under the seed

    const auto energy = a.block_energies();
    for (int nu = 0; nu <= a.box().nu_max(); ++nu) {
        const double c = decay_magnitude(spec, nu);
        CHECK(energy[static_cast<std::size_t>(nu)] ==
              doctest::Approx(c * c).epsilon(1e-12));
    }

    spec.seed = 77;
    const SpectralFunction c = generate_test_function(spec);
    CHECK(max_abs_coeff_diff(a, c) > 0.0);

    DecaySpec bad = spec;
    bad.s = -1.0;
    CHECK_THROWS_AS(generate_test_function(bad), std::invalid_argument);
}

TEST_CASE("generator variants") {
    // steep decay: essentially only the mean survives
    DecaySpec steep;
    steep.d = 1;
    steep.K = 5;
    steep.s = 300.0;
    const SpectralFunction f = generate_test_function(steep);
    const auto e = f.block_energies();
    CHECK(e[0] == doctest::Approx(1.0));
    for (std::size_t nu = 1; nu < e.size(); ++nu) CHECK(e[nu] < 1e-100);

    // Y-only support is untouched by the projection
    DecaySpec yspec;
    yspec.d = 2;
    yspec.K = 4;
    yspec.s = 1.0;
    yspec.support = Support::YOnly;
    const SpectralFunction g = generate_test_function(yspec);
    CHECK(max_abs_coeff_diff(project_y(g), g) == 0.0);
    const auto ge = g.block_energies();
    for (int nu = 0; nu <= g.box().nu_max(); ++nu) {
        const double c = decay_magnitude(yspec, nu);
        CHECK(ge[static_cast<std::size_t>(nu)] ==
              doctest::Approx(c * c).epsilon(1e-12));
    }

    // single random index per block, Hermitian pairs
    DecaySpec one;
    one.d = 2;
    one.K = 5;
    one.s = 0.8;
    one.per_block = 1;
    one.real_valued = true;
    const SpectralFunction h = generate_test_function(one);
    CHECK(h.is_hermitian(1e-14));
    const auto he = h.block_energies();
    for (int nu = 0; nu <= h.box().nu_max(); ++nu) {
        const double c = decay_magnitude(one, nu);
        CHECK(he[static_cast<std::size_t>(nu)] ==
              doctest::Approx(c * c).epsilon(1e-12));
    }
}

TEST_CASE("rate_sweep single mode matches the lambda gap at every point") {
    for (int r : {1, 2, 3}) {
        const int nu = r + 2;
        std::vector<int> k{nu};
        const SpectralFunction mode = unit_mode(1, nu, k);
        const RateReport rep = rate_sweep(mode, r, LpExponent::two(), 2, 12);
        for (const RatePoint& pt : rep.points) {
            const double expect = 1.0 - lambda_coeff(nu, r, pt.rho);
            CHECK(std::abs(pt.error - expect) < 1e-12);
        }
        CHECK(rep.fit_valid);
        CHECK(rep.slope == doctest::Approx(static_cast<double>(r)).epsilon(0.05));
    }
}

TEST_CASE("rate_sweep flags exact reproduction of low-degree polynomials") {
    SpectralFunction low(2, 3);
    low.set_coeff(std::vector<int>{1, 0}, 1.0);
    low.set_coeff(std::vector<int>{0, 0}, 0.5);
    const RateReport rep = rate_sweep(low, 3, LpExponent::two(), 2, 8);
    CHECK(rep.exact_reproduction);
    CHECK_FALSE(rep.fit_valid);
    for (const RatePoint& pt : rep.points) CHECK(pt.error == 0.0);
}

TEST_CASE("rate_sweep validates its grid") {
    const SpectralFunction mode = unit_mode(1, 3, std::vector<int>{3});
    CHECK_THROWS_AS(rate_sweep(mode, 1, LpExponent::two(), 5, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(rate_sweep(mode, 1, LpExponent::two(), 0, 5),
                    std::invalid_argument);
}

TEST_CASE("theorem function construction wires g = f^[r-n]") {
    DecaySpec base;
    base.d = 1;
    base.K = 64;
    base.seed = 7;
    base.per_block = 1;
    const TheoremFunction tf = build_theorem_function(base, 3, 1, 0.5);

    // pipeline radial derivative of f reproduces g
    const SpectralFunction g2 = radial_derivative(tf.f, 2);
    CHECK(max_rel_coeff_diff(g2, tf.g) < 1e-13);

    // oracle energies match the pipeline block energies
    const auto ef = tf.f.block_energies();
    const auto eg = tf.g.block_energies();
    for (std::size_t nu = 0; nu < ef.size(); ++nu) {
        CHECK(ef[nu] == doctest::Approx(tf.oracle_energy_f[nu]).epsilon(1e-10));
        CHECK(eg[nu] == doctest::Approx(tf.oracle_energy_g[nu]).epsilon(1e-10));
    }
    // blocks below r-n are absent
    CHECK(ef[0] == 0.0);
    CHECK(ef[1] == 0.0);
    CHECK(eg[1] == 0.0);
}

TEST_CASE("direct experiment at reduced size stays consistent") {
    DecaySpec base;
    base.d = 1;
    base.K = 512;
    base.seed = 11;
    base.per_block = 1;
    const DirectReport rep =
        direct_theorem_experiment(base, 2, 1, 0.5, LpExponent::two(), 2, 10);
    CHECK(rep.target_slope == doctest::Approx(1.5));
    CHECK(rep.rate.fit_valid);
    CHECK(rep.oracle_max_rel_dev < 1e-10);  // pipeline equals the scalar oracle
    CHECK(rep.rate.slope == doctest::Approx(rep.oracle_slope).epsilon(1e-9));
    // reduced truncation degree: looser window than the acceptance run
    CHECK(std::abs(rep.rate.slope - 1.5) < 0.25);
}

TEST_CASE("inverse experiment certificates and refusal") {
    DecaySpec base;
    base.d = 1;
    base.K = 512;
    base.seed = 11;
    base.per_block = 1;
    const InverseReport rep =
        inverse_theorem_experiment(base, 2, 1, 0.5, LpExponent::two(), 2, 10);
    CHECK_FALSE(rep.refused);
    CHECK(rep.mp_band > 0.0);
    CHECK(rep.mp_band < 10.0);
    CHECK(rep.k_band > 0.0);
    CHECK(rep.k_band < 10.0);

    // alpha = n fails (Z_n): the experiment must refuse
    const InverseReport refd =
        inverse_theorem_experiment(base, 2, 1, 1.0, LpExponent::two(), 2, 10);
    CHECK(refd.refused);
    CHECK(refd.refusal_reason.find("(Z_n)") != std::string::npos);
}

TEST_CASE("direct and inverse experiments share their sweep data") {
    DecaySpec base;
    base.d = 1;
    base.K = 256;
    base.seed = 19;
    base.per_block = 1;
    const DirectReport d1 =
        direct_theorem_experiment(base, 2, 1, 0.5, LpExponent::two(), 2, 9);
    const DirectReport d2 =
        direct_theorem_experiment(base, 2, 1, 0.5, LpExponent::two(), 2, 9);
    // determinism: bit-identical reports under the same seed
    REQUIRE(d1.rate.points.size() == d2.rate.points.size());
    for (std::size_t i = 0; i < d1.rate.points.size(); ++i)
        CHECK(d1.rate.points[i].error == d2.rate.points[i].error);
    CHECK(d1.rate.slope == d2.rate.slope);
}
