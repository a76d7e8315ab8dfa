#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "intspace/errors.hpp"
#include "intspace/specfun.hpp"

using intspace::Rational;
namespace sf = intspace::specfun;

TEST_CASE("binomial") {
    CHECK(sf::binomial(5, 2) == Rational(10));
    CHECK(sf::binomial(5, 0) == Rational(1));
    CHECK(sf::binomial(5, 5) == Rational(1));
    CHECK(sf::binomial(5, 7) == Rational(0));
    CHECK(sf::binomial(5, -1) == Rational(0));
    CHECK(sf::binomial(40, 20) == Rational("137846528820"));
    CHECK_THROWS_AS(sf::binomial(-1, 0), intspace::domain_error);
}

TEST_CASE("beta_int") {
    CHECK(sf::beta_int(1, 1) == Rational(1));
    CHECK(sf::beta_int(2, 3) == Rational(1, 12));
    CHECK(sf::beta_int(3, 2) == Rational(1, 12));
    CHECK(sf::beta_int(4, 6) == Rational(1) / (Rational(9) * sf::binomial(8, 3)));
    CHECK_THROWS_AS(sf::beta_int(0, 1), intspace::domain_error);
    CHECK_THROWS_AS(sf::beta_int(1, 0), intspace::domain_error);
}

TEST_CASE("digamma forward difference") {
    CHECK(sf::digamma_forward_difference(1, 3) == Rational(11, 6));
    CHECK(sf::digamma_forward_difference(4, 1) == Rational(1, 4));
    CHECK(sf::digamma_forward_difference(7, 0) == Rational(0));
    CHECK_THROWS_AS(sf::digamma_forward_difference(0, 1), intspace::domain_error);
}

TEST_CASE("hyp2f1 basic values") {
    // F(1,1;2;z) = -ln(1-z)/z
    CHECK(sf::hyp2f1({1, 1, 2}, -0.5) ==
          doctest::Approx(-std::log(1.5) / -0.5).epsilon(1e-13));
    CHECK(sf::hyp2f1({1, 1, 2}, -9.0) ==
          doctest::Approx(std::log(10.0) / 9.0).epsilon(1e-11));
    // F(1,b;b;z) = 1/(1-z)
    CHECK(sf::hyp2f1({1, 6, 6}, -123.5) ==
          doctest::Approx(0.0080321285140562248996).epsilon(1e-13));
    CHECK(sf::hyp2f1({3, 2, 4}, 0.0) == 1.0);
    CHECK(sf::hyp2f1({2, 3, 6}, -4.0) ==
          doctest::Approx(0.13965991954943293527).epsilon(1e-13));
    CHECK(sf::hyp2f1({5, 2, 9}, -0.75) ==
          doctest::Approx(0.50908626504960968225).epsilon(1e-13));
}

TEST_CASE("hyp2f1 deep argument hits the near-1 branch") {
    CHECK(sf::hyp2f1({3, 4, 7}, -999.0) ==
          doctest::Approx(1.9229022728741115186e-8).epsilon(1e-12));
    CHECK(sf::hyp2f1({4, 4, 8}, -250.0) ==
          doctest::Approx(7.3341087358658136767e-8).epsilon(1e-12));
}

TEST_CASE("hyp2f1 is symmetric in a and b") {
    CHECK(sf::hyp2f1({2, 3, 5}, -2.0) ==
          doctest::Approx(sf::hyp2f1({3, 2, 5}, -2.0)).epsilon(1e-14));
}

TEST_CASE("hyp2f1 branches agree across the switch point") {
    // t = z/(z-1) straddles 0.995 at z = -199; the function is smooth there,
    // so values just on either side must line up to first order.
    const long a = 2, b = 5, c = 8;
    const double z_lo = -198.0, z_hi = -200.0;
    const double f_lo = sf::hyp2f1({a, b, c}, z_lo);
    const double f_hi = sf::hyp2f1({a, b, c}, z_hi);
    CHECK(std::abs(f_hi - f_lo) / std::abs(f_lo) < 5e-2);
    // And a direct cross-branch probe at matched t.
    const double t = 0.9951;
    const double via_near = sf::hyp2f1_mapped(a, c - b, c, t, 1.0 - t, std::log1p(-t), 1e-13,
                                              1000000);
    const double via_direct = sf::hyp2f1_mapped(a, c - b, c, 0.9949, 1.0 - 0.9949,
                                                std::log1p(-0.9949), 1e-13, 1000000);
    CHECK(std::abs(via_near - via_direct) / via_direct < 5e-2);
}

TEST_CASE("hyp2f1 domain errors") {
    CHECK_THROWS_AS(sf::hyp2f1({1, 1, 2}, 0.5), intspace::domain_error);
    CHECK_THROWS_AS(sf::hyp2f1({0, 1, 2}, -1.0), intspace::domain_error);
    CHECK_THROWS_AS(sf::hyp2f1({1, 1, 0}, -1.0), intspace::domain_error);
    CHECK_THROWS_AS(sf::hyp2f1({1, 1, 2}, -1.0, 0.5), intspace::domain_error);
}

TEST_CASE("precision bits from environment") {
    unsetenv("INTSPACE_PRECISION_BITS");
    CHECK(sf::precision_bits_from_env() == 64);
    setenv("INTSPACE_PRECISION_BITS", "128", 1);
    CHECK(sf::precision_bits_from_env() == 128);
    setenv("INTSPACE_PRECISION_BITS", "1", 1);
    CHECK_THROWS_AS(sf::precision_bits_from_env(), intspace::domain_error);
    setenv("INTSPACE_PRECISION_BITS", "ten", 1);
    CHECK_THROWS_AS(sf::precision_bits_from_env(), intspace::domain_error);
    unsetenv("INTSPACE_PRECISION_BITS");
}
