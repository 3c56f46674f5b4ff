#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "qf/quadrature.hpp"
#include "qf/specfun.hpp"

using namespace qf;

TEST_CASE("gauss-legendre textbook rules") {
  const auto r1 = quadrature::gauss_legendre_rule(1);
  CHECK(r1.nodes[0] == doctest::Approx(0.0));
  CHECK(r1.weights[0] == doctest::Approx(2.0));

  const auto r2 = quadrature::gauss_legendre_rule(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0));
  CHECK(r2.weights[1] == doctest::Approx(1.0));
}

TEST_CASE("gauss-legendre weight sum and degree exactness") {
  for (int order : {3, 8, 17, 64, 128}) {
    const auto r = quadrature::gauss_legendre_rule(order);
    const double wsum = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
    CHECK(std::abs(wsum - 2.0) <= 1e-14);
    // int x^4 = 2/5 for order >= 3
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      acc += r.weights[i] * std::pow(r.nodes[i], 4);
    CHECK(std::abs(acc - 0.4) <= 1e-15 * order);
    // exactness at degree 2*order - 1 (odd -> 0) and near-degree even moment
    const int p = 2 * order - 2;
    double even = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      even += r.weights[i] * std::pow(std::abs(r.nodes[i]), 0) * std::pow(r.nodes[i], p);
    CHECK(even == doctest::Approx(2.0 / (p + 1)).epsilon(1e-12));
  }
}

TEST_CASE("generalized gauss-laguerre rule") {
  // sum of weights = Gamma(alpha+1); int x^{1/2} e^{-x} = sqrt(pi)/2
  const auto r = quadrature::gauss_laguerre_rule(32, 0.5);
  const double wsum = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
  CHECK(wsum == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-13));
  // Laguerre-squared normalization: int x^a e^-x [L_n^{(a)}]^2 = Gamma(n+a+1)/n!
  for (int n : {1, 2, 4}) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      const double l = specfun::laguerre(n, 0.5, r.nodes[i]);
      acc += r.weights[i] * l * l;
    }
    CHECK(acc == doctest::Approx(std::tgamma(n + 1.5) / std::tgamma(n + 1.0))
                     .epsilon(1e-12));
  }
}

TEST_CASE("radial rule reproduces gamma-function moments") {
  const double nu = 0.25;
  const auto r = quadrature::radial_rule(24, 0.0, nu);
  // a = 0, g = 1: Gamma(3/2) / (2 (2 nu)^{3/2})
  double acc = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
  CHECK(acc == doctest::Approx(std::tgamma(1.5) / (2.0 * std::pow(2.0 * nu, 1.5)))
                   .epsilon(1e-12));
  // (A.17)-type relation for n = 2, kappa = 1
  const auto r2 = quadrature::radial_rule(24, 1.0, nu);
  double acc2 = 0.0;
  for (std::size_t i = 0; i < r2.nodes.size(); ++i) {
    const double l = specfun::laguerre(2, 1.5, 2.0 * nu * r2.nodes[i] * r2.nodes[i]);
    acc2 += r2.weights[i] * l * l;
  }
  const double expect = std::tgamma(2.0 + 1.0 + 1.5) / std::tgamma(3.0) /
                        (2.0 * std::pow(2.0 * nu, 2.5));
  CHECK(acc2 == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("radial rule exactness for even powers") {
  const double nu = 0.25;
  const int order = 32;
  const double a = 2.0;
  const auto r = quadrature::radial_rule(order, a, nu);
  for (int k = 0; k <= order - 1; k += 5) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      acc += r.weights[i] * std::pow(r.nodes[i], 2 * k);
    // int r^{2a+2+2k} e^{-2nu r^2} dr = Gamma(a+k+3/2)/(2 (2nu)^{a+k+3/2})
    const double expect = std::exp(std::lgamma(a + k + 1.5) -
                                   (a + k + 1.5) * std::log(2.0 * nu)) / 2.0;
    CHECK(acc == doctest::Approx(expect).epsilon(1e-13 * (k + 1)));
  }
}

TEST_CASE("theta midpoint rule is symmetric and pole-free") {
  const auto r = quadrature::theta_midpoint_rule(64);
  CHECK(r.nodes.front() > 0.01);
  CHECK(r.nodes.back() < M_PI - 0.01);
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    CHECK(r.nodes[i] + r.nodes[r.nodes.size() - 1 - i] == doctest::Approx(M_PI));
  // exact for cos(2 k theta)
  for (int k : {1, 2, 5}) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      acc += r.weights[i] * std::cos(2.0 * k * r.nodes[i]);
    CHECK(std::abs(acc) <= 1e-14);
  }
}

TEST_CASE("phi uniform rule integrates trigonometric polynomials exactly") {
  const auto r = quadrature::phi_uniform_rule(256);
  double c2 = 0.0, s3 = 0.0, total = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    c2 += r.weights[i] * std::pow(std::cos(3.0 * r.nodes[i]), 2);
    s3 += r.weights[i] * std::sin(5.0 * r.nodes[i]);
    total += r.weights[i];
  }
  CHECK(total == doctest::Approx(2.0 * M_PI));
  CHECK(c2 == doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(std::abs(s3) <= 1e-13);
}

TEST_CASE("polynomial root helpers bracket the sign changes") {
  const auto lr = quadrature::laguerre_roots(4, 2.5);
  CHECK(lr.size() == 4);
  for (double root : lr)
    CHECK(std::abs(specfun::laguerre(4, 2.5, root)) < 1e-10 * 100);
  const auto pr = quadrature::assoc_legendre_roots(5, 2);
  CHECK(pr.size() == 3);
  for (double root : pr)
    CHECK(std::abs(specfun::assoc_legendre(5, 2, root)) < 1e-10 * 100);
  CHECK(quadrature::assoc_legendre_roots(3, 3).empty());
}
