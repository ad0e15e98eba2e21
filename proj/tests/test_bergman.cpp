#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hermsos/errors.hpp"
#include "support.hpp"

using namespace hermsos;
using namespace hermsos::testing;

namespace {

DomainSpec shear_ball() { return DomainSpec::linear_ball(2, {G(1), G(frac(1, 2)), G(0), G(1)}); }

Complex inner(std::span<const Complex> z, std::span<const Complex> zeta) {
  Complex s(0);
  for (std::size_t j = 0; j < z.size(); ++j) s += z[j] * std::conj(zeta[j]);
  return s;
}

}  // namespace

TEST_CASE("K(0, 0) is the reciprocal of the constant's Gram entry") {
  for (const auto& dom : {DomainSpec::ball(2), DomainSpec::egg(2), DomainSpec::egg(3), DomainSpec::polydisc(3),
                          shear_ball()}) {
    const TruncatedKernel k(dom, 4);
    const std::vector<Complex> zero(dom.dim(), Complex(0));
    const double c0 = gram<G>(dom, 0)(0, 0).re().get_d();
    CHECK(k.diagonal(zero) == doctest::Approx(1.0 / c0).epsilon(1e-13));
  }
  // Egg(p): c_0 = p / (p + 1).
  const TruncatedKernel egg(DomainSpec::egg(3), 2);
  CHECK(egg.diagonal(std::vector<Complex>{0.0, 0.0}) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("the truncated kernel is Hermitian and its diagonal grows") {
  std::mt19937_64 rng(41);
  for (const auto& dom : {DomainSpec::ball(2), DomainSpec::egg(2), shear_ball()}) {
    const TruncatedKernel k(dom, 5);
    for (int t = 0; t < 10; ++t) {
      const auto z = random_point_float(rng, 2, 0.3);
      const auto w = random_point_float(rng, 2, 0.3);
      CHECK(std::abs(k(z, w) - std::conj(k(w, z))) <= 1e-12 * std::max(1.0, std::abs(k(z, w))));
      CHECK(std::abs(k(z, z).imag()) <= 1e-12 * k.diagonal(z));
      const auto sums = k.diagonal_partial_sums(z);
      REQUIRE(sums.size() == 6);
      for (std::size_t d = 1; d < sums.size(); ++d) CHECK(sums[d] >= sums[d - 1]);
      CHECK(sums.back() == doctest::Approx(k.diagonal(z)));
      // Along a ray every degree piece scales by r^{2d}, so the diagonal increases.
      std::vector<Complex> far = z;
      for (auto& c : far) c *= 1.5;
      CHECK(k.diagonal(far) > k.diagonal(z));
    }
  }
}

TEST_CASE("ball: exact diagonal pieces are binomial(n+d, d) ||z||^{2d}") {
  for (int n = 1; n <= 3; ++n) {
    const auto pieces = exact_kernel_diagonal(DomainSpec::ball(n), 6);
    REQUIRE(pieces.size() == 7);
    for (int d = 0; d <= 6; ++d)
      CHECK(pieces[d] == norm_power<G>(n, d).scaled(G(fact(n + d) / (fact(n) * fact(d)))));
  }
  // Exact value at z = (1/2, 0): sum_{d <= 2} (d+1)(d+2)/2 4^{-d} = 1 + 3/4 + 6/16.
  const std::vector<G> z{G(frac(1, 2)), G(0)};
  CHECK(exact_kernel_diagonal_value(DomainSpec::ball(2), 2, z) == frac(17, 8));
}

TEST_CASE("ball: the truncated kernel approaches (1 - <z, zeta>)^{-(n+1)}") {
  std::mt19937_64 rng(42);
  for (int n = 1; n <= 3; ++n) {
    const TruncatedKernel k(DomainSpec::ball(n), 40);
    for (int t = 0; t < 5; ++t) {
      auto z = random_point_float(rng, n, 0.15);
      auto w = random_point_float(rng, n, 0.15);
      const Complex exact = std::pow(Complex(1) - inner(z, w), -(n + 1));
      CHECK(std::abs(k(z, w) - exact) <= 1e-10 * std::abs(exact));
    }
  }
}

TEST_CASE("exact reproduction examples") {
  const std::vector<G> zeta{G(frac(1, 2)), G(frac(1, 4))};
  const auto one = HoloPoly<G>::monomial({0, 0});
  auto r1 = reproduce_exact(DomainSpec::ball(2), 3, one, zeta);
  CHECK(r1.pass);
  CHECK(r1.value == G(1));

  const auto sq = HoloPoly<G>::monomial({2, 0});
  auto r2 = reproduce_exact(DomainSpec::ball(2), 2, sq, zeta);
  CHECK(r2.pass);
  CHECK(r2.value == G(frac(1, 4)));
  CHECK(r2.reproduced == sq);

  CHECK_THROWS_AS(reproduce_exact(DomainSpec::ball(2), 1, sq, zeta), DegreeOverflow);
}

TEST_CASE("exact reproduction of random polynomials on several domains") {
  std::mt19937_64 rng(43);
  for (const auto& dom : {DomainSpec::ball(2), DomainSpec::egg(2), DomainSpec::egg(4), DomainSpec::polydisc(2),
                          shear_ball()})
    for (int t = 0; t < 4; ++t) {
      const int deg = t % 4;
      const auto p = random_holo(rng, 2, deg);
      const auto zeta = random_point(rng, 2);
      const auto r = reproduce_exact(dom, 4, p, zeta);
      CHECK(r.pass);
      CHECK(r.value == p.evaluate(std::span<const G>(zeta)));
    }
}

TEST_CASE("Monte Carlo reproduction") {
  std::mt19937_64 rng(44);
  const TruncatedKernel k(DomainSpec::ball(2), 3);
  const auto p = random_holo_float(rng, 2, 2);
  const std::vector<Complex> zeta{Complex(0.3, 0.0), Complex(0.0, 0.2)};
  const auto r = reproduce(k, p, zeta, McOptions{200000, 3, 4});
  CHECK(r.within_3_sigma);
  CHECK(r.reference == p.evaluate_complex(zeta));

  const TruncatedKernel small(DomainSpec::egg(2), 1);
  CHECK_THROWS_AS(reproduce(small, p, zeta, McOptions{}), DegreeOverflow);
}

TEST_CASE("diagonal CSV") {
  const TruncatedKernel k(DomainSpec::ball(2), 2);
  std::ostringstream out;
  write_diagonal_csv(out, k, {{Complex(0.5, 0.0), Complex(0.0, 0.0)}});
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "D,z1_re,z2_re,z1_im,z2_im,K_diag");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].rfind("0,0.5,0,0,0,", 0) == 0);
  const double last = std::stod(rows[2].substr(rows[2].rfind(',') + 1));
  CHECK(last == doctest::Approx(17.0 / 8.0));
}
