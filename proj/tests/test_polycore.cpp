#include <doctest.h>

#include <set>

#include "hermsos/errors.hpp"
#include "support.hpp"

using namespace hermsos;
using namespace hermsos::testing;

namespace {

std::vector<std::vector<int>> as_vectors(const std::vector<MultiIndex>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& a : v) out.emplace_back(a.exponents().begin(), a.exponents().end());
  return out;
}

/// Brute-force expansion of sum_k A_k conj(A_k) straight from coefficient maps.
std::map<std::pair<MultiIndex, MultiIndex>, G> expand_squared_norm(const std::vector<HoloPoly<G>>& comps) {
  std::map<std::pair<MultiIndex, MultiIndex>, G> out;
  for (const auto& a : comps)
    for (const auto& [mu, x] : a.terms())
      for (const auto& [nu, y] : a.terms()) out[{mu, nu}] += x * conj(y);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

TEST_CASE("basis enumeration follows graded-lex order") {
  CHECK(as_vectors(enumerate_basis(2, 0)) == std::vector<std::vector<int>>{{0, 0}});
  CHECK(as_vectors(enumerate_basis(2, 2)) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(enumerate_basis(3, 2).size() == 6);
  CHECK(as_vectors(enumerate_basis(3, 1)) == std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("basis size is binomial(d+n-1, n-1) and elements are distinct and sorted") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 7; ++d) {
      const auto b = enumerate_basis(n, d);
      CHECK(Q(static_cast<long>(b.size())) == binomial(static_cast<unsigned>(d + n - 1), static_cast<unsigned>(n - 1)));
      CHECK(b.size() == basis_size(n, d));
      for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(b[i].degree() == d);
        if (i > 0) CHECK(b[i - 1] < b[i]);
      }
      MonomialBasis mb(n, d);
      for (std::size_t i = 0; i < b.size(); ++i) CHECK(mb.index_of(b[i]) == i);
    }
}

TEST_CASE("multi-index basics") {
  MultiIndex a{2, 0, 1};
  CHECK(a.degree() == 3);
  CHECK((a + MultiIndex{0, 1, 1}) == MultiIndex{2, 1, 2});
  CHECK(a.factorial() == 2);
  CHECK(MultiIndex{1, 0} < MultiIndex{2, 0});
  CHECK(MultiIndex{2, 0} < MultiIndex{1, 1});
  CHECK_THROWS_AS(MultiIndex({-1, 0}), InputError);
  CHECK_THROWS_AS(enumerate_basis(0, 1), InputError);
  CHECK_THROWS_AS(MonomialBasis(2, 2).index_of(MultiIndex{1, 0}), DimensionMismatch);
}

TEST_CASE("eval examples") {
  const auto n2 = squared_norm_poly(2);
  const std::vector<G> e1{G(1), G(0)};
  const std::vector<G> one_i{G(1), G(0, 1)};
  CHECK(eval(n2, std::span<const G>(e1)) == 1);
  CHECK(eval(n2, std::span<const G>(one_i)) == 2);
  const std::vector<G> ones{G(1), G(1)};
  CHECK(eval(f_lambda(Q(1)), std::span<const G>(ones)) == 1);
  const std::vector<G> bad{G(1)};
  CHECK_THROWS_AS(eval(n2, std::span<const G>(bad)), DimensionMismatch);
}

TEST_CASE("eval of a Hermitian polynomial has zero imaginary part") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto f = random_hermitian(rng, 2, 2);
    const auto z = random_point(rng, 2);
    CHECK(f.evaluate(std::span<const G>(z)).is_real());
    const auto zf = random_point_float(rng, 2);
    const auto v = to_float(f).evaluate_complex(std::span<const Complex>(zf));
    CHECK(std::abs(v.imag()) <= 1e-12 * std::max(1.0, std::abs(v)));
  }
}

TEST_CASE("mul examples") {
  const auto f = f_lambda(Q(1));
  CHECK(mul(f, BihomPoly<G>::constant(2, G(1))) == f);
  const auto n2 = squared_norm_poly(2);
  const auto n4 = mul(n2, n2);
  CHECK(n4.coeff({1, 1}, {1, 1}) == G(2));
  CHECK(n4.coeff({2, 0}, {2, 0}) == G(1));
  CHECK(n4.terms().size() == 3);
  BihomPoly<G> expect(2, 3);
  expect.add_term({3, 0}, {3, 0}, G(1));
  expect.add_term({0, 3}, {0, 3}, G(1));
  CHECK(mul(f, n2) == expect);
  CHECK_THROWS_AS(mul(f, squared_norm_poly(3)), DimensionMismatch);
}

TEST_CASE("mul preserves Hermitian symmetry") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 3;
    const auto f = random_hermitian(rng, n, 1 + t % 2);
    const auto g = random_hermitian(rng, n, 1);
    const auto h = mul(f, g);
    CHECK(h.is_hermitian());
    for (const auto& [key, c] : h.terms()) CHECK(h.coeff(key.second, key.first) == conj(c));
  }
}

TEST_CASE("eval is multiplicative") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 3;
    const auto f = random_hermitian(rng, n, 2);
    const auto g = random_hermitian(rng, n, 1);
    const auto z = random_point(rng, n);
    const std::span<const G> zs(z);
    CHECK(eval(mul(f, g), zs) == eval(f, zs) * eval(g, zs));
    const auto zf = random_point_float(rng, n);
    const std::span<const Complex> zfs(zf);
    const double lhs = eval(mul(to_float(f), to_float(g)), zfs);
    const double rhs = eval(to_float(f), zfs) * eval(to_float(g), zfs);
    const double scale = to_float(mul(f, g)).evaluate_abs(zfs);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(scale, std::abs(rhs)));
  }
}

TEST_CASE("norm_power examples and the exponent law") {
  CHECK(norm_power<G>(2, 0) == BihomPoly<G>::constant(2, G(1)));
  CHECK(norm_power<G>(2, 1) == squared_norm_poly(2));
  const auto p3 = norm_power<G>(2, 3);
  const std::vector<std::vector<int>> alphas{{3, 0}, {2, 1}, {1, 2}, {0, 3}};
  const std::vector<int> expect{1, 3, 3, 1};
  for (std::size_t i = 0; i < alphas.size(); ++i)
    CHECK(p3.coeff(MultiIndex(alphas[i]), MultiIndex(alphas[i])) == G(expect[i]));
  CHECK(p3.terms().size() == 4);
  for (int n = 1; n <= 3; ++n)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) CHECK(norm_power<G>(n, a + b) == mul(norm_power<G>(n, a), norm_power<G>(n, b)));
}

TEST_CASE("from_squared_norm examples") {
  std::vector<HoloPoly<G>> lin{HoloPoly<G>::monomial({1, 0}), HoloPoly<G>::monomial({0, 1})};
  CHECK(from_squared_norm(std::span<const HoloPoly<G>>(lin)) == squared_norm_poly(2));

  std::vector<HoloPoly<G>> cubes{HoloPoly<G>::monomial({3, 0}), HoloPoly<G>::monomial({0, 3})};
  BihomPoly<G> six(2, 3);
  six.add_term({3, 0}, {3, 0}, G(1));
  six.add_term({0, 3}, {0, 3}, G(1));
  CHECK(from_squared_norm(std::span<const HoloPoly<G>>(cubes)) == six);

  HoloPoly<G> a(2, 2), b(2, 2);
  a.add_term({2, 0}, G(1));
  a.add_term({0, 2}, G(1));
  b.add_term({2, 0}, G(0, 1));
  b.add_term({0, 2}, G(0, -1));
  std::vector<HoloPoly<G>> pair{a, b};
  const auto f = from_squared_norm(std::span<const HoloPoly<G>>(pair));
  CHECK(f.terms() == expand_squared_norm(pair));
  // The cross terms cancel: 2|z1|^4 + 2|z2|^4.
  BihomPoly<G> expect(2, 2);
  expect.add_term({2, 0}, {2, 0}, G(2));
  expect.add_term({0, 2}, {0, 2}, G(2));
  CHECK(f == expect);

  std::vector<HoloPoly<G>> mixed{HoloPoly<G>::monomial({1, 0}), HoloPoly<G>::monomial({2, 0})};
  CHECK_THROWS_AS(from_squared_norm(std::span<const HoloPoly<G>>(mixed)), DimensionMismatch);
  std::vector<HoloPoly<G>> none;
  CHECK_THROWS_AS(from_squared_norm(std::span<const HoloPoly<G>>(none)), InputError);
}

TEST_CASE("squared norms evaluate to sums of squared moduli, exactly") {
  std::mt19937_64 rng(14);
  std::vector<HoloPoly<G>> comps;
  for (int k = 0; k < 3; ++k) comps.push_back(random_holo(rng, 2, 2));
  const auto f = from_squared_norm(std::span<const HoloPoly<G>>(comps));
  CHECK(f.terms() == expand_squared_norm(comps));
  for (int t = 0; t < 100; ++t) {
    const auto z = random_point(rng, 2);
    const std::span<const G> zs(z);
    Q sum(0);
    for (const auto& c : comps) sum += c.evaluate(zs).norm2();
    CHECK(eval(f, zs) == sum);
  }
}

TEST_CASE("bihomogeneity") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 3;
    const int m = 1 + t % 2;
    const auto f = random_hermitian(rng, n, m);
    const auto z = random_point(rng, n);
    const G lambda = random_gauss(rng, 3, 2);
    std::vector<G> lz;
    for (const auto& c : z) lz.push_back(lambda * c);
    Q factor(1);
    for (int k = 0; k < m; ++k) factor *= lambda.norm2();
    CHECK(eval(f, std::span<const G>(lz)) == factor * eval(f, std::span<const G>(z)));
  }
}

TEST_CASE("holomorphic homogeneity") {
  std::mt19937_64 rng(16);
  const auto p = random_holo(rng, 3, 3);
  const auto z = random_point(rng, 3);
  const G lambda(frac(2, 3), frac(-1, 2));
  std::vector<G> lz;
  for (const auto& c : z) lz.push_back(lambda * c);
  CHECK(p.evaluate(std::span<const G>(lz)) == lambda * lambda * lambda * p.evaluate(std::span<const G>(z)));
}

TEST_CASE("zero coefficients are never stored") {
  BihomPoly<G> f(2, 1);
  f.add_term({1, 0}, {1, 0}, G(1));
  f.add_term({1, 0}, {1, 0}, G(-1));
  CHECK(f.is_zero());
  CHECK(f == BihomPoly<G>(2, 1));
  HoloPoly<G> p(2, 1);
  p.add_term({1, 0}, G(0));
  CHECK(p.is_zero());
  CHECK_THROWS_AS(f.add_term({2, 0}, {1, 0}, G(1)), DimensionMismatch);
}

TEST_CASE("substitution by a unitary preserves the squared norm") {
  const std::vector<G> u{G(frac(3, 5)), G(frac(4, 5)), G(frac(-4, 5)), G(frac(3, 5))};
  const auto n2 = squared_norm_poly(2);
  CHECK(substitute(n2, std::span<const G>(u)) == n2);
  const auto p = HoloPoly<G>::monomial({1, 0});
  const auto pu = substitute(p, std::span<const G>(u));
  CHECK(pu.coeff({1, 0}) == G(frac(3, 5)));
  CHECK(pu.coeff({0, 1}) == G(frac(4, 5)));
}

TEST_CASE("rational and Gaussian literals") {
  CHECK(parse_rational("3/4") == frac(3, 4));
  CHECK(parse_rational("-6/8") == frac(-3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-0.125") == frac(-1, 8));
  CHECK(parse_rational("1e-3") == frac(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK(format_rational(frac(-3, 4)) == "-3/4");
  CHECK(format_rational(Q(5)) == "5");
  CHECK(parse_gauss("1/2-3i") == G(frac(1, 2), Q(-3)));
  CHECK(parse_gauss("i") == G(0, 1));
  CHECK(parse_gauss("-2/3i") == G(Q(0), frac(-2, 3)));
  CHECK(parse_gauss("4") == G(4));
  for (const G& z : {G(frac(1, 2), Q(-3)), G(0, 1), G(frac(-7, 3)), G(Q(0), frac(5, 2))})
    CHECK(parse_gauss(format_gauss(z)) == z);
  CHECK(std::stod(format_double(0.1)) == 0.1);
}

TEST_CASE("polynomial JSON: Hermitian completion and rejection of inconsistent pairs") {
  using io::json;
  const json one_side = json::parse(R"({"n":2,"m":2,"terms":[
      {"mu":[2,0],"nu":[0,2],"re":"1/2","im":"1"}]})");
  const auto f = io::poly_from_json(one_side);
  CHECK(f.coeff({2, 0}, {0, 2}) == G(frac(1, 2), Q(1)));
  CHECK(f.coeff({0, 2}, {2, 0}) == G(frac(1, 2), Q(-1)));
  CHECK(f.is_hermitian());

  const json both = json::parse(R"({"n":2,"m":2,"terms":[
      {"mu":[2,0],"nu":[0,2],"re":"1/2","im":"1"},
      {"mu":[0,2],"nu":[2,0],"re":"1/2","im":"-1"}]})");
  CHECK(io::poly_from_json(both) == f);

  const json bad = json::parse(R"({"n":2,"m":2,"terms":[
      {"mu":[2,0],"nu":[0,2],"re":"1/2","im":"1"},
      {"mu":[0,2],"nu":[2,0],"re":"1/2","im":"1"}]})");
  CHECK_THROWS_WITH_AS(io::poly_from_json(bad), doctest::Contains("inconsistent"), InputError);

  const json no_m = json::parse(R"({"n":2,"terms":[]})");
  CHECK_THROWS_WITH_AS(io::poly_from_json(no_m), doctest::Contains("'m'"), InputError);
  const json bad_re = json::parse(R"({"n":1,"m":1,"terms":[{"mu":[1],"nu":[1],"re":"x"}]})");
  CHECK_THROWS_WITH_AS(io::poly_from_json(bad_re), doctest::Contains("terms[0].re"), InputError);
  const json complex_diag = json::parse(R"({"n":1,"m":1,"terms":[{"mu":[1],"nu":[1],"re":"1","im":"1"}]})");
  CHECK_THROWS_AS(io::poly_from_json(complex_diag), InputError);
  const json wrong_degree = json::parse(R"({"n":2,"m":2,"terms":[{"mu":[1,0],"nu":[2,0],"re":"1"}]})");
  CHECK_THROWS_WITH_AS(io::poly_from_json(wrong_degree), doctest::Contains("degree"), InputError);

  CHECK(io::poly_from_json(io::poly_to_json(f)) == f);
}
