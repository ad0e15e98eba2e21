#include <doctest.h>

#include <cmath>

#include "hermsos/errors.hpp"
#include "support.hpp"

using namespace hermsos;
using namespace hermsos::testing;

namespace {

StabilizeOptions capped(int d_max) {
  StabilizeOptions o;
  o.d_max = d_max;
  return o;
}

/// Checks every invariant a finished search promises.
void check_record(const BihomPoly<G>& f, const StabilizationResult<G>& r, const DomainSpec* domain) {
  REQUIRE(r.d0);
  for (std::size_t i = 1; i < r.trials.size(); ++i) CHECK(r.trials[i].d == r.trials[i - 1].d + 1);
  for (const auto& t : r.trials) {
    const auto product = stabilization_product(f, domain, t.d);
    if (t.d < *r.d0) {
      REQUIRE(t.verdict == TrialVerdict::NotPsd);
      REQUIRE(t.witness);
      CHECK(oracle_quadratic_form(product, t.witness->vector) < 0);
      CHECK(oracle_quadratic_form(product, t.witness->vector) == t.witness->value);
    } else if (t.verdict == TrialVerdict::Certified) {
      REQUIRE(t.certificate);
      CHECK(t.verified);
      CHECK(verify(*t.certificate, product).pass);
      CHECK(exact_sum_of_squares(*t.certificate) == product);
    }
  }
  CHECK(r.trial(*r.d0)->verdict == TrialVerdict::Certified);
  CHECK(r.certificate() == &*r.trial(*r.d0)->certificate);
}

const std::vector<G> kSwap{G(0), G(1), G(1), G(0)};
const std::vector<G> kPhase{G(Q(0), Q(1)), G(0), G(0), G(-1)};
const std::vector<G> kRotation{G(frac(3, 5)), G(frac(4, 5)), G(frac(-4, 5)), G(frac(3, 5))};

}  // namespace

TEST_CASE("sphere minimum examples") {
  const auto s1 = check_positive_on_sphere(squared_norm_poly(2));
  CHECK(s1.minimum == doctest::Approx(1.0).epsilon(1e-9));
  const auto s2 = check_positive_on_sphere(f_lambda(Q(1)));
  CHECK(s2.minimum == doctest::Approx(0.25).epsilon(1e-7));
  const auto s3 = check_positive_on_sphere(f_lambda(Q(3)));
  CHECK(s3.minimum == doctest::Approx(-0.25).epsilon(1e-7));
  double norm = 0.0;
  for (const auto& c : s3.argmin) norm += std::norm(c);
  CHECK(norm == doctest::Approx(1.0));
  CHECK_THROWS_AS(check_positive_on_sphere(BihomPoly<G>(2, 2)), ZeroPolynomial);
}

TEST_CASE("Euclidean search examples against the convolution oracle") {
  for (const char* text : {"0", "1/2", "1", "3/2", "9/5", "19/10"}) {
    const Q lambda = q(text);
    const auto f = f_lambda(lambda);
    const auto r = stabilize_euclidean(f);
    CAPTURE(text);
    CHECK(r.outcome == StabilizationOutcome::Stabilized);
    REQUIRE(r.d0);
    CHECK(*r.d0 == oracle_euclidean_d0(lambda));
    CHECK(r.trials.size() == static_cast<std::size_t>(*r.d0 + 1));
    check_record(f, r, nullptr);
  }
  // Frozen values of the same oracle.
  CHECK(*stabilize_euclidean(f_lambda(q("19/10"))).d0 == 37);
  CHECK(*stabilize_euclidean(f_lambda(q("9/5"))).d0 == 17);
  CHECK(*stabilize_euclidean(squared_norm_poly(3)).d0 == 0);
}

TEST_CASE("an indefinite f is rejected with an exact disproof") {
  const auto f = f_lambda(Q(3));
  const auto r = stabilize_euclidean(f);
  CHECK(r.outcome == StabilizationOutcome::HypothesisViolated);
  CHECK_FALSE(r.d0);
  REQUIRE(r.disproof_value);
  CHECK(*r.disproof_value < 0);
  CHECK(eval(f, std::span<const G>(r.disproof_point)) < 0);

  auto o = capped(6);
  o.precheck = false;
  const auto blind = stabilize_euclidean(f, o);
  CHECK(blind.outcome == StabilizationOutcome::CapExceeded);
  CHECK(blind.trials.size() == 7);
  for (const auto& t : blind.trials) CHECK(t.verdict == TrialVerdict::NotPsd);
}

TEST_CASE("a boundary f never certifies") {
  // lambda = 2: (|z1|^2 - |z2|^2)^2 vanishes on the sphere.
  auto o = capped(8);
  const auto r = stabilize_euclidean(f_lambda(Q(2)), o);
  CHECK(r.outcome != StabilizationOutcome::Stabilized);
  for (const auto& t : r.trials) CHECK(t.verdict != TrialVerdict::Certified);
}

TEST_CASE("strict mode waits for every coefficient to be positive") {
  // ||z||^{2d} f_1 has coefficients C(d,k) - C(d,k-1) + C(d,k-2): some vanish
  // for d = 1, 2 (PSD but singular) and all are positive from d = 3.
  auto o = capped(10);
  CHECK(*stabilize_euclidean(f_lambda(Q(1)), o).d0 == 1);
  o.strict = true;
  const auto r = stabilize_euclidean(f_lambda(Q(1)), o);
  REQUIRE(r.d0);
  CHECK(*r.d0 == 3);
  CHECK(r.trial(1)->verdict == TrialVerdict::NotStrict);
  CHECK(r.trial(2)->verdict == TrialVerdict::NotStrict);
  CHECK(r.certificate()->strict);
  CHECK(r.certificate()->factor.positive_definite());
}

TEST_CASE("random positive polynomials: record invariants and the tail property") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 12; ++t) {
    const auto f = random_positive(rng);
    const auto r = stabilize_euclidean(f, capped(60));
    REQUIRE(r.outcome == StabilizationOutcome::Stabilized);
    check_record(f, r, nullptr);
    // Multiplying a squared norm by ||z||^2 keeps it one.
    for (int k = 1; k <= 2; ++k) {
      auto cert = decompose(stabilization_product(f, nullptr, *r.d0 + k));
      CHECK(std::holds_alternative<SosCertificate<G>>(cert));
    }
  }
}

TEST_CASE("d0 is invariant under positive scaling and unitary substitution") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 6; ++t) {
    const auto f = random_positive(rng);
    const int d0 = *stabilize_euclidean(f).d0;
    CHECK(*stabilize_euclidean(f.scaled(G(frac(3, 7)))).d0 == d0);
    CHECK(*stabilize_euclidean(f.scaled(G(1000))).d0 == d0);
    for (const auto* a : {&kSwap, &kPhase, &kRotation}) {
      const auto g = substitute(f, std::span<const G>(*a));
      CHECK(*stabilize_euclidean(g).d0 == d0);
    }
  }
}

TEST_CASE("d0 is monotone in lambda") {
  int prev = 0;
  for (int k = 0; k <= 19; ++k) {
    const int d0 = *stabilize_euclidean(f_lambda(frac(k, 10))).d0;
    CHECK(d0 >= prev);
    CHECK(d0 == oracle_euclidean_d0(frac(k, 10)));
    prev = d0;
  }
}

TEST_CASE("the float tower agrees away from the threshold") {
  for (const char* text : {"1/2", "1", "3/2", "9/5"}) {
    const auto exact = stabilize_euclidean(f_lambda(q(text)));
    const auto approx = stabilize_euclidean(to_float(f_lambda(q(text))));
    REQUIRE(approx.d0);
    CHECK(*approx.d0 == *exact.d0);
    CHECK(approx.certificate()->numeric);
  }
}

TEST_CASE("concurrent windows give the same record") {
  for (const char* text : {"3/2", "9/5"}) {
    auto o = capped(50);
    const auto a = stabilize_euclidean(f_lambda(q(text)), o);
    o.jobs = 4;
    const auto b = stabilize_euclidean(f_lambda(q(text)), o);
    CHECK(*a.d0 == *b.d0);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) CHECK(a.trials[i].d == b.trials[i].d);
    CHECK(io::stabilization_to_json(a, {}).dump() == io::stabilization_to_json(b, {}).dump());
  }
  const auto dom = DomainSpec::egg(2);
  StabilizeOptions o;
  const auto a = stabilize_domain(f_lambda(q("3/2")), dom, o);
  o.jobs = 3;
  const auto b = stabilize_domain(f_lambda(q("3/2")), dom, o);
  CHECK(io::stabilization_to_json(a, {}).dump() == io::stabilization_to_json(b, {}).dump());
}

TEST_CASE("domain search: frozen examples and the diagonal oracle") {
  struct Case {
    DomainSpec dom;
    std::function<Q(const std::vector<int>&)> moment;
    int at_1;
    int at_3_2;
  };
  const std::vector<Case> cases{
      {DomainSpec::ball(2), oracle_ball_moment, 1, 5},
      {DomainSpec::egg(2), [](const std::vector<int>& a) { return oracle_egg_moment(a[0], a[1], 2); }, 2, 5},
      {DomainSpec::egg(3), [](const std::vector<int>& a) { return oracle_egg_moment(a[0], a[1], 3); }, 2, 4},
      {DomainSpec::polydisc(2), oracle_polydisc_moment, 1, 3},
  };
  for (const auto& c : cases) {
    CAPTURE(c.dom.id());
    const auto r1 = stabilize_domain(f_lambda(Q(1)), c.dom);
    const auto r2 = stabilize_domain(f_lambda(q("3/2")), c.dom);
    REQUIRE(r1.d0);
    REQUIRE(r2.d0);
    CHECK(*r1.d0 == c.at_1);
    CHECK(*r2.d0 == c.at_3_2);
    CHECK(*r1.d0 == oracle_diagonal_d0(f_lambda(Q(1)), c.moment, 30));
    CHECK(*r2.d0 == oracle_diagonal_d0(f_lambda(q("3/2")), c.moment, 30));
    check_record(f_lambda(q("3/2")), r2, &c.dom);
    CHECK(r2.hypotheses_met == c.dom.hypotheses_met());
    CHECK_FALSE(r2.numeric_gram);
  }
  for (int k = 0; k <= 16; k += 4) {
    const auto f = f_lambda(frac(k, 10));
    const auto moment = [](const std::vector<int>& a) { return oracle_egg_moment(a[0], a[1], 2); };
    CHECK(*stabilize_domain(f, DomainSpec::egg(2)).d0 == oracle_diagonal_d0(f, moment, 30));
  }
}

TEST_CASE("domain search on the ball matches the Euclidean search") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 5; ++t) {
    const auto f = random_positive(rng);
    CHECK(*stabilize_domain(f, DomainSpec::ball(2)).d0 == *stabilize_euclidean(f).d0);
  }
}

TEST_CASE("domain search records the tail") {
  StabilizeOptions o;
  o.tail = 3;
  const auto dom = DomainSpec::egg(3);
  const auto r = stabilize_domain(f_lambda(q("3/2")), dom, o);
  REQUIRE(r.d0);
  CHECK(r.trials.back().d == *r.d0 + 3);
  for (int k = 1; k <= 3; ++k) {
    const auto* t = r.trial(*r.d0 + k);
    REQUIRE(t);
    CHECK(t->verdict == TrialVerdict::Certified);
  }
}

TEST_CASE("polydisc flags the unmet hypotheses, sampled flags a numeric Gram") {
  const auto r = stabilize_domain(f_lambda(Q(1)), DomainSpec::polydisc(2));
  CHECK_FALSE(r.hypotheses_met);
  CHECK(r.outcome == StabilizationOutcome::Stabilized);

  std::mt19937_64 rng(54);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> pts;
  while (pts.size() < 2 * 40000) {
    Complex a(u(rng), u(rng)), b(u(rng), u(rng));
    if (std::norm(a) + std::norm(b) < 1.0) pts.insert(pts.end(), {a, b});
  }
  const auto cloud = DomainSpec::sampled(2, pts, 4.934802200544679);
  // lambda = 1 sits on the PSD boundary at d = 1 on the ball (zero coefficients),
  // so a noisy Gram would decide it by chance; lambda = 1/2 has margin there.
  const auto s = stabilize_domain(to_float(f_lambda(frac(1, 2))), cloud, capped(10));
  CHECK(s.numeric_gram);
  CHECK(s.domain == "sampled");
  REQUIRE(s.d0);
  CHECK(*s.d0 == 1);
  CHECK_THROWS_AS(stabilize_domain(f_lambda(Q(1)), cloud), GramUnavailable);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(stabilize_euclidean(BihomPoly<G>(2, 2)), ZeroPolynomial);
  BihomPoly<G> skew(2, 1);
  skew.add_term({1, 0}, {0, 1}, G(1));
  CHECK_THROWS_AS(stabilize_euclidean(skew), NonHermitian);
  CHECK_THROWS_AS(stabilize_domain(f_lambda(Q(1)), DomainSpec::ball(3)), DimensionMismatch);
}
