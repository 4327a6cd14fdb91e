#include <doctest.h>

#include <cmath>

#include "qbet/betting.hpp"
#include "qbet/entropy.hpp"
#include "qbet/errors.hpp"
#include "test_util.hpp"

using namespace qbet;

TEST_CASE("odds validation") {
  CHECK_NOTHROW(Odds({2.0, 3.0, 1.5}));
  CHECK_NOTHROW(Odds({-2.0, -3.0}));
  CHECK_THROWS_AS(Odds({2.0, -3.0}), InvalidDistribution);
  CHECK_THROWS_AS(Odds({2.0, 0.0}), InvalidDistribution);
  CHECK(Odds::constant(3, -2.0).sign() == -1);
}

TEST_CASE("isoelastic utility values") {
  CHECK(isoelastic_utility(2.5, RiskParam(0.0)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(isoelastic_utility(std::exp(1.0), RiskParam(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(isoelastic_utility(2.0, RiskParam(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(isoelastic_utility(0.0, RiskParam(1.0)), UndefinedAtZero);
  CHECK_THROWS_AS(isoelastic_utility(0.0, RiskParam(2.0)), UndefinedAtZero);
  CHECK_NOTHROW(isoelastic_utility(0.0, RiskParam(0.5)));

  // strictly increasing on each sign domain
  for (double r : {-2.0, 0.0, 0.7, 1.0, 3.0}) {
    RiskParam R(r);
    CHECK(isoelastic_utility(2.0, R) < isoelastic_utility(2.5, R));
    CHECK(isoelastic_utility(-2.5, R) < isoelastic_utility(-2.0, R));
  }
}

TEST_CASE("utility derivatives match finite differences") {
  const double h = 1e-6;
  for (double r : {-1.5, 0.0, 0.5, 1.0, 2.5}) {
    RiskParam R(r);
    for (double w : {0.4, 1.7, 3.0, -0.8, -2.2}) {
      double fd1 = (isoelastic_utility(w + h, R) - isoelastic_utility(w - h, R)) / (2 * h);
      double fd2 = (isoelastic_utility(w + h, R) - 2 * isoelastic_utility(w, R) +
                    isoelastic_utility(w - h, R)) /
                   (h * h);
      CHECK(isoelastic_utility_d1(w, R) == doctest::Approx(fd1).epsilon(1e-6));
      CHECK(isoelastic_utility_d2(w, R) == doctest::Approx(fd2).epsilon(1e-3));
    }
  }
}

TEST_CASE("relative risk aversion") {
  // constant-RRA family returns R at every wealth, both signs
  for (double r : {-2.0, 0.7, 1.0, 3.0})
    for (double w : {0.5, 3.0, -0.5, -3.0}) {
      RiskParam R(r);
      CHECK(rra(isoelastic_utility_d2(w, R), isoelastic_utility_d1(w, R), w) ==
            doctest::Approx(r).epsilon(1e-10));
    }

  // concave utility u = -exp(-w): positive RRA at positive wealth, negative
  // at negative wealth
  auto u1 = [](double w) { return std::exp(-w); };
  auto u2 = [](double w) { return -std::exp(-w); };
  CHECK(rra(u2(2.0), u1(2.0), 2.0) > 0.0);
  CHECK(rra(u2(-2.0), u1(-2.0), -2.0) < 0.0);
  CHECK_THROWS_AS(rra(0.0, -1.0, 1.0), InvalidDistribution);
}

TEST_CASE("certainty equivalent of certainty") {
  // the Dutch-book strategy pays c^o regardless of the outcome
  Odds o({2.0, 4.0, 4.0});
  Pmf b({0.5, 0.25, 0.25});
  Pmf p({0.2, 0.5, 0.3});
  for (double r : {-3.0, -1.0, 0.0, 0.5, 1.0, 2.0, kInf, -kInf})
    CHECK(ice(b, o, p, RiskParam(r)).value == doctest::Approx(1.0).epsilon(1e-12));

  // loss game: the same payoffs with negative sign
  Odds neg({-2.0, -4.0, -4.0});
  for (double r : {-2.0, 0.0, 1.0, 3.0})
    CHECK(ice(b, neg, p, RiskParam(r)).value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("risk-neutral value is the expected payoff") {
  Odds o = Odds::constant(2, 3.0);
  Pmf b({0.6, 0.4});
  Pmf p({0.5, 0.5});
  CHECK(ice(b, o, p, RiskParam(0.0)).value == doctest::Approx(3.0 * 0.5).epsilon(1e-12));
}

TEST_CASE("ice boundary collapse at negative power") {
  Pmf p = Pmf::uniform(2);
  Odds o = Odds::constant(2, 2.0);
  IceValue v = ice(Pmf({1.0, 0.0}), o, p, RiskParam(2.0));
  CHECK(v.value == 0.0);
  CHECK(v.boundary);
  // epsilon-regularised oracle: the ICE of (1-e, e) tends to zero
  double prev = kInf;
  for (double e : {1e-2, 1e-4, 1e-6}) {
    double val = ice(Pmf({1.0 - e, e}), o, p, RiskParam(2.0)).value;
    CHECK(val < prev);
    prev = val;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("log ice round trip and sign flip") {
  RandomSource rs(33);
  for (int i = 0; i < 30; ++i) {
    Pmf p = random_pmf_full_support(rs, 3);
    Pmf b = random_pmf_full_support(rs, 3);
    std::vector<double> ov = {1.0 + 3.0 * rs.uniform(), 1.0 + 3.0 * rs.uniform(),
                              1.0 + 3.0 * rs.uniform()};
    for (double r : {-2.0, 0.5, 1.0, 3.0}) {
      Odds gain(ov);
      double u = log_ice(b, gain, p, RiskParam(r));
      CHECK(std::exp2(u) == doctest::Approx(std::abs(ice(b, gain, p, RiskParam(r)).value))
                                .epsilon(1e-10));
      std::vector<double> neg = ov;
      for (double& x : neg) x = -x;
      Odds loss(neg);
      double ul = log_ice(b, loss, p, RiskParam(r));
      CHECK(std::exp2(-ul) == doctest::Approx(std::abs(ice(b, loss, p, RiskParam(r)).value))
                                  .epsilon(1e-10));
    }
  }
}

TEST_CASE("optimal strategies: kelly, argmax, and the hand example") {
  Odds o = Odds::constant(3, 2.0);
  Pmf p({0.5, 0.3, 0.2});
  Pmf kelly = optimal_strategy(o, p, RiskParam(1.0));
  for (int x = 0; x < 3; ++x) CHECK(kelly[x] == doctest::Approx(p[x]).epsilon(1e-12));

  // alpha = +inf means R -> 0+: point mass on the likeliest symbol
  Pmf point = optimal_strategy(o, p, RiskParam(0.0));
  CHECK(point[0] == doctest::Approx(1.0).epsilon(1e-12));

  Pmf b = optimal_strategy(Odds::constant(2, 2.0), Pmf({0.8, 0.2}), RiskParam(2.0));
  CHECK(b[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(b[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("certainty-equivalent defining identity") {
  RandomSource rs(35);
  for (int i = 0; i < 60; ++i) {
    Pmf p = random_pmf_full_support(rs, 3);
    Pmf b = random_pmf_full_support(rs, 3, 0.05);
    Odds o({1.0 + rs.uniform(), 1.0 + rs.uniform(), 1.0 + rs.uniform()});
    for (double r : {-3.0, -0.5, 0.5, 2.0, 3.0}) {
      RiskParam R(r);
      double w = ice(b, o, p, R).value;
      double expected_u = 0.0;
      for (int x = 0; x < 3; ++x) expected_u += p[x] * isoelastic_utility(b[x] * o[x], R);
      CHECK(isoelastic_utility(w, R) == doctest::Approx(expected_u).epsilon(1e-9));
    }
  }
}

TEST_CASE("risk classification against expected wealth") {
  RandomSource rs(37);
  for (int i = 0; i < 60; ++i) {
    Pmf p = random_pmf_full_support(rs, 3);
    Pmf b = random_pmf_full_support(rs, 3, 0.05);
    Odds o({1.0 + 2.0 * rs.uniform(), 1.0 + 2.0 * rs.uniform(), 1.0 + 2.0 * rs.uniform()});
    double expected = 0.0;
    bool varied = false;
    std::vector<double> pay(3);
    for (int x = 0; x < 3; ++x) {
      pay[x] = b[x] * o[x];
      expected += p[x] * pay[x];
    }
    varied = std::abs(pay[0] - pay[1]) > 1e-6 || std::abs(pay[1] - pay[2]) > 1e-6;
    if (!varied) continue;
    CHECK(ice(b, o, p, RiskParam(0.0)).value == doctest::Approx(expected).epsilon(1e-9));
    for (double r : {0.5, 2.0}) CHECK(ice(b, o, p, RiskParam(r)).value < expected - 1e-12);
    for (double r : {-0.5, -2.0}) CHECK(ice(b, o, p, RiskParam(r)).value > expected + 1e-12);
  }
}

TEST_CASE("blp decomposition without side information") {
  // constant odds C over K outcomes: c^o = C/K and r^o uniform
  Odds o = Odds::constant(4, 2.0);
  Pmf p({0.4, 0.3, 0.2, 0.1});
  Pmf b({0.25, 0.25, 0.25, 0.25});
  BlpDecomposition d = blp_decomposition(b, o, p, RiskParam(0.5));
  CHECK(d.term_const == doctest::Approx(std::log2(0.5)).epsilon(1e-12));
  CHECK(d.sum() == doctest::Approx(log_ice(b, o, p, RiskParam(0.5))).epsilon(1e-9));

  // negative constant odds flip the sign of the leading term
  Odds neg = Odds::constant(4, -2.0);
  BlpDecomposition dn = blp_decomposition(b, neg, p, RiskParam(-0.5));
  CHECK(dn.term_const == doctest::Approx(-std::log2(0.5)).epsilon(1e-12));
  CHECK(dn.sum() == doctest::Approx(log_ice(b, neg, p, RiskParam(-0.5))).epsilon(1e-9));

  RandomSource rs(39);
  for (int i = 0; i < 200; ++i) {
    Pmf pp = random_pmf_full_support(rs, 3);
    Pmf bb = random_pmf_full_support(rs, 3, 0.02);
    std::vector<double> ov = {0.5 + 2 * rs.uniform(), 0.5 + 2 * rs.uniform(),
                              0.5 + 2 * rs.uniform()};
    if (i % 2) {
      for (double& x : ov) x = -x;
    }
    Odds oo(ov);
    for (double r : {-3.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0}) {
      BlpDecomposition dd = blp_decomposition(bb, oo, pp, RiskParam(r));
      CHECK(dd.sum() == doctest::Approx(log_ice(bb, oo, pp, RiskParam(r))).epsilon(1e-9));
      // the strategy divergence vanishes exactly at h, and h maximises the
      // ICE in the game-consistent quadrants (gain with R >= 0, loss with
      // R < 0) where the third term enters with a minus sign
      Pmf h = optimal_strategy(oo, pp, RiskParam(r));
      BlpDecomposition dopt = blp_decomposition(h, oo, pp, RiskParam(r));
      CHECK(std::abs(dopt.term_div_strategy) <= 1e-10);
      if ((oo.sign() > 0) == (r >= 0.0)) CHECK(dopt.sum() >= dd.sum() - 1e-9);
    }
  }
}

TEST_CASE("blp decomposition with side information") {
  RandomSource rs(41);
  for (int i = 0; i < 150; ++i) {
    JointPmf j = random_joint_pmf(rs, 3, 2, true);
    CondPmf b = random_cond_pmf(rs, 2, 3, true);  // rows indexed by g
    std::vector<double> ov = {0.5 + 2 * rs.uniform(), 0.5 + 2 * rs.uniform(),
                              0.5 + 2 * rs.uniform()};
    if (i % 2) {
      for (double& x : ov) x = -x;
    }
    Odds oo(ov);
    for (double r : {-3.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0}) {
      BlpDecomposition dd = blp_decomposition(b, oo, j, RiskParam(r));
      CHECK(dd.sum() == doctest::Approx(log_ice(b, oo, j, RiskParam(r))).epsilon(1e-9));
      CondPmf h = optimal_strategy(oo, j, RiskParam(r));
      BlpDecomposition dopt = blp_decomposition(h, oo, j, RiskParam(r));
      CHECK(std::abs(dopt.term_div_strategy) <= 1e-10);
    }
  }
}

TEST_CASE("lemma: the optimal no-side-information value is sgn(alpha) C p_alpha") {
  RandomSource rs(43);
  for (int i = 0; i < 50; ++i) {
    Pmf p = random_pmf_full_support(rs, 4);
    for (double a : {-8.0, -2.0, -0.5, 0.5, 2.0, 8.0}) {
      Order alpha(a);
      double c = 1.5;
      Odds o = Odds::constant(4, sgn(a) * c);
      RiskParam r(alpha.risk());
      double closed = ice(optimal_strategy(o, p, r), o, p, r).value;
      CHECK(closed ==
            doctest::Approx(sgn(a) * c * renyi_probability(p, alpha)).epsilon(1e-9));
    }
  }
}

TEST_CASE("lemma: the optimal side-information value is sgn(alpha) C p_alpha(X|G)") {
  RandomSource rs(45);
  for (int i = 0; i < 50; ++i) {
    JointPmf j = random_joint_pmf(rs, 3, 3, true);
    for (double a : {-8.0, -2.0, -0.5, 0.5, 2.0, 8.0}) {
      Order alpha(a);
      double c = 2.0;
      Odds o = Odds::constant(3, sgn(a) * c);
      RiskParam r(alpha.risk());
      double closed = ice(optimal_strategy(o, j, r), o, j, r).value;
      CHECK(closed ==
            doctest::Approx(sgn(a) * c * cond_renyi_probability(j, alpha)).epsilon(1e-9));
    }
  }
}

TEST_CASE("numeric optimiser matches the closed form") {
  RandomSource rs(47);
  NumericIceOptions opts;
  opts.seed = 5;
  for (int i = 0; i < 60; ++i) {
    JointPmf j = random_joint_pmf(rs, 3, 2, true);
    std::vector<double> ov = {0.5 + 2 * rs.uniform(), 0.5 + 2 * rs.uniform(),
                              0.5 + 2 * rs.uniform()};
    bool loss = i % 2;
    if (loss)
      for (double& x : ov) x = -x;
    Odds o(ov);
    // game-consistent quadrants: R < 1 for gain, R < 0 for loss
    std::vector<double> risks = loss ? std::vector<double>{-2.0, -0.5, -0.125}
                                     : std::vector<double>{0.125, 0.5, 1.0, 2.0};
    for (double r : risks) {
      RiskParam R(r);
      double closed = ice(optimal_strategy(o, j, R), o, j, R).value;
      NumericIceResultSi num = numeric_optimal_ice(o, j, R, opts);
      CHECK(num.ice.value >= closed - 1e-6);
      CHECK(std::abs(num.ice.value - closed) <= 1e-6);
    }
  }
}

TEST_CASE("closed-form play beats random strategies") {
  RandomSource rs(49);
  for (int i = 0; i < 20; ++i) {
    Pmf p = random_pmf_full_support(rs, 3);
    std::vector<double> ov = {1.0 + rs.uniform(), 1.0 + rs.uniform(), 1.0 + rs.uniform()};
    bool loss = i % 2;
    if (loss)
      for (double& x : ov) x = -x;
    Odds o(ov);
    std::vector<double> risks =
        loss ? std::vector<double>{-2.0, -0.5} : std::vector<double>{0.5, 1.0, 2.0};
    for (double r : risks) {
      RiskParam R(r);
      double best = ice(optimal_strategy(o, p, R), o, p, R).value;
      for (int k = 0; k < 100; ++k) {
        Pmf b = random_pmf(rs, 3);
        CHECK(best >= ice(b, o, p, R).value - 1e-10);
      }
    }
  }
}
