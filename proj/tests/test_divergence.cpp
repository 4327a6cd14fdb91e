#include <doctest.h>

#include <cmath>

#include "qbet/divergence.hpp"
#include "qbet/errors.hpp"
#include "test_util.hpp"

using namespace qbet;
using qtest::order_sweep;

TEST_CASE("renyi divergence vanishes iff the arguments coincide") {
  RandomSource rs(3);
  for (int i = 0; i < 20; ++i) {
    Pmf p = random_pmf_full_support(rs, 3);
    for (const Order& a : order_sweep())
      CHECK(renyi_div(p, p, a) == doctest::Approx(0.0).epsilon(1e-12));
  }
  // and is strictly positive away from equality
  Pmf p({0.5, 0.5});
  Pmf q({0.25, 0.75});
  for (const Order& a : order_sweep()) CHECK(renyi_div(p, q, a) > 1e-3);
}

TEST_CASE("renyi divergence extended-order values") {
  Pmf p({0.5, 0.5});
  Pmf q({0.25, 0.75});
  CHECK(renyi_div(p, q, Order::pos_inf()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(renyi_div(p, q, Order::neg_inf()) ==
        doctest::Approx(-std::log2(2.0 / 3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(renyi_div(p, Pmf({0.25, 0.25, 0.5}), Order(2.0)), AlphabetMismatch);

  // absolute continuity failure at alpha > 1
  CHECK(renyi_div(Pmf({0.5, 0.5}), Pmf({1.0, 0.0}), Order(2.0)) == kInf);
  CHECK(renyi_div(Pmf({0.5, 0.5}), Pmf({1.0, 0.0}), Order(1.0)) == kInf);
}

TEST_CASE("renyi divergence is non-negative for all orders on random pairs") {
  RandomSource rs(17);
  for (int i = 0; i < 300; ++i) {
    Pmf p = random_pmf_full_support(rs, 2 + (i % 4));
    Pmf q = random_pmf_full_support(rs, 2 + (i % 4));
    for (const Order& a : order_sweep()) CHECK(renyi_div(p, q, a) >= 0.0);
  }
}

TEST_CASE("conditional divergences vanish on identical conditionals") {
  RandomSource rs(41);
  for (int i = 0; i < 10; ++i) {
    CondPmf pc = random_cond_pmf(rs, 3, 3);
    Pmf px = random_pmf_full_support(rs, 3);
    for (auto v : {CrdVariant::SIBSON, CrdVariant::CSISZAR, CrdVariant::BLP})
      for (const Order& a : order_sweep())
        CHECK(cond_renyi_div(v, pc, pc, px, a) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("sibson conditional divergence against a constant row equals a joint divergence") {
  RandomSource rs(43);
  for (int i = 0; i < 25; ++i) {
    CondPmf pc = random_cond_pmf(rs, 3, 3);
    Pmf q = random_pmf_full_support(rs, 3);
    Pmf px = random_pmf_full_support(rs, 3);
    // flatten p(g|x)p(x) and q(g)p(x) over the product alphabet
    std::vector<double> pj, qj;
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t g = 0; g < 3; ++g) {
        pj.push_back(pc(x, g) * px[x]);
        qj.push_back(q[g] * px[x]);
      }
    Pmf pJ = Pmf::normalized(pj);
    Pmf qJ = Pmf::normalized(qj);
    for (const Order& a : order_sweep()) {
      double lhs = cond_renyi_div(CrdVariant::SIBSON, pc, broadcast_row(q, 3), px, a);
      CHECK(lhs == doctest::Approx(renyi_div(pJ, qJ, a)).epsilon(1e-9));
    }
  }
}

TEST_CASE("csiszar conditional divergence is the prior-weighted row divergence") {
  RandomSource rs(47);
  for (int i = 0; i < 25; ++i) {
    CondPmf pc = random_cond_pmf(rs, 3, 4);
    CondPmf qc = random_cond_pmf(rs, 3, 4);
    Pmf px = random_pmf_full_support(rs, 3);
    for (const Order& a : order_sweep()) {
      double expect = 0.0;
      for (std::size_t x = 0; x < 3; ++x)
        expect += px[x] * renyi_div(pc.row(x), qc.row(x), a);
      CHECK(cond_renyi_div(CrdVariant::CSISZAR, pc, qc, px, a) ==
            doctest::Approx(expect).epsilon(1e-9));
    }
  }
}

namespace {

void check_ordering(double blp, double c, double s, double lo_mid_hi[3], double slack) {
  // lo <= mid <= hi per regime, names resolved by caller
  CHECK(lo_mid_hi[0] <= lo_mid_hi[1] + slack);
  CHECK(lo_mid_hi[1] <= lo_mid_hi[2] + slack);
  (void)blp;
  (void)c;
  (void)s;
}

}  // namespace

TEST_CASE("lemma 1 orderings between the conditional divergences") {
  RandomSource rs(53);
  const double slack = 1e-9;
  std::vector<double> neg = {-kInf, -4.0, -1.0, -0.25, 0.0};
  std::vector<double> mid = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> high = {1.0, 1.5, 3.0, 8.0, kInf};
  for (int i = 0; i < 120; ++i) {
    CondPmf pc = random_cond_pmf(rs, 3, 3);
    CondPmf qc = random_cond_pmf(rs, 3, 3);
    Pmf px = random_pmf_full_support(rs, 3);
    auto d = [&](CrdVariant v, double a) {
      return cond_renyi_div(v, pc, qc, px, Order(a));
    };
    for (double a : neg) {  // BLP <= C <= S
      double t[3] = {d(CrdVariant::BLP, a), d(CrdVariant::CSISZAR, a), d(CrdVariant::SIBSON, a)};
      check_ordering(t[0], t[1], t[2], t, slack);
    }
    for (double a : mid) {  // BLP <= S <= C
      double t[3] = {d(CrdVariant::BLP, a), d(CrdVariant::SIBSON, a), d(CrdVariant::CSISZAR, a)};
      check_ordering(t[0], t[1], t[2], t, slack);
    }
    for (double a : high) {  // C <= BLP <= S
      double t[3] = {d(CrdVariant::CSISZAR, a), d(CrdVariant::BLP, a), d(CrdVariant::SIBSON, a)};
      check_ordering(t[0], t[1], t[2], t, slack);
    }
  }
}

TEST_CASE("sibson q* identity at negative orders") {
  RandomSource rs(59);
  for (int i = 0; i < 60; ++i) {
    CondPmf pc = random_cond_pmf(rs, 3, 3);
    Pmf px = random_pmf_full_support(rs, 3);
    Pmf q = random_pmf_full_support(rs, 3);
    for (double a : {-6.0, -2.0, -0.7, -0.1}) {
      Order ord(a);
      auto qstar = sibson_optimal_output(pc, px, ord);
      REQUIRE(qstar.has_value());
      double lhs = cond_renyi_div(CrdVariant::SIBSON, pc, broadcast_row(q, 3), px, ord);
      double rhs = cond_renyi_div(CrdVariant::SIBSON, pc, broadcast_row(*qstar, 3), px, ord) +
                   renyi_div(*qstar, q, ord);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
  }
}

TEST_CASE("variant mutual informations: zero at independence, shannon at alpha 1") {
  RandomSource rs(61);
  Pmf px = random_pmf_full_support(rs, 3);
  Pmf pg = random_pmf_full_support(rs, 3);
  std::vector<std::vector<double>> jv(3, std::vector<double>(3, 0.0));
  for (int x = 0; x < 3; ++x)
    for (int g = 0; g < 3; ++g) jv[x][g] = px[x] * pg[g];
  JointPmf indep(jv);
  for (auto v : {CrdVariant::SIBSON, CrdVariant::CSISZAR, CrdVariant::BLP}) {
    for (double a : {-2.0, -0.5, 0.5, 2.0})
      CHECK(variant_mi(v, indep, Order(a)) == doctest::Approx(0.0).epsilon(5e-7));
    CHECK(variant_mi(v, indep, Order(1.0)) == doctest::Approx(0.0).epsilon(1e-10));
  }

  for (int i = 0; i < 10; ++i) {
    JointPmf j = random_joint_pmf(rs, 3, 3, true);
    double shannon = qtest::shannon_mi_oracle(j);
    for (auto v : {CrdVariant::SIBSON, CrdVariant::CSISZAR, CrdVariant::BLP})
      CHECK(variant_mi(v, j, Order(1.0)) == doctest::Approx(shannon).epsilon(1e-10));
  }
}

TEST_CASE("sibson mi closed form matches a dense grid minimisation") {
  JointPmf j({{0.4, 0.1}, {0.1, 0.4}});
  Pmf px = j.marginal_x();
  CondPmf pc = j.conditional_g_given_x();
  for (double a : {-3.0, -0.5, 0.5, 2.0, 4.0}) {
    Order ord(a);
    double closed = variant_mi(CrdVariant::SIBSON, j, ord);
    double grid = kInf;
    for (int k = 1; k < 1000; ++k) {
      Pmf q({k / 1000.0, 1.0 - k / 1000.0});
      grid = std::min(grid, cond_renyi_div(CrdVariant::SIBSON, pc, broadcast_row(q, 2), px, ord));
    }
    CHECK(closed <= grid + 1e-9);   // a true minimum can only undercut the grid
    CHECK(closed >= grid - 1e-4);   // and the grid is 1e-3-dense
  }
}

TEST_CASE("lemma 2 orderings between the mutual informations") {
  RandomSource rs(67);
  const double slack = 5e-7;  // numeric minimisers on both sides
  for (int i = 0; i < 25; ++i) {
    JointPmf j = random_joint_pmf(rs, 3, 3, true);
    auto mi = [&](CrdVariant v, double a) { return variant_mi(v, j, Order(a)); };
    for (double a : {-kInf, -4.0, -1.0, -0.25}) {
      CHECK(mi(CrdVariant::BLP, a) <= mi(CrdVariant::CSISZAR, a) + slack);
      CHECK(mi(CrdVariant::CSISZAR, a) <= mi(CrdVariant::SIBSON, a) + slack);
    }
    for (double a : {0.25, 0.5, 0.75}) {
      CHECK(mi(CrdVariant::BLP, a) <= mi(CrdVariant::SIBSON, a) + slack);
      CHECK(mi(CrdVariant::SIBSON, a) <= mi(CrdVariant::CSISZAR, a) + slack);
    }
    for (double a : {1.5, 3.0, 8.0, kInf}) {
      CHECK(mi(CrdVariant::CSISZAR, a) <= mi(CrdVariant::BLP, a) + slack);
      CHECK(mi(CrdVariant::BLP, a) <= mi(CrdVariant::SIBSON, a) + slack);
    }
  }
}

TEST_CASE("renyi capacity of reference channels") {
  // noiseless channel: log2 n at every order, uniform achiever
  CondPmf ident({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}});
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    CapacityResult c = renyi_capacity(ident, Order(a));
    CHECK(c.value == doctest::Approx(std::log2(3.0)).epsilon(1e-7));
  }
  CHECK(renyi_capacity(ident, Order::pos_inf()).value ==
        doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  // a perfectly excludable channel has divergent negative-order capacity:
  // the error ratio of informative vs uninformative play reaches zero
  CHECK(renyi_capacity(ident, Order::neg_inf()).value == kInf);

  // constant channel: zero capacity
  CondPmf noisy({{0.3, 0.7}, {0.3, 0.7}, {0.3, 0.7}});
  for (double a : {-2.0, -0.5, 0.5, 1.0, 2.0})
    CHECK(renyi_capacity(noisy, Order(a)).value == doctest::Approx(0.0).epsilon(1e-7));

  // binary symmetric channel at alpha = 1: the Shannon capacity
  CondPmf bsc({{0.9, 0.1}, {0.1, 0.9}});
  CapacityResult c = renyi_capacity(bsc, Order(1.0));
  CHECK(c.value == doctest::Approx(1.0 - qtest::binary_entropy(0.1)).epsilon(1e-7));
  CHECK(c.input[0] == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("arimoto and sibson capacities agree on random channels") {
  RandomSource rs(71);
  for (int i = 0; i < 12; ++i) {
    CondPmf ch = random_cond_pmf(rs, 2 + (i % 3), 2 + ((i / 3) % 3));
    for (double a : {-4.0, -0.5, 0.5, 2.0}) {
      CapacityResult c = renyi_capacity(ch, Order(a));  // throws if the check fails
      CHECK(std::abs(c.arimoto_value - c.sibson_value) <= 1e-6);
    }
  }
}
