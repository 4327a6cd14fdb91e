#include <doctest.h>

#include <cmath>

#include "qbet/entropy.hpp"
#include "qbet/errors.hpp"
#include "test_util.hpp"

using namespace qbet;
using qtest::order_sweep;

TEST_CASE("renyi entropy of the uniform distribution is log2 n for every order") {
  Pmf u = Pmf::uniform(4);
  for (const Order& a : order_sweep())
    CHECK(renyi_entropy(u, a) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(renyi_entropy(u, Order(0.0)) == doctest::Approx(2.0));
}

TEST_CASE("renyi entropy hand-checked values") {
  Pmf p({0.5, 0.25, 0.25});
  // direct evaluation: sum p^2 = 3/8, H_2 = -log2(3/8) = log2(8/3)
  CHECK(renyi_entropy(p, Order(2.0)) == doctest::Approx(std::log2(8.0 / 3.0)).epsilon(1e-12));
  CHECK(renyi_entropy(p, Order::pos_inf()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(renyi_entropy(p, Order(0.0)) == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  CHECK(renyi_entropy(p, Order(1.0)) == doctest::Approx(1.5).epsilon(1e-12));  // Shannon
}

TEST_CASE("negative orders demand full support") {
  Pmf p({0.5, 0.5, 0.0});
  CHECK_THROWS_AS(renyi_entropy(p, Order(-1.0)), DivergentEntropy);
  CHECK_THROWS_AS(renyi_entropy(p, Order::neg_inf()), DivergentEntropy);
  CHECK_NOTHROW(renyi_entropy(p, Order(2.0)));
}

TEST_CASE("renyi probability values and the 2^-H identity") {
  CHECK(renyi_probability(Pmf::uniform(2), Order(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(renyi_probability(Pmf({0.5, 0.25, 0.25}), Order(2.0)) ==
        doctest::Approx(0.375).epsilon(1e-12));
  CHECK(renyi_probability(Pmf({1.0, 0.0}), Order::pos_inf()) ==
        doctest::Approx(1.0).epsilon(1e-12));

  RandomSource rs(11);
  for (int i = 0; i < 50; ++i) {
    Pmf p = random_pmf_full_support(rs, 2 + (i % 5));
    for (const Order& a : order_sweep()) {
      double h = renyi_entropy(p, a);
      CHECK(std::exp2(-h) == doctest::Approx(renyi_probability(p, a)).epsilon(1e-10));
    }
  }
}

TEST_CASE("arimoto conditional entropy examples") {
  // X = G uniform, perfectly correlated
  JointPmf corr({{0.5, 0.0}, {0.0, 0.5}});
  CHECK(arimoto_cond_entropy(corr, Order(2.0)) == doctest::Approx(0.0).epsilon(1e-12));

  // independence collapses conditioning
  RandomSource rs(5);
  Pmf px = random_pmf_full_support(rs, 3);
  Pmf pg = random_pmf_full_support(rs, 4);
  std::vector<std::vector<double>> jv(3, std::vector<double>(4, 0.0));
  for (int x = 0; x < 3; ++x)
    for (int g = 0; g < 4; ++g) jv[x][g] = px[x] * pg[g];
  JointPmf indep(jv);
  for (const Order& a : order_sweep())
    CHECK(arimoto_cond_entropy(indep, a) ==
          doctest::Approx(renyi_entropy(px, a)).epsilon(1e-10));

  JointPmf j({{0.4, 0.1}, {0.1, 0.4}});
  CHECK(arimoto_cond_entropy(j, Order::pos_inf()) ==
        doctest::Approx(-std::log2(0.8)).epsilon(1e-12));
  CHECK(cond_renyi_probability(j, Order::pos_inf()) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(cond_renyi_probability(corr, Order(2.0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("arimoto mutual information examples") {
  // independent joint gives zero for every order
  RandomSource rs(7);
  Pmf px = random_pmf_full_support(rs, 3);
  Pmf pg = random_pmf_full_support(rs, 3);
  std::vector<std::vector<double>> jv(3, std::vector<double>(3, 0.0));
  for (int x = 0; x < 3; ++x)
    for (int g = 0; g < 3; ++g) jv[x][g] = px[x] * pg[g];
  JointPmf indep(jv);
  for (const Order& a : order_sweep())
    CHECK(arimoto_mi(indep, a) == doctest::Approx(0.0).epsilon(1e-10));

  // X = G uniform on {0,1}: one bit for alpha >= 0
  JointPmf corr({{0.5, 0.0}, {0.0, 0.5}});
  for (double a : {0.0, 0.5, 1.0, 2.0, 8.0})
    CHECK(arimoto_mi(corr, Order(a)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(arimoto_mi(corr, Order::pos_inf()) == doctest::Approx(1.0).epsilon(1e-12));

  // binary symmetric joint at alpha = 1 matches the Shannon oracle
  JointPmf bsc({{0.45, 0.05}, {0.05, 0.45}});
  CHECK(arimoto_mi(bsc, Order(1.0)) ==
        doctest::Approx(1.0 - qtest::binary_entropy(0.1)).epsilon(1e-12));
  CHECK(arimoto_mi(bsc, Order(1.0)) ==
        doctest::Approx(qtest::shannon_mi_oracle(bsc)).epsilon(1e-12));
}

TEST_CASE("arimoto mi is non-negative over random joints and all orders") {
  RandomSource rs(23);
  for (int i = 0; i < 1000; ++i) {
    JointPmf j = random_joint_pmf(rs, 2 + (i % 3), 2 + ((i / 3) % 3), true);
    for (const Order& a : order_sweep()) {
      double mi = arimoto_mi(j, a);
      CHECK(mi >= -1e-10);
    }
  }
}

TEST_CASE("continuity of H_alpha at alpha -> 1") {
  RandomSource rs(29);
  for (int i = 0; i < 40; ++i) {
    Pmf p = random_pmf_full_support(rs, 2 + (i % 5));
    double h1 = renyi_entropy(p, Order(1.0));
    CHECK(std::abs(renyi_entropy(p, Order(1.0 + 1e-3)) - h1) < 1e-2);
    CHECK(std::abs(renyi_entropy(p, Order(1.0 - 1e-3)) - h1) < 1e-2);
    CHECK(std::abs(renyi_entropy(p, Order(1.0 + 1e-2)) - h1) < 1e-1);
  }
}

TEST_CASE("shannon mi does not increase under post-processing of G") {
  RandomSource rs(31);
  for (int i = 0; i < 200; ++i) {
    JointPmf j = random_joint_pmf(rs, 3, 3, true);
    CondPmf post = random_cond_pmf(rs, 3, 3, false);
    std::vector<std::vector<double>> coarser(3, std::vector<double>(3, 0.0));
    for (int x = 0; x < 3; ++x)
      for (int g = 0; g < 3; ++g)
        for (int k = 0; k < 3; ++k) coarser[x][k] += j(x, g) * post(g, k);
    JointPmf j2(coarser);
    CHECK(arimoto_mi(j2, Order(1.0)) <= arimoto_mi(j, Order(1.0)) + 1e-9);
  }
}
