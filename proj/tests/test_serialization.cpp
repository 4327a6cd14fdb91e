#include <doctest.h>

#include "qbet/random_instances.hpp"
#include "qbet/serialization.hpp"

using namespace qbet;

TEST_CASE("json round trips over random instances") {
  RandomSource rs(77);
  for (int i = 0; i < 25; ++i) {
    RandomInstance inst = random_instance(300 + i, 2 + (i % 3), 2 + (i % 3), 2 + (i % 2), 2);

    Ensemble e2 = ensemble_from_json(ensemble_to_json(inst.ensemble));
    for (std::size_t k = 0; k < e2.states.size(); ++k)
      CHECK(max_abs(e2.states[k].matrix() - inst.ensemble.states[k].matrix()) <= 1e-14);

    Povm m2 = povm_from_json(povm_to_json(inst.povm));
    for (std::size_t g = 0; g < m2.num_outcomes(); ++g)
      CHECK(max_abs(m2.element(g) - inst.povm.element(g)) <= 1e-14);

    KrausChannel n2 = channel_from_json(channel_to_json(inst.channel));
    for (std::size_t k = 0; k < n2.kraus().size(); ++k)
      CHECK(max_abs(n2.kraus()[k] - inst.channel.kraus()[k]) <= 1e-14);

    JointPmf j = random_joint_pmf(rs, 3, 4, false);
    JointPmf j2 = joint_from_json(joint_to_json(j));
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t g = 0; g < 4; ++g) CHECK(j2(x, g) == j(x, g));
  }
}

TEST_CASE("order and game-spec serialization") {
  CHECK(order_from_json(order_to_json(Order::pos_inf())).classify() == OrderClass::POS_INF);
  CHECK(order_from_json(order_to_json(Order::neg_inf())).classify() == OrderClass::NEG_INF);
  CHECK(order_from_json(Json(0.5)).value() == 0.5);
  CHECK_THROWS_AS(order_from_json(Json("nope")), InvalidDistribution);

  GameSpec g{Odds({-2.0, -3.0}), Pmf({0.4, 0.6}),
             JointPmf({{0.2, 0.2}, {0.3, 0.3}}), RiskParam(-0.5)};
  Json j = game_spec_to_json(g);
  GameSpec g2 = game_spec_from_json(j);
  CHECK(g2.odds[0] == -2.0);
  CHECK(g2.odds.sign() == -1);
  CHECK(g2.prior[1] == doctest::Approx(0.6));
  CHECK(g2.risk.r == -0.5);
  REQUIRE(g2.joint.has_value());
  CHECK((*g2.joint)(1, 0) == doctest::Approx(0.3));

  // serialization is deterministic: identical inputs give identical bytes
  CHECK(game_spec_to_json(g2).dump() == j.dump());
  Json risk_inf = game_spec_to_json(
      GameSpec{Odds({2.0}), Pmf({1.0}), std::nullopt, RiskParam(kInf)});
  CHECK(risk_inf["risk"] == "inf");
}
