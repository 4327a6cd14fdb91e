#ifndef QBET_SERIALIZATION_HPP
#define QBET_SERIALIZATION_HPP

#include <json.hpp>

#include "qbet/betting.hpp"
#include "qbet/games.hpp"
#include "qbet/order.hpp"
#include "qbet/pmf.hpp"
#include "qbet/quantum.hpp"
#include "qbet/resource.hpp"

namespace qbet {

using Json = nlohmann::json;

// Order <-> JSON number or the strings "inf" / "-inf".
Json order_to_json(const Order& a);
Order order_from_json(const Json& j);

Json pmf_to_json(const Pmf& p);
Pmf pmf_from_json(const Json& j);

Json joint_to_json(const JointPmf& j);             // row-major nested arrays
JointPmf joint_from_json(const Json& j);

Json cond_pmf_to_json(const CondPmf& c);
CondPmf cond_pmf_from_json(const Json& j);

// complex scalar as [re, im]; matrix as row-major nested arrays
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json povm_to_json(const Povm& m);                  // list of matrices
Povm povm_from_json(const Json& j);

Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j);

Json ensemble_to_json(const Ensemble& e);          // {"states": [...], "probs": [...]}
Ensemble ensemble_from_json(const Json& j);

Json channel_to_json(const KrausChannel& n);       // {"kraus": [...]}
KrausChannel channel_from_json(const Json& j);

// {"odds": [...], "prior": [...], "joint": [[...]] optional,
//  "risk": number|"inf"|"-inf"}
struct GameSpec {
  Odds odds;
  Pmf prior;
  std::optional<JointPmf> joint;
  RiskParam risk;
};
Json game_spec_to_json(const GameSpec& g);
GameSpec game_spec_from_json(const Json& j);

Json result_report_to_json(const ResultReport& r);
Json monotone_report_to_json(const MonotoneReport& r);

}  // namespace qbet

#endif  // QBET_SERIALIZATION_HPP
