#include "qbet/serialization.hpp"

#include <cmath>

#include "qbet/errors.hpp"

namespace qbet {

Json order_to_json(const Order& a) {
  if (a.value() == kInf) return "inf";
  if (a.value() == -kInf) return "-inf";
  return a.value();
}

Order order_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return Order::pos_inf();
    if (s == "-inf") return Order::neg_inf();
    throw InvalidDistribution("order_from_json: expected number, \"inf\" or \"-inf\"");
  }
  return Order(j.get<double>());
}

Json pmf_to_json(const Pmf& p) { return Json(p.probs()); }

Pmf pmf_from_json(const Json& j) { return Pmf(j.get<std::vector<double>>()); }

Json joint_to_json(const JointPmf& j) { return Json(j.values()); }

JointPmf joint_from_json(const Json& j) {
  return JointPmf(j.get<std::vector<std::vector<double>>>());
}

Json cond_pmf_to_json(const CondPmf& c) {
  std::vector<std::vector<double>> rows;
  rows.reserve(c.num_inputs());
  for (std::size_t x = 0; x < c.num_inputs(); ++x) rows.push_back(c.row(x).probs());
  return Json(rows);
}

CondPmf cond_pmf_from_json(const Json& j) {
  return CondPmf(j.get<std::vector<std::vector<double>>>());
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidDistribution("matrix_from_json: expected rows");
  const auto rows = j.size();
  const auto cols = j.front().size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw ShapeMismatch("matrix_from_json: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& c = j[i][k];
      if (c.is_array()) {
        if (c.size() != 2) throw InvalidDistribution("matrix_from_json: complex as [re, im]");
        m(i, k) = Cplx(c[0].get<double>(), c[1].get<double>());
      } else {
        m(i, k) = Cplx(c.get<double>(), 0.0);
      }
    }
  }
  return m;
}

Json povm_to_json(const Povm& m) {
  Json out = Json::array();
  for (const Matrix& e : m.elements()) out.push_back(matrix_to_json(e));
  return out;
}

Povm povm_from_json(const Json& j) {
  std::vector<Matrix> els;
  for (const Json& e : j) els.push_back(matrix_from_json(e));
  return Povm(std::move(els));
}

Json state_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

DensityMatrix state_from_json(const Json& j) { return DensityMatrix(matrix_from_json(j)); }

Json ensemble_to_json(const Ensemble& e) {
  Json states = Json::array();
  for (const DensityMatrix& s : e.states) states.push_back(state_to_json(s));
  return Json{{"states", states}, {"probs", pmf_to_json(e.priors)}};
}

Ensemble ensemble_from_json(const Json& j) {
  StateSet states;
  for (const Json& s : j.at("states")) states.push_back(state_from_json(s));
  return Ensemble(std::move(states), pmf_from_json(j.at("probs")));
}

Json channel_to_json(const KrausChannel& n) {
  Json kraus = Json::array();
  for (const Matrix& k : n.kraus()) kraus.push_back(matrix_to_json(k));
  return Json{{"kraus", kraus}};
}

KrausChannel channel_from_json(const Json& j) {
  std::vector<Matrix> kraus;
  for (const Json& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  bool sub = j.value("subchannel", false);
  return KrausChannel(std::move(kraus), sub);
}

namespace {

Json risk_to_json(const RiskParam& r) {
  if (r.r == kInf) return "inf";
  if (r.r == -kInf) return "-inf";
  return r.r;
}

RiskParam risk_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return RiskParam(kInf);
    if (s == "-inf") return RiskParam(-kInf);
    throw InvalidDistribution("risk_from_json: expected number, \"inf\" or \"-inf\"");
  }
  return RiskParam(j.get<double>());
}

}  // namespace

Json game_spec_to_json(const GameSpec& g) {
  Json out;
  std::vector<double> odds(g.odds.size());
  for (std::size_t x = 0; x < g.odds.size(); ++x) odds[x] = g.odds[x];
  out["odds"] = odds;
  out["prior"] = pmf_to_json(g.prior);
  if (g.joint) out["joint"] = joint_to_json(*g.joint);
  out["risk"] = risk_to_json(g.risk);
  return out;
}

GameSpec game_spec_from_json(const Json& j) {
  Odds odds(j.at("odds").get<std::vector<double>>());
  Pmf prior = pmf_from_json(j.at("prior"));
  std::optional<JointPmf> joint;
  if (j.contains("joint") && !j["joint"].is_null()) joint = joint_from_json(j["joint"]);
  return GameSpec{std::move(odds), std::move(prior), std::move(joint),
                  risk_from_json(j.at("risk"))};
}

Json result_report_to_json(const ResultReport& r) {
  return Json{{"result", r.result}, {"alpha", order_to_json(Order(r.alpha))},
              {"lhs", r.lhs},       {"rhs", r.rhs},
              {"abs_err", r.abs_err}, {"pass", r.pass},
              {"seed", r.seed}};
}

Json monotone_report_to_json(const MonotoneReport& r) {
  Json out{{"measure", r.measure}, {"value", r.value}};
  switch (r.method) {
    case MonotoneMethod::CLOSED_FORM: out["method"] = "closed_form"; break;
    case MonotoneMethod::BISECTION_ORACLE: out["method"] = "bisection_oracle"; break;
    case MonotoneMethod::MINIMAX: out["method"] = "minimax"; break;
  }
  if (r.witness_pmf) out["witness_q"] = pmf_to_json(*r.witness_pmf);
  if (r.witness_states) {
    Json states = Json::array();
    for (const DensityMatrix& s : *r.witness_states) states.push_back(state_to_json(s));
    out["witness_states"] = states;
  }
  return out;
}

}  // namespace qbet
