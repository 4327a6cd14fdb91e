#include "verify_suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "qbet/games.hpp"
#include "qbet/random_instances.hpp"
#include "qbet/resource.hpp"

namespace qbet::suites {

void SuiteReport::add(CheckEntry e) {
  all_pass = all_pass && e.pass;
  if (std::isfinite(e.err)) max_err = std::max(max_err, e.err);
  checks.push_back(std::move(e));
}

Json SuiteReport::to_json() const {
  Json out;
  out["suite"] = suite;
  out["pass"] = all_pass;
  out["max_err"] = max_err;
  out["num_checks"] = checks.size();
  out["seconds"] = seconds;
  Json list = Json::array();
  for (const auto& c : checks) {
    list.push_back(Json{{"name", c.name},
                        {"alpha", order_to_json(Order(c.alpha))},
                        {"lhs", c.lhs},
                        {"rhs", c.rhs},
                        {"abs_err", c.err},
                        {"tol", c.tol},
                        {"pass", c.pass},
                        {"seed", c.seed}});
  }
  out["checks"] = list;
  return out;
}

namespace {

CheckEntry entry_from_report(const ResultReport& r, double tol) {
  CheckEntry e;
  e.name = r.result;
  e.alpha = r.alpha;
  e.lhs = r.lhs;
  e.rhs = r.rhs;
  e.err = r.abs_err;
  e.tol = tol;
  e.pass = r.pass;
  e.seed = r.seed;
  return e;
}

CheckEntry make_entry(std::string name, double alpha, double lhs, double rhs, double tol,
                      std::uint64_t seed) {
  CheckEntry e;
  e.name = std::move(name);
  e.alpha = alpha;
  e.lhs = lhs;
  e.rhs = rhs;
  e.err = std::abs(lhs - rhs);
  e.tol = tol;
  e.pass = std::isfinite(e.err) && e.err <= tol;
  e.seed = seed;
  return e;
}

CheckEntry make_bound_entry(std::string name, double alpha, double value, double bound,
                            double tol, std::uint64_t seed) {
  // passes when value <= bound + tol
  CheckEntry e;
  e.name = std::move(name);
  e.alpha = alpha;
  e.lhs = value;
  e.rhs = bound;
  e.err = std::max(value - bound, 0.0);
  e.tol = tol;
  e.pass = std::isfinite(value) && std::isfinite(bound) && e.err <= tol;
  e.seed = seed;
  return e;
}

const std::vector<double> kResult1Orders = {-8.0, -2.0, -0.5, 0.5, 2.0, 8.0, kInf, -kInf};

// exhaustive deterministic classical post-processing oracle
DiscriminationExclusion cpp_oracle(const JointPmf& j) {
  const std::size_t nx = j.num_x(), ng = j.num_g();
  double best = -1.0, worst = 2.0;
  std::vector<std::size_t> phi(ng, 0);
  std::size_t total = 1;
  for (std::size_t g = 0; g < ng; ++g) total *= nx;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t g = 0; g < ng; ++g) {
      phi[g] = c % nx;
      c /= nx;
    }
    double v = 0.0;
    for (std::size_t g = 0; g < ng; ++g) v += j(phi[g], g);
    best = std::max(best, v);
    worst = std::min(worst, v);
  }
  return {best, worst};
}

template <typename Fn>
SuiteReport timed(const std::string& name, Fn&& body) {
  SuiteReport rep;
  rep.suite = name;
  auto t0 = std::chrono::steady_clock::now();
  body(rep);
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

SuiteReport run_result1(const SuiteConfig& cfg) {
  return timed("result1", [&](SuiteReport& rep) {
    const int n = cfg.trials > 0 ? cfg.trials : 50;
    const double tol = cfg.tol > 0 ? cfg.tol : 1e-6;
    for (int i = 0; i < n; ++i) {
      RandomInstance inst =
          random_instance(cfg.seed + i, 2, 2 + (i % 2), 2 + ((i / 2) % 2), 2);
      ResultCheckOptions opts;
      opts.seed = cfg.seed + i;
      for (double a : kResult1Orders)
        rep.add(entry_from_report(check_result1(inst.ensemble, inst.povm, Order(a), tol, opts),
                                  tol));
    }
  });
}

SuiteReport run_corollaries23(const SuiteConfig& cfg) {
  return timed("corollaries23", [&](SuiteReport& rep) {
    const int n = cfg.trials > 0 ? cfg.trials : 50;
    const double tol = cfg.tol > 0 ? cfg.tol : 1e-9;
    for (int i = 0; i < n; ++i) {
      RandomInstance inst =
          random_instance(cfg.seed + 1000 + i, 2, 2 + (i % 2), 2 + ((i / 2) % 2), 2);
      const Ensemble& e = inst.ensemble;
      JointPmf j = JointPmf::from_conditional(born_cond_pmf(inst.povm, e.states), e.priors);
      DiscriminationExclusion oracle = cpp_oracle(j);
      double pmax = 0.0, pmin = kInf;
      for (std::size_t x = 0; x < e.priors.size(); ++x) {
        pmax = std::max(pmax, e.priors[x]);
        pmin = std::min(pmin, e.priors[x]);
      }

      // discrimination: QSB ratio at alpha = +inf vs P_succ ratio
      QsbGame gain(Odds::constant(e.size(), 1.0), e);
      double qsb = qsb_value(gain, inst.povm, Order::pos_inf());
      double qsb_free =
          best_free_qsb_value(gain, FreeSet::uninformative_measurements(), Order::pos_inf());
      rep.add(make_entry("C2:qsd_ratio", kInf, qsb / qsb_free, oracle.p_succ_qsd / pmax, tol,
                         cfg.seed + 1000 + i));

      // exclusion: QSB ratio at alpha = -inf vs P_err ratio
      QsbGame loss(Odds::constant(e.size(), -1.0), e);
      double qse = qsb_value(loss, inst.povm, Order::neg_inf());
      double qse_free =
          best_free_qsb_value(loss, FreeSet::uninformative_measurements(), Order::neg_inf());
      rep.add(make_entry("C3:qse_ratio", -kInf, qse / qse_free, oracle.p_err_qse / pmin, tol,
                         cfg.seed + 1000 + i));
    }
  });
}

SuiteReport run_result2(const SuiteConfig& cfg) {
  return timed("result2", [&](SuiteReport& rep) {
    const int n = cfg.trials > 0 ? cfg.trials : 20;
    const double tol = cfg.tol > 0 ? cfg.tol : 1e-5;
    for (int i = 0; i < n; ++i) {
      RandomInstance inst = random_instance(cfg.seed + 2000 + i, 2, 2, 2, 2);
      ResultCheckOptions opts;
      opts.seed = cfg.seed + 2000 + i;
      opts.povm.num_starts = 8;
      opts.povm.max_iters = 150;
      opts.povm.outcomes = 3;
      for (double a : {2.0, -0.5})
        rep.add(entry_from_report(
            check_result2(inst.ensemble, inst.channel, Order(a), tol, opts), tol));
    }
  });
}

SuiteReport run_result3(const SuiteConfig& cfg) {
  return timed("result3", [&](SuiteReport& rep) {
    const int n = cfg.trials > 0 ? cfg.trials : 20;
    const double tol_meas = cfg.tol > 0 ? cfg.tol : 1e-6;
    const double tol_chan = cfg.tol > 0 ? cfg.tol : 1e-6;

    for (int i = 0; i < n; ++i) {
      std::uint64_t seed = cfg.seed + 3000 + i;
      RandomSource rs(seed);
      Ensemble e = random_ensemble(rs, 2, 2 + (i % 2));
      Povm m = random_povm(rs, 2, 2 + (i % 2));
      std::vector<Povm> free_povms = {random_povm(rs, 2, 2 + (i % 2)),
                                      random_povm(rs, 2, 2 + (i % 2)),
                                      Povm::uninformative(2, random_pmf_full_support(rs, 2 + (i % 2)))};
      ResultCheckOptions opts;
      opts.seed = seed;
      for (double a : {-2.0, -0.5, 0.5, 2.0})
        rep.add(entry_from_report(
            check_result3_measurement(e, m, free_povms, Order(a), tol_meas, opts), tol_meas));
    }

    // channel form with explicit free channels (nested measurement maxima)
    const int nc = std::max(2, n / 4);
    for (int i = 0; i < nc; ++i) {
      std::uint64_t seed = cfg.seed + 3500 + i;
      RandomSource rs(seed);
      Ensemble e = random_ensemble(rs, 2, 2);
      KrausChannel fixed = random_channel(rs, 2, 2);
      std::vector<KrausChannel> free_channels = {random_channel(rs, 2, 2),
                                                 KrausChannel::depolarizing(2, 1.0)};
      ResultCheckOptions opts;
      opts.seed = seed;
      opts.povm.num_starts = 8;
      opts.povm.max_iters = 150;
      opts.povm.outcomes = 3;
      for (double a : {2.0, -0.5})
        rep.add(entry_from_report(
            check_result3_channel(e, fixed, free_channels, Order(a), tol_chan, opts),
            tol_chan));
    }
  });
}

SuiteReport run_result4(const SuiteConfig& cfg) {
  return timed("result4", [&](SuiteReport& rep) {
    const int n = cfg.trials > 0 ? cfg.trials : 20;
    const double tol = cfg.tol > 0 ? cfg.tol : 1e-6;
    for (int i = 0; i < n; ++i) {
      std::uint64_t seed = cfg.seed + 4000 + i;
      RandomSource rs(seed);
      std::size_t k = 2 + (i % 2);
      std::vector<KrausChannel> channels;
      for (std::size_t c = 0; c < k; ++c) channels.push_back(random_channel(rs, 2, 2));
      Pmf prior = random_pmf_full_support(rs, k);
      DensityMatrix rho = random_state(rs, 2);
      Povm m = random_povm(rs, 2, 2 + (i % 2));
      std::vector<DensityMatrix> free_states = {random_state(rs, 2), random_state(rs, 2)};
      std::vector<Povm> free_povms = {random_povm(rs, 2, 2 + (i % 2)),
                                      Povm::uninformative(2, random_pmf_full_support(rs, 2 + (i % 2)))};
      ResultCheckOptions opts;
      opts.seed = seed;
      for (double a : {-2.0, -0.5, 0.5, 2.0}) {
        rep.add(entry_from_report(
            check_result4_state(channels, prior, rho, m, free_states, Order(a), tol, opts),
            tol));
        rep.add(entry_from_report(check_result4_pair(channels, prior, rho, m, free_states,
                                                     free_povms, Order(a), tol, opts),
                                  tol));
      }
    }
  });
}

SuiteReport run_result5(const SuiteConfig& cfg) {
  return timed("result5", [&](SuiteReport& rep) {
    const int n = cfg.trials > 0 ? cfg.trials : 100;
    const double tol = cfg.tol > 0 ? cfg.tol : 1e-8;
    RandomSource rs(cfg.seed + 5000);
    for (int i = 0; i < n; ++i) {
      JointPmf j = random_joint_pmf(rs, 2 + (i % 3), 2 + ((i / 3) % 3), true);
      ResultCheckOptions opts;
      opts.seed = cfg.seed + 5000 + i;
      for (double a : {-2.0, -0.5, 0.5, 1.0, 2.0})
        rep.add(entry_from_report(check_result5(j, Order(a), tol, opts), tol));
      // Corollary 7 anchor at alpha = 1: the gap is the Shannon MI
      ResultReport r1 = check_result5(j, Order(1.0), tol, opts);
      rep.add(make_entry("R5:shannon", 1.0, r1.lhs, arimoto_mi(j, Order(1.0)), 1e-12,
                         opts.seed));
    }
  });
}

SuiteReport run_result6(const SuiteConfig& cfg) {
  return timed("result6", [&](SuiteReport& rep) {
    const int n = cfg.trials > 0 ? cfg.trials : 30;
    const double tol = cfg.tol > 0 ? cfg.tol : 1e-6;
    const std::vector<double> orders = {-2.0, -0.5, 0.5, 1.0, 2.0, kInf, -kInf};
    for (int i = 0; i < n; ++i) {
      std::uint64_t seed = cfg.seed + 6000 + i;
      RandomSource rs(seed);
      StateSet s;
      std::size_t k = 2 + (i % 2);
      for (std::size_t c = 0; c < k; ++c) s.push_back(random_state(rs, 2));
      Povm m = random_povm(rs, 2, 2 + (i % 2));
      for (double a : orders) {
        Order ord(a);
        InformativenessOptions io;
        io.seed = seed;
        io.certify = false;
        InformativenessResult r = informativeness_measure(m, s, ord, io);
        rep.add(make_entry("R6:sion_gap", a, r.min_max, r.max_min, tol, seed));
        try {
          CapacityResult c = renyi_capacity(born_cond_pmf(m, s), ord);
          rep.add(make_entry("R6:capacity", a, r.value, c.value, tol, seed));
        } catch (const OptimizerDidNotConverge& exc) {
          rep.add(make_entry("R6:capacity", a, r.value, exc.best_value, tol, seed));
        }
      }
    }
  });
}

SuiteReport run_result7(const SuiteConfig& cfg) {
  return timed("result7", [&](SuiteReport& rep) {
    const int n_povms = cfg.trials > 0 ? cfg.trials : 500;
    const double tol_oracle = 1e-9;
    const double slack = 1e-6;

    // closed forms against the bisection-feasibility oracles, plus bounds
    RandomSource rs(cfg.seed + 7000);
    std::vector<Povm> qubit_pool;
    for (int i = 0; i < n_povms; ++i) {
      int d = 2 + (i % 3);
      std::size_t o = 2 + (i % 5);
      Povm m = random_povm(rs, d, o);
      double rob = robustness_informativeness(m);
      double wgt = weight_informativeness(m);
      rep.add(make_entry("R7:robustness_oracle", kInf, rob, robustness_bisection_oracle(m),
                         tol_oracle, cfg.seed + 7000 + i));
      rep.add(make_entry("R7:weight_oracle", -kInf, wgt, weight_bisection_oracle(m),
                         tol_oracle, cfg.seed + 7000 + i));
      rep.add(make_bound_entry("R7:weight_bound", -kInf, wgt, 1.0, 1e-12,
                               cfg.seed + 7000 + i));
      rep.add(make_bound_entry("R7:robustness_nonneg", kInf, -rob, 0.0, 1e-12,
                               cfg.seed + 7000 + i));
      if (d == 2 && qubit_pool.size() < 8) qubit_pool.push_back(m);

      // extreme-order monotonicity under random post-processings
      const int posts = 100;
      for (int t = 0; t < posts; ++t) {
        std::size_t out_sym = 2 + (rs.bits() % o);
        CondPmf post = random_cond_pmf(rs, o, out_sym, false);
        Povm sim = simulate_measurement(m, post);
        rep.add(make_bound_entry("R7:mono_rob", kInf, robustness_informativeness(sim), rob,
                                 slack, cfg.seed + 7000 + i));
        rep.add(make_bound_entry("R7:mono_wgt", -kInf, weight_informativeness(sim), wgt,
                                 slack, cfg.seed + 7000 + i));
      }
    }

    // finite orders: the full measure on a reduced POVM set
    std::vector<Povm> finite_povms = {Povm::computational_basis(2)};
    if (!qubit_pool.empty()) finite_povms.push_back(qubit_pool.front());
    if (qubit_pool.size() > 1) finite_povms.push_back(qubit_pool.back());
    int finite_trials = std::min(100, std::max(10, n_povms / 5));
    for (std::size_t pi = 0; pi < finite_povms.size(); ++pi) {
      MonotoneSuiteOptions mo;
      mo.seed = cfg.seed + 7700 + pi;
      mo.trials = finite_trials;
      mo.alphas = {-kInf, -2.0, -0.5, 0.5, 2.0, kInf};
      mo.slack = slack;
      mo.measure.num_starts = 2;
      mo.measure.max_iters = 40;
      MonotoneSuiteReport mr = monotone_suite(finite_povms[pi], mo);
      for (const auto& t : mr.trials) {
        if (t.trial < 0) {
          // probe outcome: measure non-negative, and zero iff uninformative
          CheckEntry e;
          e.name = "R7:faithfulness";
          e.alpha = t.alpha;
          e.lhs = t.original;
          e.rhs = 0.0;
          e.pass = t.pass && t.original >= -1e-12;
          e.err = e.pass ? 0.0 : std::abs(t.original);
          e.tol = 1e-6;
          e.seed = mo.seed;
          rep.add(e);
        } else {
          rep.add(make_bound_entry("R7:mono_alpha", t.alpha, t.simulated, t.original, slack,
                                   mo.seed));
        }
      }
    }

    // faithfulness: uninformative POVMs score exactly zero across the sweep
    Povm flat = Povm::uninformative(2, Pmf({0.35, 0.65}));
    for (double a : {-kInf, -2.0, 0.5, kInf}) {
      AlphaMeasureOptions ao;
      ao.seed = cfg.seed;
      ao.num_starts = 3;
      ao.max_iters = 50;
      rep.add(make_entry("R7:faithful_zero", a, alpha_measure(flat, Order(a), ao).value, 0.0,
                         1e-6, cfg.seed));
    }
  });
}

SuiteReport run_lemmas(const SuiteConfig& cfg) {
  return timed("lemmas", [&](SuiteReport& rep) {
    const int n = cfg.trials > 0 ? cfg.trials : 500;
    const double slack = cfg.tol > 0 ? cfg.tol : 1e-9;
    RandomSource rs(cfg.seed + 8000);

    const std::vector<double> neg = {-kInf, -4.0, -1.0, -0.25, 0.0};
    const std::vector<double> mid = {0.0, 0.25, 0.5, 0.75, 1.0};
    const std::vector<double> high = {1.0, 1.5, 3.0, 8.0, kInf};

    for (int i = 0; i < n; ++i) {
      CondPmf pc = random_cond_pmf(rs, 3, 3);
      CondPmf qc = random_cond_pmf(rs, 3, 3);
      Pmf px = random_pmf_full_support(rs, 3);
      auto d = [&](CrdVariant v, double a) { return cond_renyi_div(v, pc, qc, px, Order(a)); };
      for (double a : neg) {
        rep.add(make_bound_entry("L1:blp<=c", a, d(CrdVariant::BLP, a), d(CrdVariant::CSISZAR, a),
                                 slack, cfg.seed + 8000 + i));
        rep.add(make_bound_entry("L1:c<=s", a, d(CrdVariant::CSISZAR, a), d(CrdVariant::SIBSON, a),
                                 slack, cfg.seed + 8000 + i));
      }
      for (double a : mid) {
        rep.add(make_bound_entry("L1:blp<=s", a, d(CrdVariant::BLP, a), d(CrdVariant::SIBSON, a),
                                 slack, cfg.seed + 8000 + i));
        rep.add(make_bound_entry("L1:s<=c", a, d(CrdVariant::SIBSON, a), d(CrdVariant::CSISZAR, a),
                                 slack, cfg.seed + 8000 + i));
      }
      for (double a : high) {
        rep.add(make_bound_entry("L1:c<=blp", a, d(CrdVariant::CSISZAR, a), d(CrdVariant::BLP, a),
                                 slack, cfg.seed + 8000 + i));
        rep.add(make_bound_entry("L1:blp<=s", a, d(CrdVariant::BLP, a), d(CrdVariant::SIBSON, a),
                                 slack, cfg.seed + 8000 + i));
      }

      // Sibson q* identity at negative orders
      Pmf probe = random_pmf_full_support(rs, 3);
      for (double a : {-4.0, -1.0, -0.25}) {
        Order ord(a);
        auto qstar = sibson_optimal_output(pc, px, ord);
        if (!qstar) continue;
        double lhs = cond_renyi_div(CrdVariant::SIBSON, pc, broadcast_row(probe, 3), px, ord);
        double rhs = cond_renyi_div(CrdVariant::SIBSON, pc, broadcast_row(*qstar, 3), px, ord) +
                     renyi_div(*qstar, probe, ord);
        rep.add(make_entry("A:qstar_identity", a, lhs, rhs, 1e-9, cfg.seed + 8000 + i));
      }
    }

    // Lemma 2 orderings for the mutual informations (numeric minimisers)
    const int n_mi = n;
    for (int i = 0; i < n_mi; ++i) {
      JointPmf j = random_joint_pmf(rs, 3, 3, true);
      VariantMiOptions mo;
      mo.seed = cfg.seed + 8100 + i;
      auto mi = [&](CrdVariant v, double a) { return variant_mi(v, j, Order(a), mo); };
      for (double a : {-kInf, -4.0, -1.0, -0.25}) {
        rep.add(make_bound_entry("L2:blp<=c", a, mi(CrdVariant::BLP, a),
                                 mi(CrdVariant::CSISZAR, a), slack, mo.seed));
        rep.add(make_bound_entry("L2:c<=s", a, mi(CrdVariant::CSISZAR, a),
                                 mi(CrdVariant::SIBSON, a), slack, mo.seed));
      }
      for (double a : {0.25, 0.5, 0.75}) {
        rep.add(make_bound_entry("L2:blp<=s", a, mi(CrdVariant::BLP, a),
                                 mi(CrdVariant::SIBSON, a), slack, mo.seed));
        rep.add(make_bound_entry("L2:s<=c", a, mi(CrdVariant::SIBSON, a),
                                 mi(CrdVariant::CSISZAR, a), slack, mo.seed));
      }
      for (double a : {1.5, 3.0, 8.0, kInf}) {
        rep.add(make_bound_entry("L2:c<=blp", a, mi(CrdVariant::CSISZAR, a),
                                 mi(CrdVariant::BLP, a), slack, mo.seed));
        rep.add(make_bound_entry("L2:blp<=s", a, mi(CrdVariant::BLP, a),
                                 mi(CrdVariant::SIBSON, a), slack, mo.seed));
      }
    }

  });
}

SuiteReport run_capacity_equality(const SuiteConfig& cfg) {
  return timed("capacity", [&](SuiteReport& rep) {
    const int n = cfg.trials > 0 ? cfg.trials : 50;
    const double tol = cfg.tol > 0 ? cfg.tol : 1e-6;
    RandomSource rs(cfg.seed + 8200);
    for (int i = 0; i < n; ++i) {
      CondPmf ch = random_cond_pmf(rs, 2 + (i % 3), 2 + ((i / 3) % 3));
      for (double a : {-4.0, -2.0, -0.5, 0.5, 1.0, 2.0, 4.0, kInf, -kInf}) {
        CapacityOptions co;
        co.seed = cfg.seed + 8200 + i;
        co.check_agreement = false;
        CapacityResult c = renyi_capacity(ch, Order(a), co);
        rep.add(make_entry("L3:capacity", a, c.arimoto_value, c.sibson_value, tol, co.seed));
      }
    }
  });
}

SuiteReport run_betting(const SuiteConfig& cfg) {
  return timed("betting", [&](SuiteReport& rep) {
    const int n = cfg.trials > 0 ? cfg.trials : 500;
    RandomSource rs(cfg.seed + 9000);

    // Theorems 1-2: three-term decomposition sums to the log-ICE
    for (int i = 0; i < n; ++i) {
      bool si = i % 2;  // alternate between plain and side-information games
      bool loss = (i / 2) % 2;
      std::vector<double> ov(3);
      for (double& x : ov) x = (0.5 + 2.0 * rs.uniform()) * (loss ? -1.0 : 1.0);
      Odds o(ov);
      for (double r : {-3.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0}) {
        RiskParam R(r);
        if (si) {
          JointPmf j = random_joint_pmf(rs, 3, 2, true);
          CondPmf b = random_cond_pmf(rs, 2, 3, true);
          BlpDecomposition d = blp_decomposition(b, o, j, R);
          rep.add(make_entry("B:thm2_sum", 1.0 / r, d.sum(), log_ice(b, o, j, R), 1e-9,
                             cfg.seed + 9000 + i));
          CondPmf h = optimal_strategy(o, j, R);
          BlpDecomposition dh = blp_decomposition(h, o, j, R);
          rep.add(make_bound_entry("B:thm2_opt_term", 1.0 / r,
                                   std::abs(dh.term_div_strategy), 0.0, 1e-10,
                                   cfg.seed + 9000 + i));
        } else {
          Pmf p = random_pmf_full_support(rs, 3);
          Pmf b = random_pmf_full_support(rs, 3, 0.02);
          BlpDecomposition d = blp_decomposition(b, o, p, R);
          rep.add(make_entry("B:thm1_sum", 1.0 / r, d.sum(), log_ice(b, o, p, R), 1e-9,
                             cfg.seed + 9000 + i));
          Pmf h = optimal_strategy(o, p, R);
          BlpDecomposition dh = blp_decomposition(h, o, p, R);
          rep.add(make_bound_entry("B:thm1_opt_term", 1.0 / r,
                                   std::abs(dh.term_div_strategy), 0.0, 1e-10,
                                   cfg.seed + 9000 + i));
        }
      }
    }

    // Lemmas 4-5: operational form of the Renyi quantities
    const int n_ops = std::max(20, n / 5);
    for (int i = 0; i < n_ops; ++i) {
      Pmf p = random_pmf_full_support(rs, 4);
      JointPmf j = random_joint_pmf(rs, 3, 3, true);
      for (double a : {-8.0, -2.0, -0.5, 0.5, 2.0, 8.0}) {
        Order ord(a);
        RiskParam r(ord.risk());
        double c = 1.0 + rs.uniform();
        Odds o4 = Odds::constant(4, sgn(a) * c);
        double lhs = ice(optimal_strategy(o4, p, r), o4, p, r).value;
        rep.add(make_entry("B:lemma4", a, lhs, sgn(a) * c * renyi_probability(p, ord), 1e-9,
                           cfg.seed + 9000 + i));
        Odds o3 = Odds::constant(3, sgn(a) * c);
        double lhs_si = ice(optimal_strategy(o3, j, r), o3, j, r).value;
        rep.add(make_entry("B:lemma5", a, lhs_si,
                           sgn(a) * c * cond_renyi_probability(j, ord), 1e-9,
                           cfg.seed + 9000 + i));
      }
    }

    // numeric optimiser vs closed form on matched-quadrant games
    const int n_num = std::max(20, n * 2 / 5);
    for (int i = 0; i < n_num; ++i) {
      JointPmf j = random_joint_pmf(rs, 3, 2, true);
      bool loss = i % 2;
      std::vector<double> ov(3);
      for (double& x : ov) x = (0.5 + 2.0 * rs.uniform()) * (loss ? -1.0 : 1.0);
      Odds o(ov);
      NumericIceOptions no;
      no.seed = cfg.seed + 9500 + i;
      std::vector<double> risks = loss ? std::vector<double>{-2.0, -0.5}
                                       : std::vector<double>{0.5, 1.0, 2.0};
      for (double r : risks) {
        RiskParam R(r);
        double closed = ice(optimal_strategy(o, j, R), o, j, R).value;
        NumericIceResultSi num = numeric_optimal_ice(o, j, R, no);
        rep.add(make_entry("B:numeric_vs_closed", 1.0 / r, num.ice.value, closed, 1e-6,
                           no.seed));
      }
    }
  });
}

SweepTable sweep_isoelastic(const std::vector<double>& risks, double wmin, double wmax,
                            int steps) {
  SweepTable t;
  t.header = {"risk", "w", "utility"};
  for (double r : risks) {
    for (int i = 0; i <= steps; ++i) {
      double w = wmin + (wmax - wmin) * i / steps;
      t.rows.push_back({r, w, isoelastic_utility(w, RiskParam(r))});
    }
  }
  return t;
}

SweepTable sweep_ice_vs_alpha(std::uint64_t seed, const std::vector<double>& alphas) {
  SweepTable t;
  t.header = {"alpha",       "odds_sign",   "qsb_value",
              "free_value",  "ratio_log2",  "arimoto_mi"};
  RandomInstance inst = random_instance(seed, 2, 3, 3, 2);
  for (double a : alphas) {
    if (a == 0.0) continue;
    Order ord(a);
    QsbGame game(Odds::constant(inst.ensemble.size(), sgn(a) * 1.0), inst.ensemble);
    double v = qsb_value(game, inst.povm, ord);
    double f = best_free_qsb_value(game, FreeSet::uninformative_measurements(), ord);
    double ratio = sgn(a) * std::log2(v / f);
    t.rows.push_back({a, static_cast<double>(sgn(a)), v, f, ratio,
                      arimoto_mi_quantum(inst.ensemble, inst.povm, ord)});
  }
  return t;
}

SweepTable sweep_gap_vs_alpha(std::uint64_t seed, const std::vector<double>& alphas) {
  SweepTable t;
  t.header = {"alpha", "gap"};
  RandomInstance inst = random_instance(seed, 2, 3, 3, 2);
  for (double a : alphas) {
    if (a == 0.0) continue;
    double g = arimoto_gap_measurement(inst.ensemble, inst.povm,
                                       FreeSet::uninformative_measurements(), Order(a));
    t.rows.push_back({a, g});
  }
  return t;
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out << ',';
    out << table.header[i];
  }
  out << "\r\n";
  out.precision(17);
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << "\r\n";
  }
  return out.str();
}

SuiteReport run_figures(const SuiteConfig& cfg) {
  return timed("figures", [&](SuiteReport& rep) {
    // isoelastic curvature regimes via discrete second differences
    for (double r : {-1.0, 0.0, 0.5, 2.0}) {
      SweepTable t = sweep_isoelastic({r}, 1.0, 3.0, 100);
      double worst = 0.0;
      bool ok = true;
      for (std::size_t i = 2; i < t.rows.size(); ++i) {
        double dd = t.rows[i][2] - 2.0 * t.rows[i - 1][2] + t.rows[i - 2][2];
        if (r == 0.0) {
          ok = ok && std::abs(dd) <= 1e-12;
          worst = std::max(worst, std::abs(dd));
        } else if (r > 0.0) {
          ok = ok && dd < 0.0;
        } else {
          ok = ok && dd > 0.0;
        }
      }
      CheckEntry e;
      e.name = "F1:curvature";
      e.alpha = r;
      e.lhs = worst;
      e.rhs = 0.0;
      e.err = worst;
      e.tol = 1e-12;
      e.pass = ok;
      e.seed = cfg.seed;
      rep.add(e);
    }

    // regime flip at alpha = 0: the game value carries the odds sign
    std::vector<double> alphas;
    for (double a : {8.0, 4.0, 2.0, 1.0, 0.5, 0.25})
      alphas.push_back(a);
    for (double a : {-0.25, -0.5, -1.0, -2.0, -4.0, -8.0})
      alphas.push_back(a);
    SweepTable t = sweep_ice_vs_alpha(cfg.seed, alphas);
    for (const auto& row : t.rows) {
      CheckEntry e;
      e.name = "F2:sign_flip";
      e.alpha = row[0];
      e.lhs = sgn(row[2]);
      e.rhs = row[1];
      e.err = std::abs(e.lhs - e.rhs);
      e.tol = 0.0;
      e.pass = e.err == 0.0;
      e.seed = cfg.seed;
      rep.add(e);
      // the advantage ratio is a non-negative information quantity
      rep.add(make_bound_entry("F2:ratio_nonneg", row[0], -row[4], 0.0, 1e-9, cfg.seed));
    }
  });
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "result1") return run_result1(cfg);
  if (name == "result2") return run_result2(cfg);
  if (name == "result3") return run_result3(cfg);
  if (name == "result4") return run_result4(cfg);
  if (name == "result5") return run_result5(cfg);
  if (name == "result6") return run_result6(cfg);
  if (name == "result7") return run_result7(cfg);
  if (name == "corollaries23") return run_corollaries23(cfg);
  if (name == "lemmas") return run_lemmas(cfg);
  if (name == "capacity") return run_capacity_equality(cfg);
  if (name == "betting") return run_betting(cfg);
  if (name == "figures") return run_figures(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::string> suite_names() {
  return {"result1", "result2",       "result3", "result4",  "result5", "result6",
          "result7", "corollaries23", "lemmas",  "capacity", "betting", "figures"};
}

}  // namespace qbet::suites
