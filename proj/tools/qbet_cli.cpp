// qbet command-line harness: compute quantities, run verification suites,
// and emit sweep data. Exit codes: 0 success, 1 verification failure,
// 2 input/validation error, 3 optimizer non-convergence.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "qbet/entropy.hpp"
#include "qbet/games.hpp"
#include "qbet/random_instances.hpp"
#include "qbet/resource.hpp"
#include "qbet/serialization.hpp"
#include "verify_suites.hpp"

namespace {

using namespace qbet;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitConvergence = 3;

Json load_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '{' || std::isdigit(arg.front()) ||
                       arg.front() == '-' || arg.front() == '"'))
    return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open input file: " + arg);
  Json j;
  in >> j;
  return j;
}

Order parse_order(const std::string& s) {
  if (s == "inf" || s == "+inf") return Order::pos_inf();
  if (s == "-inf") return Order::neg_inf();
  return Order(std::stod(s));
}

std::vector<Order> parse_orders(const std::vector<std::string>& alphas,
                                const std::vector<std::string>& risks) {
  if (!alphas.empty() && !risks.empty())
    throw std::invalid_argument("--alpha and --risk are mutually exclusive");
  std::vector<Order> out;
  for (const auto& s : alphas) out.push_back(parse_order(s));
  for (const auto& s : risks) {
    if (s == "inf" || s == "+inf")
      out.push_back(Order::from_risk(kInf));
    else if (s == "-inf")
      out.push_back(Order::from_risk(-kInf));
    else
      out.push_back(Order::from_risk(std::stod(s)));
  }
  return out;
}

CrdVariant parse_variant(const std::string& s) {
  if (s == "S" || s == "sibson") return CrdVariant::SIBSON;
  if (s == "C" || s == "csiszar") return CrdVariant::CSISZAR;
  if (s == "BLP" || s == "blp") return CrdVariant::BLP;
  throw std::invalid_argument("variant must be one of S, C, BLP");
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    out << text << "\n";
  }
}

struct ComputeArgs {
  std::string quantity;
  std::vector<std::string> alpha;
  std::vector<std::string> risk;
  std::string pmf, pmf2, joint, pgx, qgx, px, variant;
  std::string channel, state, povm, povm2, post, states, ensemble, channels, prior, game,
      strategy, free_povms;
  double odds_c = 1.0;
  double w = 0.0;
  double tol = 1e-9;
  std::optional<std::uint64_t> seed;
  int trials = 20;
  std::string out;
};

std::uint64_t require_seed(const ComputeArgs& a) {
  if (!a.seed) throw std::invalid_argument("--seed is required for randomized commands");
  return *a.seed;
}

StateSet states_from_json(const Json& j) {
  StateSet s;
  for (const auto& st : j) s.push_back(state_from_json(st));
  return s;
}

GameSpec load_game(const ComputeArgs& a) {
  if (a.game.empty()) throw std::invalid_argument("--game is required");
  return game_spec_from_json(load_json_arg(a.game));
}

Json run_compute(const ComputeArgs& a) {
  const std::string& q = a.quantity;
  std::vector<Order> orders = parse_orders(a.alpha, a.risk);
  auto one_order = [&]() -> Order {
    if (orders.size() != 1)
      throw std::invalid_argument("exactly one --alpha (or --risk) expected");
    return orders.front();
  };
  Json out;
  out["quantity"] = q;

  if (q == "sgn") {
    out["value"] = sgn(a.w);
  } else if (q == "renyi-entropy" || q == "renyi-probability") {
    Pmf p = pmf_from_json(load_json_arg(a.pmf));
    Json vals = Json::array();
    for (const Order& ord : orders)
      vals.push_back(Json{{"alpha", order_to_json(ord)},
                          {"value", q == "renyi-entropy" ? renyi_entropy(p, ord)
                                                         : renyi_probability(p, ord)}});
    out["values"] = vals;
    if (orders.size() == 1) out["value"] = vals[0]["value"];
  } else if (q == "arimoto-cond-entropy" || q == "cond-renyi-probability" ||
             q == "arimoto-mi") {
    JointPmf j = joint_from_json(load_json_arg(a.joint));
    Json vals = Json::array();
    for (const Order& ord : orders) {
      double v = q == "arimoto-mi" ? arimoto_mi(j, ord)
                 : q == "arimoto-cond-entropy" ? arimoto_cond_entropy(j, ord)
                                               : cond_renyi_probability(j, ord);
      vals.push_back(Json{{"alpha", order_to_json(ord)}, {"value", v}});
    }
    out["values"] = vals;
    if (orders.size() == 1) out["value"] = vals[0]["value"];
  } else if (q == "renyi-div") {
    Pmf p = pmf_from_json(load_json_arg(a.pmf));
    Pmf qq = pmf_from_json(load_json_arg(a.pmf2));
    out["value"] = renyi_div(p, qq, one_order());
  } else if (q == "cond-renyi-div") {
    CondPmf pgx = cond_pmf_from_json(load_json_arg(a.pgx));
    CondPmf qgx = cond_pmf_from_json(load_json_arg(a.qgx));
    Pmf px = pmf_from_json(load_json_arg(a.px));
    out["value"] = cond_renyi_div(parse_variant(a.variant), pgx, qgx, px, one_order());
  } else if (q == "variant-mi") {
    JointPmf j = joint_from_json(load_json_arg(a.joint));
    VariantMiOptions opts;
    opts.seed = a.seed.value_or(0);
    out["value"] = variant_mi(parse_variant(a.variant), j, one_order(), opts);
  } else if (q == "capacity") {
    CondPmf ch = cond_pmf_from_json(load_json_arg(a.channel));
    CapacityOptions opts;
    opts.seed = require_seed(a);
    CapacityResult c = renyi_capacity(ch, one_order(), opts);
    out["value"] = c.value;
    out["achiever"] = pmf_to_json(c.input);
    out["arimoto_value"] = c.arimoto_value;
    out["sibson_value"] = c.sibson_value;
  } else if (q == "born") {
    Povm m = povm_from_json(load_json_arg(a.povm));
    out["value"] = cond_pmf_to_json(born_cond_pmf(m, states_from_json(load_json_arg(a.states))));
  } else if (q == "apply-channel") {
    KrausChannel n = channel_from_json(load_json_arg(a.channel));
    out["value"] = state_to_json(apply_channel(n, state_from_json(load_json_arg(a.state))));
  } else if (q == "adjoint-povm") {
    KrausChannel n = channel_from_json(load_json_arg(a.channel));
    out["value"] = povm_to_json(adjoint_apply(n, povm_from_json(load_json_arg(a.povm))));
  } else if (q == "uninformative") {
    UninformativeWitness w = is_uninformative(povm_from_json(load_json_arg(a.povm)), a.tol);
    out["value"] = w.uninformative;
    out["witness_q"] = pmf_to_json(w.q);
  } else if (q == "simulate") {
    Povm m = povm_from_json(load_json_arg(a.povm));
    CondPmf post = cond_pmf_from_json(load_json_arg(a.post));
    out["value"] = povm_to_json(simulate_measurement(m, post));
  } else if (q == "ice" || q == "log-ice" || q == "optimal-strategy" ||
             q == "blp-decomposition" || q == "numeric-optimal-ice") {
    GameSpec g = load_game(a);
    RiskParam R = g.risk;
    if (orders.size() == 1) R = RiskParam(orders.front().risk());
    if (q == "numeric-optimal-ice") {
      NumericIceOptions opts;
      opts.seed = require_seed(a);
      if (g.joint) {
        NumericIceResultSi r = numeric_optimal_ice(g.odds, *g.joint, R, opts);
        out["value"] = r.ice.value;
        out["boundary"] = r.ice.boundary;
        out["log_ice"] = r.log_ice;
        out["strategy"] = cond_pmf_to_json(r.strategy);
      } else {
        NumericIceResult r = numeric_optimal_ice(g.odds, g.prior, R, opts);
        out["value"] = r.ice.value;
        out["boundary"] = r.ice.boundary;
        out["log_ice"] = r.log_ice;
        out["strategy"] = pmf_to_json(r.strategy);
      }
    } else if (q == "optimal-strategy") {
      if (g.joint)
        out["value"] = cond_pmf_to_json(optimal_strategy(g.odds, *g.joint, R));
      else
        out["value"] = pmf_to_json(optimal_strategy(g.odds, g.prior, R));
    } else {
      // the remaining three need an explicit strategy
      if (a.strategy.empty()) throw std::invalid_argument("--strategy is required");
      Json bs = load_json_arg(a.strategy);
      if (g.joint) {
        CondPmf b = cond_pmf_from_json(bs);
        if (q == "ice") {
          IceValue v = ice(b, g.odds, *g.joint, R);
          out["value"] = v.value;
          out["boundary"] = v.boundary;
        } else if (q == "log-ice") {
          out["value"] = log_ice(b, g.odds, *g.joint, R);
        } else {
          BlpDecomposition d = blp_decomposition(b, g.odds, *g.joint, R);
          out["term_const"] = d.term_const;
          out["term_div_prior"] = d.term_div_prior;
          out["term_div_strategy"] = d.term_div_strategy;
          out["value"] = d.sum();
        }
      } else {
        Pmf b = pmf_from_json(bs);
        if (q == "ice") {
          IceValue v = ice(b, g.odds, g.prior, R);
          out["value"] = v.value;
          out["boundary"] = v.boundary;
        } else if (q == "log-ice") {
          out["value"] = log_ice(b, g.odds, g.prior, R);
        } else {
          BlpDecomposition d = blp_decomposition(b, g.odds, g.prior, R);
          out["term_const"] = d.term_const;
          out["term_div_prior"] = d.term_div_prior;
          out["term_div_strategy"] = d.term_div_strategy;
          out["value"] = d.sum();
        }
      }
    }
  } else if (q == "qsb-value" || q == "nqsb-value") {
    Ensemble e = ensemble_from_json(load_json_arg(a.ensemble));
    Povm m = povm_from_json(load_json_arg(a.povm));
    Order ord = one_order();
    QsbGame game(Odds::constant(e.size(), sgn(ord.value()) * a.odds_c), e);
    if (q == "qsb-value") {
      out["value"] = qsb_value(game, m, ord);
    } else {
      KrausChannel n = channel_from_json(load_json_arg(a.channel));
      out["value"] = nqsb_value(game, m, n, ord);
    }
  } else if (q == "qcb-value") {
    std::vector<KrausChannel> chs;
    for (const auto& cj : load_json_arg(a.channels)) chs.push_back(channel_from_json(cj));
    Pmf prior = pmf_from_json(load_json_arg(a.prior));
    DensityMatrix rho = state_from_json(load_json_arg(a.state));
    Povm m = povm_from_json(load_json_arg(a.povm));
    Order ord = one_order();
    out["value"] = qcb_value(Odds::constant(prior.size(), sgn(ord.value()) * a.odds_c), prior,
                             chs, rho, m, ord);
  } else if (q == "discrimination") {
    Ensemble e = ensemble_from_json(load_json_arg(a.ensemble));
    Povm m = povm_from_json(load_json_arg(a.povm));
    DiscriminationExclusion d = discrimination_exclusion(e, m);
    out["p_succ_qsd"] = d.p_succ_qsd;
    out["p_err_qse"] = d.p_err_qse;
  } else if (q == "arimoto-gap") {
    Ensemble e = ensemble_from_json(load_json_arg(a.ensemble));
    Povm m = povm_from_json(load_json_arg(a.povm));
    FreeSet fs = FreeSet::uninformative_measurements();
    if (!a.free_povms.empty()) {
      std::vector<Povm> frees;
      for (const auto& pj : load_json_arg(a.free_povms)) frees.push_back(povm_from_json(pj));
      fs = FreeSet::explicit_measurements(std::move(frees));
    }
    out["value"] = arimoto_gap_measurement(e, m, fs, one_order());
  } else if (q == "robustness" || q == "weight") {
    Povm m = povm_from_json(load_json_arg(a.povm));
    bool rob = q == "robustness";
    double closed = rob ? robustness_informativeness(m) : weight_informativeness(m);
    double oracle = rob ? robustness_bisection_oracle(m) : weight_bisection_oracle(m);
    MonotoneReport r;
    r.measure = q;
    r.value = closed;
    r.method = MonotoneMethod::CLOSED_FORM;
    // mixing witness: the uninformative target distribution
    std::vector<double> wq(m.num_outcomes());
    for (std::size_t i = 0; i < m.num_outcomes(); ++i)
      wq[i] = rob ? std::max(max_eigenvalue(m.element(i)), 0.0) / (1.0 + closed)
                  : (closed < 1.0
                         ? std::max(min_eigenvalue(m.element(i)), 0.0) / (1.0 - closed)
                         : 1.0 / m.num_outcomes());
    r.witness_pmf = Pmf::normalized(wq);
    out = monotone_report_to_json(r);
    out["quantity"] = q;
    out["bisection_oracle"] = oracle;
  } else if (q == "measured-sibson") {
    Povm m = povm_from_json(load_json_arg(a.povm));
    Povm n = povm_from_json(load_json_arg(a.povm2));
    StateSet s = states_from_json(load_json_arg(a.states));
    MeasuredDivOptions opts;
    opts.seed = require_seed(a);
    out["value"] = measured_sibson_div(m, n, s, one_order(), opts);
  } else if (q == "informativeness") {
    Povm m = povm_from_json(load_json_arg(a.povm));
    StateSet s = states_from_json(load_json_arg(a.states));
    InformativenessOptions opts;
    opts.seed = require_seed(a);
    InformativenessResult r = informativeness_measure(m, s, one_order(), opts);
    out["value"] = r.value;
    out["min_max"] = r.min_max;
    out["max_min"] = r.max_min;
    out["witness_q"] = pmf_to_json(r.witness_q);
    out["witness_p"] = pmf_to_json(r.witness_p);
  } else if (q == "alpha-measure") {
    Povm m = povm_from_json(load_json_arg(a.povm));
    AlphaMeasureOptions opts;
    opts.seed = require_seed(a);
    AlphaMeasureResult r = alpha_measure(m, one_order(), opts);
    MonotoneReport mr;
    mr.measure = "alpha-measure";
    mr.value = r.value;
    mr.method = one_order().is_finite() ? MonotoneMethod::MINIMAX : MonotoneMethod::CLOSED_FORM;
    if (!r.witness.empty()) mr.witness_states = r.witness;
    out = monotone_report_to_json(mr);
    out["quantity"] = q;
    out["e_alpha"] = r.e_alpha;
  } else if (q == "monotone-suite") {
    Povm m = povm_from_json(load_json_arg(a.povm));
    MonotoneSuiteOptions opts;
    opts.seed = require_seed(a);
    opts.trials = a.trials;
    MonotoneSuiteReport r = monotone_suite(m, opts);
    out["all_pass"] = r.all_pass;
    Json trials = Json::array();
    for (const auto& t : r.trials)
      trials.push_back(Json{{"alpha", order_to_json(Order(t.alpha))},
                            {"trial", t.trial},
                            {"simulated", t.simulated},
                            {"original", t.original},
                            {"pass", t.pass}});
    out["trials"] = trials;
  } else {
    throw std::invalid_argument("unknown quantity: " + q);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum betting tasks, Renyi information measures, and resource monotones"};
  app.require_subcommand(1);

  ComputeArgs args;
  CLI::App* compute = app.add_subcommand("compute", "evaluate a registered quantity");
  compute->add_option("quantity", args.quantity, "quantity name")->required();
  compute->add_option("--alpha", args.alpha, "order alpha (number, inf, -inf); repeatable");
  compute->add_option("--risk", args.risk, "risk R = 1/alpha; exclusive with --alpha");
  compute->add_option("--pmf,--p", args.pmf, "PMF as JSON array or file");
  compute->add_option("--pmf2,--q", args.pmf2, "second PMF");
  compute->add_option("--joint", args.joint, "joint PMF rows (x-major)");
  compute->add_option("--pgx", args.pgx, "conditional p(g|x) rows");
  compute->add_option("--qgx", args.qgx, "conditional q(g|x) rows");
  compute->add_option("--px", args.px, "input PMF");
  compute->add_option("--variant", args.variant, "conditional divergence variant: S|C|BLP");
  compute->add_option("--channel", args.channel, "channel (Kraus JSON) or classical rows");
  compute->add_option("--channels", args.channels, "list of Kraus channels");
  compute->add_option("--state", args.state, "density matrix");
  compute->add_option("--states", args.states, "list of density matrices");
  compute->add_option("--povm", args.povm, "POVM (list of matrices)");
  compute->add_option("--povm2", args.povm2, "second POVM");
  compute->add_option("--post", args.post, "classical post-processing rows");
  compute->add_option("--ensemble", args.ensemble, "{states, probs}");
  compute->add_option("--prior", args.prior, "prior PMF");
  compute->add_option("--game", args.game, "GameSpec JSON");
  compute->add_option("--strategy", args.strategy, "betting strategy");
  compute->add_option("--free-povms", args.free_povms, "explicit free measurement list");
  compute->add_option("--odds-c", args.odds_c, "constant odds magnitude C");
  compute->add_option("--w", args.w, "scalar argument");
  compute->add_option("--tol", args.tol, "tolerance");
  compute->add_option("--seed", args.seed, "RNG seed (mandatory for randomized quantities)");
  compute->add_option("--trials", args.trials, "trial count");
  compute->add_option("--out", args.out, "write JSON here instead of stdout");

  std::string suite_name;
  std::uint64_t verify_seed = 0;
  bool have_seed = false;
  int verify_trials = 0;
  double verify_tol = 0.0;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name, "result1..result7, corollaries23, lemmas, betting, figures, all")
      ->required();
  verify->add_option("--seed", verify_seed, "RNG seed (mandatory)")
      ->each([&](const std::string&) { have_seed = true; });
  verify->add_option("--trials", verify_trials, "override instance count");
  verify->add_option("--tol", verify_tol, "override tolerance");
  verify->add_option("--out", verify_out, "write the JSON report here");

  std::string curve, sweep_out;
  std::vector<std::string> sweep_alpha;
  std::vector<double> sweep_risk;
  double wmin = 1.0, wmax = 3.0;
  int steps = 100;
  std::uint64_t sweep_seed = 0;
  bool have_sweep_seed = false;
  std::string sweep_format = "csv";
  CLI::App* sweep = app.add_subcommand("sweep", "emit figure-style curve data");
  sweep->add_option("curve", curve, "isoelastic-utility | ice-vs-alpha | gap-vs-alpha")
      ->required();
  sweep->add_option("--risk", sweep_risk, "risk values for isoelastic-utility");
  sweep->add_option("--alpha", sweep_alpha, "alpha grid for the game curves");
  sweep->add_option("--wmin", wmin, "wealth grid start");
  sweep->add_option("--wmax", wmax, "wealth grid end");
  sweep->add_option("--steps", steps, "grid steps");
  sweep->add_option("--seed", sweep_seed, "instance seed for the game curves")
      ->each([&](const std::string&) { have_sweep_seed = true; });
  sweep->add_option("--format", sweep_format, "csv (default) or json");
  sweep->add_option("--out", sweep_out, "write here instead of stdout");

  std::uint64_t gen_seed = 0;
  bool have_gen_seed = false;
  int gen_dim = 2;
  std::size_t gen_states = 3, gen_outcomes = 3, gen_kraus = 2;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "emit a random instance as JSON");
  gen->add_option("--seed", gen_seed, "RNG seed (mandatory)")
      ->each([&](const std::string&) { have_gen_seed = true; });
  gen->add_option("--dim", gen_dim, "Hilbert space dimension (<= 4)");
  gen->add_option("--states", gen_states, "ensemble size (<= 6)");
  gen->add_option("--outcomes", gen_outcomes, "POVM outcomes (<= 6)");
  gen->add_option("--kraus", gen_kraus, "Kraus rank (<= 6)");
  gen->add_option("--out", gen_out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute) {
      emit(run_compute(args), args.out);
      return kExitOk;
    }
    if (*verify) {
      if (!have_seed) {
        std::cerr << "error: --seed is mandatory for verify\n";
        return kExitInput;
      }
      suites::SuiteConfig cfg;
      cfg.seed = verify_seed;
      cfg.trials = verify_trials;
      cfg.tol = verify_tol;
      Json report = Json::array();
      bool all = true;
      std::vector<std::string> names =
          suite_name == "all" ? suites::suite_names() : std::vector<std::string>{suite_name};
      for (const auto& name : names) {
        suites::SuiteReport r = suites::run_suite(name, cfg);
        all = all && r.all_pass;
        report.push_back(r.to_json());
        std::cerr << (r.all_pass ? "[pass] " : "[FAIL] ") << name << "  checks=" << r.checks.size()
                  << "  max_err=" << r.max_err << "  t=" << r.seconds << "s\n";
      }
      emit(report, verify_out);
      return all ? kExitOk : kExitVerifyFail;
    }
    if (*sweep) {
      suites::SweepTable table;
      if (curve == "isoelastic-utility") {
        if (sweep_risk.empty()) sweep_risk = {-1.0, 0.0, 0.5, 1.0, 2.0};
        table = suites::sweep_isoelastic(sweep_risk, wmin, wmax, steps);
      } else {
        if (!have_sweep_seed) {
          std::cerr << "error: --seed is mandatory for the game curves\n";
          return kExitInput;
        }
        std::vector<double> alphas;
        for (const auto& s : sweep_alpha) alphas.push_back(parse_order(s).value());
        if (alphas.empty())
          alphas = {8.0, 4.0, 2.0, 1.0, 0.5, 0.25, -0.25, -0.5, -1.0, -2.0, -4.0, -8.0};
        table = curve == "ice-vs-alpha" ? suites::sweep_ice_vs_alpha(sweep_seed, alphas)
               : curve == "gap-vs-alpha"
                   ? suites::sweep_gap_vs_alpha(sweep_seed, alphas)
                   : throw std::invalid_argument("unknown curve: " + curve);
      }
      std::string text;
      if (sweep_format == "json") {
        Json j;
        j["header"] = table.header;
        j["rows"] = table.rows;
        text = j.dump(2) + "\n";
      } else {
        text = suites::to_csv(table);
      }
      if (sweep_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream outf(sweep_out);
        outf << text;
      }
      return kExitOk;
    }
    if (*gen) {
      if (!have_gen_seed) {
        std::cerr << "error: --seed is mandatory for gen\n";
        return kExitInput;
      }
      RandomInstance inst =
          random_instance(gen_seed, gen_dim, gen_states, gen_outcomes, gen_kraus);
      Json out{{"ensemble", ensemble_to_json(inst.ensemble)},
               {"povm", povm_to_json(inst.povm)},
               {"channel", channel_to_json(inst.channel)},
               {"seed", gen_seed}};
      emit(out, gen_out);
      return kExitOk;
    }
  } catch (const OptimizerDidNotConverge& e) {
    Json err{{"error", e.what()}, {"best_value", e.best_value}, {"best_iterate", e.best_iterate}};
    std::cerr << err.dump(2) << "\n";
    return kExitConvergence;
  } catch (const MinimaxGapExceeded& e) {
    Json err{{"error", e.what()}, {"min_max", e.min_max}, {"max_min", e.max_min}};
    std::cerr << err.dump(2) << "\n";
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
