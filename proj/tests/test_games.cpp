#include <doctest.h>

#include <cmath>

#include "qbet/games.hpp"
#include "qbet/random_instances.hpp"
#include "test_util.hpp"

using namespace qbet;

namespace {

DensityMatrix ket0() { return DensityMatrix::pure((Vector(2) << 1, 0).finished()); }
DensityMatrix ket1() { return DensityMatrix::pure((Vector(2) << 0, 1).finished()); }

Ensemble orthogonal_pair() { return Ensemble({ket0(), ket1()}, Pmf::uniform(2)); }

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

}  // namespace

TEST_CASE("quantum arimoto mi") {
  Ensemble e = orthogonal_pair();
  // uninformative measurements convey nothing
  Povm flat = Povm::uninformative(2, Pmf({0.4, 0.6}));
  for (const Order& a : qtest::order_sweep())
    CHECK(arimoto_mi_quantum(e, flat, a) == doctest::Approx(0.0).epsilon(1e-10));

  // perfect correlation gives one bit at non-negative orders
  Povm basis = Povm::computational_basis(2);
  for (double a : {0.0, 0.5, 1.0, 2.0})
    CHECK(arimoto_mi_quantum(e, basis, Order(a)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(arimoto_mi_quantum(e, basis, Order::pos_inf()) == doctest::Approx(1.0).epsilon(1e-10));

  // random instance at alpha = 1 matches the Shannon oracle
  RandomSource rs(101);
  for (int i = 0; i < 10; ++i) {
    Ensemble re = random_ensemble(rs, 2, 3);
    Povm m = random_povm(rs, 2, 3);
    JointPmf j = JointPmf::from_conditional(born_cond_pmf(m, re.states), re.priors);
    CHECK(arimoto_mi_quantum(re, m, Order(1.0)) ==
          doctest::Approx(qtest::shannon_mi_oracle(j)).epsilon(1e-10));
  }
}

TEST_CASE("noisy arimoto mi") {
  Ensemble e = orthogonal_pair();
  Povm basis = Povm::computational_basis(2);
  KrausChannel id = KrausChannel::identity(2);
  for (double a : {0.5, 1.0, 2.0})
    CHECK(noisy_arimoto_mi(e, basis, id, Order(a)) ==
          doctest::Approx(arimoto_mi_quantum(e, basis, Order(a))).epsilon(1e-12));

  // constant channels destroy all side information for any measurement
  KrausChannel constant = KrausChannel::depolarizing(2, 1.0);
  RandomSource rs(103);
  for (int i = 0; i < 5; ++i) {
    Povm m = random_povm(rs, 2, 3);
    for (double a : {0.5, 1.0, 2.0})
      CHECK(noisy_arimoto_mi(e, m, constant, Order(a)) == doctest::Approx(0.0).epsilon(1e-10));
  }

  // depolarizing at half strength sits strictly between 0 and 1 bit and
  // matches the explicitly constructed joint
  KrausChannel half = KrausChannel::depolarizing(2, 0.5);
  double v = noisy_arimoto_mi(e, basis, half, Order(1.0));
  CHECK(v > 0.01);
  CHECK(v < 0.99);
  JointPmf j({{0.375, 0.125}, {0.125, 0.375}});  // flip probability 1/4
  CHECK(v == doctest::Approx(arimoto_mi(j, Order(1.0))).epsilon(1e-10));
}

TEST_CASE("qsb value equals the conditional renyi probability form") {
  RandomSource rs(107);
  for (int i = 0; i < 12; ++i) {
    Ensemble e = random_ensemble(rs, 2, 3);
    Povm m = random_povm(rs, 2, 3);
    JointPmf j = JointPmf::from_conditional(born_cond_pmf(m, e.states), e.priors);
    for (double a : {-8.0, -2.0, -0.5, 0.5, 2.0, 8.0}) {
      const double c = 1.0;
      QsbGame game(Odds::constant(3, sgn(a) * c), e);
      CHECK(qsb_value(game, m, Order(a)) ==
            doctest::Approx(sgn(a) * c * cond_renyi_probability(j, Order(a))).epsilon(1e-9));
    }
  }
}

TEST_CASE("uninformative play reduces to the game without side information") {
  RandomSource rs(109);
  Ensemble e = random_ensemble(rs, 2, 3);
  for (double a : {-2.0, -0.5, 0.5, 2.0}) {
    const double c = 1.5;
    QsbGame game(Odds::constant(3, sgn(a) * c), e);
    double free_value = best_free_qsb_value(game, FreeSet::uninformative_measurements(),
                                            Order(a));
    CHECK(free_value ==
          doctest::Approx(sgn(a) * c * renyi_probability(e.priors, Order(a))).epsilon(1e-9));
    // an explicit uninformative singleton must agree exactly
    Povm flat = Povm::uninformative(2, Pmf({0.25, 0.35, 0.4}));
    double singleton = best_free_qsb_value(
        game, FreeSet::explicit_measurements({flat}), Order(a));
    CHECK(singleton == doctest::Approx(free_value).epsilon(1e-9));
    // membership: a list containing the game's own POVM dominates it
    Povm m = random_povm(rs, 2, 3);
    double with_m =
        best_free_qsb_value(game, FreeSet::explicit_measurements({flat, m}), Order(a));
    CHECK(with_m >= qsb_value(game, m, Order(a)) - 1e-12);
  }
}

TEST_CASE("qsb at infinite orders recovers discrimination and exclusion") {
  RandomSource rs(113);
  for (int i = 0; i < 20; ++i) {
    Ensemble e = random_ensemble(rs, 2, 3);
    Povm m = random_povm(rs, 2, 3);
    DiscriminationExclusion de = discrimination_exclusion(e, m);
    const double c = 1.0;
    QsbGame gain(Odds::constant(3, c), e);
    QsbGame loss(Odds::constant(3, -c), e);
    CHECK(qsb_value(gain, m, Order::pos_inf()) == doctest::Approx(c * de.p_succ_qsd).epsilon(1e-9));
    CHECK(qsb_value(loss, m, Order::neg_inf()) ==
          doctest::Approx(-c * de.p_err_qse).epsilon(1e-9));
  }
}

TEST_CASE("nqsb duality against the direct noisy joint") {
  RandomSource rs(127);
  for (int i = 0; i < 10; ++i) {
    Ensemble e = random_ensemble(rs, 2, 2);
    Povm m = random_povm(rs, 2, 3);
    KrausChannel n = random_channel(rs, 2, 2);
    for (double a : {-2.0, 0.5, 2.0}) {
      QsbGame game(Odds::constant(2, sgn(a) * 1.0), e);
      double heisenberg = nqsb_value(game, m, n, Order(a));
      // Schroedinger picture: evolve the states instead
      StateSet out;
      for (const auto& rho : e.states) out.push_back(apply_channel(n, rho));
      QsbGame direct(Odds::constant(2, sgn(a) * 1.0), Ensemble(out, e.priors));
      CHECK(heisenberg == doctest::Approx(qsb_value(direct, m, Order(a))).epsilon(1e-9));
    }
    QsbGame game(Odds::constant(2, 1.0), e);
    CHECK(nqsb_value(game, m, KrausChannel::identity(2), Order(2.0)) ==
          doctest::Approx(qsb_value(game, m, Order(2.0))).epsilon(1e-12));
    // constant channels reduce to uninformative play
    CHECK(nqsb_value(game, m, KrausChannel::depolarizing(2, 1.0), Order(2.0)) ==
          doctest::Approx(best_free_qsb_value(game, FreeSet::uninformative_measurements(),
                                              Order(2.0)))
              .epsilon(1e-9));
  }
}

TEST_CASE("qcb value") {
  // identical channels make the branches indistinguishable
  RandomSource rs(131);
  KrausChannel n = random_channel(rs, 2, 2);
  std::vector<KrausChannel> same = {n, n, n};
  Pmf prior({0.5, 0.3, 0.2});
  DensityMatrix rho = random_state(rs, 2);
  Povm m = random_povm(rs, 2, 3);
  for (double a : {-2.0, 0.5, 2.0}) {
    Odds o = Odds::constant(3, sgn(a) * 1.0);
    double v = qcb_value(o, prior, same, rho, m, Order(a));
    CHECK(v == doctest::Approx(sgn(a) * renyi_probability(prior, Order(a))).epsilon(1e-9));
  }

  // orthogonalising unitaries on a pure state with the matched measurement
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  std::vector<KrausChannel> unitaries;
  unitaries.emplace_back(std::vector<Matrix>{Matrix::Identity(2, 2)});
  unitaries.emplace_back(std::vector<Matrix>{x});
  Pmf half = Pmf::uniform(2);
  for (double a : {0.5, 1.0, 2.0}) {
    double v = qcb_value(Odds::constant(2, 1.0), half, unitaries, ket0(),
                         Povm::computational_basis(2), Order(a));
    CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
  }

  // the discrimination limit: QCB at alpha -> inf equals C * P_succ^QCD
  StateSet induced = {apply_channel(unitaries[0], ket0()), apply_channel(unitaries[1], ket0())};
  DiscriminationExclusion de = discrimination_exclusion(
      Ensemble(induced, half), Povm::computational_basis(2));
  double vinf = qcb_value(Odds::constant(2, 1.0), half, unitaries, ket0(),
                          Povm::computational_basis(2), Order::pos_inf());
  CHECK(vinf == doctest::Approx(de.p_succ_qsd).epsilon(1e-12));
}

TEST_CASE("discrimination and exclusion probabilities") {
  Ensemble e = orthogonal_pair();
  DiscriminationExclusion d = discrimination_exclusion(e, Povm::computational_basis(2));
  CHECK(d.p_succ_qsd == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.p_err_qse == doctest::Approx(0.0).epsilon(1e-12));

  // uninformative play on a uniform prior: both coincide at 1/K
  RandomSource rs(137);
  Ensemble u(StateSet{random_state(rs, 2), random_state(rs, 2), random_state(rs, 2)},
             Pmf::uniform(3));
  DiscriminationExclusion du =
      discrimination_exclusion(u, Povm::uninformative(2, Pmf({0.2, 0.3, 0.5})));
  CHECK(du.p_succ_qsd == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(du.p_err_qse == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  // closed form equals the exhaustive deterministic post-processing oracle
  for (int i = 0; i < 25; ++i) {
    JointPmf j = random_joint_pmf(rs, 2 + (i % 3), 2 + ((i / 3) % 3), false);
    DiscriminationExclusion closed = discrimination_exclusion(j);
    DiscriminationExclusion oracle = cpp_oracle(j);
    CHECK(closed.p_succ_qsd == doctest::Approx(oracle.p_succ_qsd).epsilon(1e-12));
    CHECK(closed.p_err_qse == doctest::Approx(oracle.p_err_qse).epsilon(1e-12));
  }
}

TEST_CASE("arimoto gaps") {
  RandomSource rs(139);
  Ensemble e = random_ensemble(rs, 2, 3);
  Povm m = random_povm(rs, 2, 3);
  Povm n1 = random_povm(rs, 2, 3);
  Povm n2 = random_povm(rs, 2, 3);
  for (double a : {-2.0, 0.5, 2.0}) {
    Order ord(a);
    // the uninformative built-in reduces the gap to the mutual information
    CHECK(arimoto_gap_measurement(e, m, FreeSet::uninformative_measurements(), ord) ==
          doctest::Approx(arimoto_mi_quantum(e, m, ord)).epsilon(1e-12));
    // explicit enumeration
    double expect = arimoto_mi_quantum(e, m, ord) -
                    std::max(arimoto_mi_quantum(e, n1, ord), arimoto_mi_quantum(e, n2, ord));
    CHECK(arimoto_gap_measurement(e, m, FreeSet::explicit_measurements({n1, n2}), ord) ==
          doctest::Approx(expect).epsilon(1e-12));
    // a free set containing the fixed object keeps the gap non-positive
    double self_gap =
        arimoto_gap_measurement(e, m, FreeSet::explicit_measurements({m, n1}), ord);
    CHECK(self_gap <= 1e-12);
  }
}

TEST_CASE("information is monotone under measurement simulation") {
  RandomSource rs(149);
  for (int i = 0; i < 25; ++i) {
    Ensemble e = random_ensemble(rs, 2, 3);
    Povm m = random_povm(rs, 2, 4);
    CondPmf post = random_cond_pmf(rs, 4, 3, false);
    Povm sim = simulate_measurement(m, post);
    for (const Order& a : qtest::order_sweep()) {
      double fine, coarse;
      try {
        fine = arimoto_mi_quantum(e, m, a);
        coarse = arimoto_mi_quantum(e, sim, a);
      } catch (const DivergentEntropy&) {
        continue;  // negative orders reject joints with structural zeros
      }
      CHECK(coarse <= fine + 1e-9);
    }
  }
}

TEST_CASE("result 1 smoke check on seeded instances") {
  ResultCheckOptions opts;
  opts.seed = 3;
  RandomInstance inst = random_instance(3, 2, 3, 3, 2);
  for (double a : {-2.0, 0.5, 2.0}) {
    ResultReport r = check_result1(inst.ensemble, inst.povm, Order(a), 1e-6, opts);
    INFO("alpha ", a, " lhs ", r.lhs, " rhs ", r.rhs);
    CHECK(r.pass);
  }
  ResultReport rinf = check_result1(inst.ensemble, inst.povm, Order::pos_inf(), 1e-9, opts);
  CHECK(rinf.pass);
  ResultReport rninf = check_result1(inst.ensemble, inst.povm, Order::neg_inf(), 1e-9, opts);
  CHECK(rninf.pass);

  // projective measurement on its best ensemble: one bit exactly
  Ensemble best = orthogonal_pair();
  ResultReport r = check_result1(best, Povm::computational_basis(2), Order::pos_inf(), 1e-9, opts);
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-9));  // log2(1 + robustness)
}

TEST_CASE("result 5 on the binary symmetric joint") {
  JointPmf bsc({{0.45, 0.05}, {0.05, 0.45}});
  ResultCheckOptions opts;
  ResultReport r = check_result5(bsc, Order(1.0), 1e-8, opts);
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(1.0 - qtest::binary_entropy(0.1)).epsilon(1e-10));
  for (double a : {-2.0, -0.5, 0.5, 2.0}) {
    ResultReport ra = check_result5(bsc, Order(a), 1e-8, opts);
    INFO("alpha ", a, " err ", ra.abs_err);
    CHECK(ra.pass);
  }
}
