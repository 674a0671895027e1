#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "twistzhu/delta.hpp"

using namespace twistzhu;

namespace {

Vector a(std::vector<int> parts, Scalar c = Scalar(1)) { return fock_vector(std::move(parts), c); }
const Vector vac = vacuum_vector();

std::vector<Scalar> target(int k, int degree) {
  std::vector<Scalar> out(static_cast<size_t>(degree) + 1);
  for (int d = 1; d <= degree; ++d) out[static_cast<size_t>(d)] = oracle::binomial(Scalar(k), d) / Scalar(k);
  return out;
}

}  // namespace

TEST(SolveAj, KOneIsTrivial) {
  const auto t = solve_aj(1, 8);
  for (const auto& c : t.a) EXPECT_TRUE(c.is_zero());
}

TEST(SolveAj, KTwo) {
  const auto t = solve_aj(2, 3);
  ASSERT_EQ(t.a.size(), 3u);
  EXPECT_EQ(t.at(1), Scalar(-1, 2));
  EXPECT_EQ(t.at(2), Scalar(1, 4));
  EXPECT_EQ(t.at(3), Scalar(-3, 16));
  EXPECT_THROW(t.at(4), std::out_of_range);
  EXPECT_THROW(t.at(0), std::out_of_range);
}

TEST(SolveAj, FirstTwoCoefficientsInClosedForm) {
  for (int k = 1; k <= 8; ++k) {
    const auto t = solve_aj(k, 4);
    EXPECT_EQ(t.at(1), Scalar(-(k - 1), 2)) << k;
    EXPECT_EQ(t.at(2), Scalar(k * k - 1, 12)) << k;
  }
}

TEST(SolveAj, FlowOracleReproducesTarget) {
  for (int k = 1; k <= 8; ++k) {
    const auto t = solve_aj(k, 12);
    EXPECT_EQ(oracle::flow_recompose(t.a, 13), target(k, 13)) << k;
  }
}

TEST(SolveAj, PrefixIsStable) {
  for (int k = 2; k <= 5; ++k) {
    const auto small = solve_aj(k, 4), big = solve_aj(k, 10);
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(small.at(j), big.at(j));
  }
}

TEST(SolveAj, RejectsBadInput) {
  EXPECT_THROW(solve_aj(0, 3), std::invalid_argument);
  EXPECT_THROW(solve_aj(2, 0), std::invalid_argument);
}

TEST(Recompose, AgreesWithFlowOracleOnArbitraryCoefficients) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    AjTable t{2, 6, {}};
    for (int j = 0; j < 6; ++j) t.a.push_back(oracle::random_rational(rng, 4));
    EXPECT_EQ(recompose(t, 7), oracle::flow_recompose(t.a, 7));
  }
}

TEST(Recompose, TargetMatchesOracle) {
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(aj_target(k, 9), target(k, 9));
}

TEST(Corrupted, AddsToOneEntry) {
  const auto t = solve_aj(3, 4);
  const auto c = t.corrupted(2);
  EXPECT_EQ(c.at(2), t.at(2) + Scalar(1));
  EXPECT_EQ(c.at(1), t.at(1));
  EXPECT_NE(recompose(c, 5), aj_target(3, 5));
  EXPECT_THROW(t.corrupted(5), std::out_of_range);
}

TEST(Delta1, Examples) {
  const auto& h = heisenberg();
  for (int k = 1; k <= 4; ++k) {
    const auto t = solve_aj(k, 4);
    EXPECT_EQ(delta1(h, vac, t), vac);
    EXPECT_EQ(delta1(h, a({1}), t), a({1}, Scalar(1, k)));
    const Vector omega = h.conformal_vector();
    const Vector expect = (omega + vac * (t.at(2) * h.central_charge() / Scalar(2))) * Scalar(1, k * k);
    EXPECT_EQ(delta1(h, omega, t), expect) << k;
  }
  const auto t2 = solve_aj(2, 2);
  EXPECT_EQ(delta1(h, h.conformal_vector(), t2), a({1, 1}, Scalar(1, 8)) + vac * Scalar(1, 32));
}

TEST(Delta1, ShortTableIsReported) {
  const auto t = solve_aj(2, 2);
  EXPECT_THROW(delta1(heisenberg(), a({3}), t), std::invalid_argument);
  EXPECT_THROW(delta1_inv(heisenberg(), a({1, 1, 1}), t), std::invalid_argument);
}

TEST(Delta1Inv, Examples) {
  const auto& h = heisenberg();
  for (int k = 1; k <= 4; ++k) {
    const auto t = solve_aj(k, 4);
    EXPECT_EQ(delta1_inv(h, vac, t), vac);
    EXPECT_EQ(delta1_inv(h, a({1}, Scalar(1, k)), t), a({1}));
  }
}

TEST(Delta1Inv, RoundtripsOnBasis) {
  for (const HeisenbergModel& m : {HeisenbergModel(), HeisenbergModel(Scalar(1, 3))})
    for (int k = 1; k <= 4; ++k) {
      const auto t = solve_aj(k, 4);
      for (const auto& b : fock_basis_up_to(4)) {
        const Vector u(b);
        EXPECT_EQ(delta1(m, delta1_inv(m, u, t), t), u) << k << ' ' << b.to_string();
        EXPECT_EQ(delta1_inv(m, delta1(m, u, t), t), u) << k << ' ' << b.to_string();
      }
    }
}

TEST(Delta1Inv, OtherOperatorOrderFailsOnOmega) {
  // e^{-A} k^{L(0)} is not the inverse: the L(2) term is scaled wrongly.
  const auto& h = heisenberg();
  const auto t = solve_aj(2, 2);
  const Vector omega = h.conformal_vector();
  const Vector d = delta1(h, omega, t);
  Vector scaled;
  for (const auto& [m, c] : d) scaled.add(m, c * Scalar(2).pow(m.weight()));
  Vector wrong = scaled;
  wrong.add_scaled(h.l_action(2, scaled), -t.at(2));
  EXPECT_NE(wrong, omega);
  EXPECT_EQ(delta1_inv(h, d, t), omega);
}

TEST(ExpWeightedL, Examples) {
  const auto& h = heisenberg();
  const auto t = solve_aj(3, 4);
  auto p = exp_weighted_l(h, vac, t).parts;
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].first, vac);
  EXPECT_EQ(p[0].second, 0);

  p = exp_weighted_l(h, a({1}), t).parts;
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].first, a({1}));

  p = exp_weighted_l(h, h.conformal_vector(), t).parts;
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].first, h.conformal_vector());
  EXPECT_EQ(p[0].second, 0);
  EXPECT_EQ(p[1].first, vac * (t.at(2) * Scalar(1, 2)));
  EXPECT_EQ(p[1].second, 2);
}

TEST(ExpWeightedL, PartWeightsAndSum) {
  for (const HeisenbergModel& m : {HeisenbergModel(), HeisenbergModel(Scalar(1, 3))})
    for (int k = 2; k <= 3; ++k) {
      const auto t = solve_aj(k, 4);
      for (const auto& b : fock_basis_up_to(4)) {
        Vector sum;
        int last = -1;
        for (const auto& [vec, drop] : exp_weighted_l(m, Vector(b), t).parts) {
          EXPECT_EQ(homogeneous_weight(vec), b.weight() - drop);
          EXPECT_GT(drop, last);
          last = drop;
          sum += vec;
        }
        // at z = 0 the weighted exponential is e^{sum a_j L(j)}
        EXPECT_EQ(sum * Scalar(1, k).pow(b.weight()), delta1(m, Vector(b), t));
      }
    }
}

TEST(DeltaAtOnePlusX, Examples) {
  const auto& h = heisenberg();
  const auto t = solve_aj(2, 4);
  const auto one = delta_at_one_plus_x(h, vac, t, 4);
  for (int e = 0; e <= 4; ++e) EXPECT_EQ(one.coefficient(e), e == 0 ? vac : Vector());

  const auto s = delta_at_one_plus_x(h, a({1}), t, 2);
  EXPECT_EQ(s.coefficient(0), a({1}, Scalar(1, 2)));
  EXPECT_EQ(s.coefficient(1), a({1}, Scalar(-1, 4)));
  EXPECT_EQ(s.coefficient(2), a({1}, Scalar(3, 16)));

  for (int k = 2; k <= 3; ++k) {
    const auto tk = solve_aj(k, 4);
    for (const auto& b : fock_basis_up_to(4))
      EXPECT_EQ(delta_at_one_plus_x(h, Vector(b), tk, 3).coefficient(0), delta1(h, Vector(b), tk));
  }
}

TEST(Conjugation, TrivialCases) {
  const auto& h = heisenberg();
  const auto t = solve_aj(2, 10);
  for (const auto& b : fock_basis_up_to(3)) EXPECT_TRUE(conjugation_check_at_one(h, vac, Vector(b), t, 4).pass);
  EXPECT_TRUE(conjugation_check_at_one(h, vac, vac, t, 4).pass);
  EXPECT_TRUE(conjugation_check_at_one(h, a({1}), a({1}), t, 4).pass);
}

TEST(Conjugation, LowWeightPairs) {
  for (const HeisenbergModel& m : {HeisenbergModel(), HeisenbergModel(Scalar(1, 3))})
    for (int k = 2; k <= 3; ++k) {
      const auto t = solve_aj(k, 10);
      const auto basis = fock_basis_up_to(2);
      for (const auto& bu : basis)
        for (const auto& bv : basis) {
          const auto r = conjugation_check_at_one(m, Vector(bu), Vector(bv), t, 6);
          EXPECT_TRUE(r.pass) << k << ' ' << bu.to_string() << ' ' << bv.to_string();
          EXPECT_EQ(r.hi, 6);
        }
    }
}

TEST(Conjugation, CorruptedTableIsDetected) {
  const auto& h = heisenberg();
  const auto t = solve_aj(2, 10).corrupted(2);
  const auto r = conjugation_check_at_one(h, h.conformal_vector(), a({1}), t, 6);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.mismatches.empty());
}
