#include "oracles.hpp"

#include "qeccforge/aqecc.hpp"
#include "qeccforge/golden.hpp"
#include "qeccforge/perminv.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace qeccforge;

// ---------------------------------------------------------------------------
// AQECC
// ---------------------------------------------------------------------------

TEST(Aqecc, SteaneGammaIsReal) {
  const QuantumCode s = golden_states("steane.expected.json");
  const GammaVector g = gamma_vector(s.states[0], s.states[1], 2, 7, 3, 3);
  EXPECT_EQ(g.values.size(), 29u);
  for (const auto& v : g.values) EXPECT_EQ(v.imag(), 0.0);
  EXPECT_NEAR(std::abs(g.values.front() - 1.0), 0.0, 1e-12);
}

TEST(Aqecc, SingleCodewordPairsGiveRawPhases) {
  // Identical states are not orthogonal.
  const LogicalState a{0, {{{0, 0, 0}, 1.0, {}}}};
  const LogicalState b{1, {{{0, 0, 0}, 1.0, {}}}};
  EXPECT_THROW(gamma_vector(a, b, 3, 3, 1, 2), InputError);
  // |111> and |222> are told apart by a single Z.
  const LogicalState c{0, {{{1, 1, 1}, 1.0, {}}}};
  const LogicalState d{1, {{{2, 2, 2}, 1.0, {}}}};
  EXPECT_THROW(gamma_vector(c, d, 3, 3, 1, 2), InputError);
  const LogicalState e{0, {{{0, 0}, 1.0, {}}}};
  const LogicalState f{1, {{{1, 1}, 1.0, {}}}};
  const GammaVector g = gamma_vector(e, f, 2, 2, 1, 1);
  ASSERT_EQ(g.values.size(), 1u);
  EXPECT_EQ(g.values[0], std::complex<double>(1.0, 0.0));
}

TEST(Aqecc, DeltaIsZeroForPairsOfOneCode) {
  const QuantumCode cyc = golden_states("cyclic482.expected.json");
  std::vector<GammaVector> gs;
  for (std::size_t i = 0; i + 1 < cyc.states.size(); i += 2)
    gs.push_back(gamma_vector(cyc.states[i], cyc.states[i + 1], 2, 4, 2, 2, i / 2));
  EXPECT_EQ(delta(gs), 0.0);
  // Pairing (0,2) and (1,3) works too.
  gs = {gamma_vector(cyc.states[0], cyc.states[2], 2, 4, 2, 2, 0), gamma_vector(cyc.states[1], cyc.states[3], 2, 4, 2, 2, 1)};
  EXPECT_EQ(delta(gs), 0.0);
  EXPECT_EQ(delta({gs[0], gs[0]}), 0.0);
  EXPECT_THROW(delta({gs[0]}), InputError);
}

TEST(Aqecc, IndependentGammaComputation) {
  const QuantumCode c = build_logical_qubit(random_code(3, 4, 20, 5), 1, 2);
  const GammaVector g = gamma_vector(c.states[0], c.states[1], 3, 4, 1, 2);
  for (std::size_t i = 0; i < g.labels.size(); ++i) {
    const std::vector<int> zero(4, 0);
    const auto va = oracle::pair_element(c.states[0], c.states[0], 3, zero, g.labels[i].z);
    const auto vb = oracle::pair_element(c.states[1], c.states[1], 3, zero, g.labels[i].z);
    EXPECT_LT(std::abs(va - g.values[i]), 1e-8);
    EXPECT_LT(std::abs(vb - g.values[i]), 1e-8);
  }
}

TEST(Aqecc, DisjointSubcodesOfARandomCode) {
  const ClassicalCode c = random_code(2, 6, 56, 17);
  const AqeccResult r = aqecc_from_code(c, 1, 2);
  EXPECT_EQ(r.blocks, 4u);
  ASSERT_GE(r.pairs.size(), 2u);
  ASSERT_TRUE(r.delta.has_value());
  EXPECT_GE(*r.delta, 0.0);
  EXPECT_LE(*r.delta, 2.0 + 1e-12);
  std::set<Codeword> seen;
  for (const auto& p : r.pairs)
    for (const auto& st : p.states)
      for (const auto& t : st.support) EXPECT_TRUE(seen.insert(t.codeword).second);
}

TEST(Aqecc, ExpectedMBound) {
  const double v = 7;  // V_2(6, 1)
  EXPECT_NEAR(expected_M_bound(56, 2, 6, 2, 2.0), 2.0 * 4, 1e-12);
  EXPECT_NEAR(expected_M_bound(14, 2, 6, 2, 0.5), 2.0 * std::pow(0.25, v), 1e-15);
  EXPECT_NEAR(expected_M_bound(56, 2, 6, 2, 1e-9), 0.0, 1e-12);
  EXPECT_THROW(expected_M_bound(56, 2, 6, 2, 0.0), InputError);
  for (std::size_t m = 14; m <= 200; m += 7)
    for (int k = 1; k <= 20; ++k) {
      const double d = k / 10.0;
      EXPECT_LE(expected_M_bound(m, 2, 6, 2, d), expected_M_bound(m + 7, 2, 6, 2, d));
      EXPECT_LE(expected_M_bound(m, 2, 6, 2, d), expected_M_bound(m, 2, 6, 2, std::min(2.0, d + 0.1)));
    }
}

TEST(Aqecc, InfidelityBound) {
  EXPECT_EQ(infidelity_bound(0.0, 2, 7, 3).value, 0.0);
  EXPECT_DOUBLE_EQ(infidelity_bound(1e-3, 2, 7, 3).value, 1e-3 * std::pow(29.0, 4));
  EXPECT_TRUE(infidelity_bound(1e-3, 2, 7, 3).unit_constant);
  EXPECT_FALSE(infidelity_bound(1e-3, 2, 7, 3).caveat.empty());
}

TEST(Aqecc, MonteCarloIsDeterministic) {
  const auto a = aqecc_monte_carlo(2, 6, 42, 1, 2, 4, 100);
  const auto b = aqecc_monte_carlo(2, 6, 42, 1, 2, 4, 100);
  ASSERT_EQ(a.size(), 4u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].pairs, b[i].pairs);
    EXPECT_EQ(a[i].delta, b[i].delta);
    EXPECT_EQ(a[i].expected_M, b[i].expected_M);
  }
}

// ---------------------------------------------------------------------------
// permutation-invariant codes
// ---------------------------------------------------------------------------

TEST(Perminv, ClassCounts) {
  EXPECT_EQ(pauli_classes_up_to_permutation(5, 0).exact, 1);
  EXPECT_EQ(pauli_classes_up_to_permutation(5, 0).bound, 1);
  EXPECT_EQ(pauli_classes_up_to_permutation(9, 2).bound, 13);
  EXPECT_EQ(pauli_classes_up_to_permutation(9, 2).exact, 1 + 3 + 6);
  // Brute force over every qubit Pauli on n sites.
  for (int n = 1; n <= 5; ++n)
    for (int w = 0; w <= 3; ++w) {
      std::set<PauliClass> seen;
      for (const auto& x : oracle::all_words(2, n))
        for (const auto& z : oracle::all_words(2, n)) {
          PauliLabel p{2, x, z};
          if (total_weight(p) <= w) seen.insert(class_of(p));
        }
      EXPECT_EQ(BigInt(seen.size()), pauli_classes_up_to_permutation(n, w).exact) << n << " " << w;
      EXPECT_EQ(seen.size(), pauli_classes(n, w).size());
    }
}

TEST(Perminv, Inequality) {
  EXPECT_EQ(perminv_row_budget(3), 14);
  EXPECT_EQ(perminv_min_n(3), 42);
  EXPECT_FALSE(perminv_inequality(41, 3));
  EXPECT_TRUE(perminv_inequality(42, 3));
  for (int n = 1; n < 42; ++n) EXPECT_FALSE(perminv_inequality(n, 3));
  EXPECT_EQ(perminv_min_n_general(3), 39);
  EXPECT_TRUE(perminv_inequality_general(39, 3));
  EXPECT_FALSE(perminv_inequality_general(38, 3));
}

TEST(Perminv, DickeExamples) {
  EXPECT_NEAR(std::abs(dicke_expectation(4, 2, PauliLabel::identity(2, 4)) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(dicke_expectation(2, 1, PauliLabel{2, {1, 1}, {0, 0}}).real(), 1.0, 1e-12);
  EXPECT_NEAR(dicke_expectation(2, 0, PauliLabel{2, {0, 0}, {1, 0}}).real(), 1.0, 1e-12);
}

TEST(Perminv, ExactElementMatchesDenseAndBruteForce) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& x : oracle::all_words(2, n))
      for (const auto& z : oracle::all_words(2, n)) {
        const PauliLabel p{2, x, z};
        const Eigen::MatrixXcd m = oracle::dense_pauli(2, x, z);
        for (int w = 0; w <= n; ++w) {
          const Eigen::VectorXcd dw = oracle::dense_state(dicke_state(n, w), 2, n);
          for (int w2 = 0; w2 <= n; ++w2) {
            const Eigen::VectorXcd dw2 = oracle::dense_state(dicke_state(n, w2), 2, n);
            const std::complex<double> want = dw.dot(m * dw2);
            EXPECT_NEAR(want.imag(), 0.0, 1e-12);
            EXPECT_NEAR(dicke_element(n, w, w2, class_of(p)), want.real(), 1e-12);
          }
          EXPECT_NEAR(to_double(dicke_expectation_exact(n, w, class_of(p))), dicke_expectation(n, w, p).real(), 1e-12);
        }
      }
}

TEST(Perminv, PermutationInvariance) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int w = static_cast<int>(rng() % (n + 1));
    PauliLabel p = PauliLabel::identity(2, n);
    for (int i = 0; i < n; ++i) {
      p.x[i] = static_cast<int>(rng() % 2);
      p.z[i] = static_cast<int>(rng() % 2);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    PauliLabel pp = p;
    for (int i = 0; i < n; ++i) {
      pp.x[i] = p.x[perm[i]];
      pp.z[i] = p.z[perm[i]];
    }
    EXPECT_LT(std::abs(dicke_expectation(n, w, p) - dicke_expectation(n, w, pp)), 1e-12);
  }
}

TEST(Perminv, FarApartWeightsAreOrthogonalUnderLowXWeight) {
  for (int n = 2; n <= 8; ++n)
    for (int d = 1; d <= 3; ++d)
      for (const auto& c : pauli_classes(n, n))
        if (c.nx + c.ny <= d - 1)
          for (int w = 0; w <= n; ++w)
            for (int w2 = 0; w2 <= n; ++w2)
              if (std::abs(w - w2) >= d) {
                EXPECT_EQ(dicke_overlap_count(n, w, w2, c), 0);
              }
}

TEST(Perminv, BuildAtTheThreshold) {
  const PermInvCode c = build_perminv_code(42, 3);
  EXPECT_GE(c.kernel_dimension, 1u);
  EXPECT_EQ(c.row_classes.size(), 9u);
  EXPECT_EQ(c.column_weights.size(), 15u);
  const PermInvCheck k = perminv_kl_check(c);
  EXPECT_TRUE(k.passed) << k.worst_violation;
  for (const auto& st : c.states) {
    Rational s = 0;
    for (const auto& t : st) s += t.prob;
    EXPECT_EQ(s, 1);
  }
  try {
    build_perminv_code(41, 3);
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.kind(), Failure::CountingInequality);
  }
}

TEST(Perminv, SmallCodesVerifiedInTheComputationalBasis) {
  // d = 2: smallest n allowed by the inequality.
  const int n2 = perminv_min_n(2);
  EXPECT_EQ(n2, 10);
  const PermInvCode c2 = build_perminv_code(n2, 2);
  EXPECT_TRUE(perminv_kl_check(c2).passed);
  const QuantumCode q2 = expand_perminv(c2);
  KLOptions o;
  o.record_c_values = false;
  o.mode = WeightMode::Total;
  EXPECT_TRUE(kl_verify(q2, 2, 2, o).passed);
  // d = 1: any two spaced weights.
  const PermInvCode c1 = build_perminv_code(3, 1);
  EXPECT_TRUE(kl_verify(expand_perminv(c1), 1, 1, o).passed);
  // Below the threshold the kernel can still be nontrivial.
  PermInvOptions loose;
  loose.ignore_inequality = true;
  for (int n = 4; n <= 9; ++n) {
    try {
      const PermInvCode c = build_perminv_code(n, 2, loose);
      EXPECT_TRUE(perminv_kl_check(c).passed) << n;
      EXPECT_TRUE(kl_verify(expand_perminv(c), 2, 2, o).passed) << n;
    } catch (const ConstructionError& e) {
      EXPECT_EQ(e.kind(), Failure::TrivialKernel);
    }
  }
}
