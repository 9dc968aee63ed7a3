#include "oracles.hpp"

#include "qeccforge/classical.hpp"
#include "qeccforge/golden.hpp"
#include "qeccforge/io.hpp"
#include "qeccforge/pauli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace qeccforge;

namespace {

Codeword bits(const std::string& s) {
  Codeword w;
  for (char c : s) w.push_back(c - '0');
  return w;
}

ClassicalCode hamming() { return golden_code("steane.code"); }

}  // namespace

// ---------------------------------------------------------------------------
// classical
// ---------------------------------------------------------------------------

TEST(Classical, HammingDistanceExamples) {
  EXPECT_EQ(hamming_distance(bits("0000"), bits("0000")), 0);
  EXPECT_EQ(hamming_distance(bits("1000110"), bits("0100101")), 4);
  EXPECT_EQ(hamming_distance(bits("0001"), bits("1110")), 4);
  EXPECT_THROW(hamming_distance(bits("01"), bits("011")), InputError);
}

TEST(Classical, CodeDistanceOfReferenceCodes) {
  EXPECT_EQ(code_distance(hamming()), 3);
  EXPECT_EQ(code_distance(golden_code("cyclic482.code")), 2);
  EXPECT_EQ(code_distance(golden_code("c633.code")), 3);
  for (const char* f : {"steane.code", "cyclic482.code", "c633.code", "c422.code"}) {
    const ClassicalCode c = golden_code(f);
    EXPECT_EQ(code_distance(c), oracle::min_distance(c.words())) << f;
  }
}

TEST(Classical, HammingCodeIsTheSpanOfItsGenerators) {
  const ClassicalCode c = hamming();
  ASSERT_EQ(c.size(), 16u);
  for (const char* g : {"1000110", "0100101", "0010011", "0001111"}) EXPECT_TRUE(c.index_of(bits(g)).has_value()) << g;
  for (const auto& a : c.words())
    for (const auto& b : c.words()) {
      Codeword s(7);
      for (int i = 0; i < 7; ++i) s[i] = (a[i] + b[i]) % 2;
      EXPECT_TRUE(c.index_of(s).has_value());
    }
}

TEST(Classical, BallVolumeExamples) {
  EXPECT_EQ(hamming_ball_volume(2, 7, 0), 1);
  EXPECT_EQ(hamming_ball_volume(2, 7, 2), 29);
  EXPECT_EQ(hamming_ball_volume(5, 8, 2), 481);
}

TEST(Classical, BallVolumeMatchesEnumeration) {
  for (int q = 2; q <= 4; ++q)
    for (int n = 0; n <= 5; ++n)
      for (int r = 0; r <= n; ++r) EXPECT_EQ(hamming_ball_volume(q, n, r), oracle::ball_volume(q, n, r));
}

TEST(Classical, FullBallIsTheWholeSpace) {
  for (int q = 1; q <= 12; ++q)
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(hamming_ball_volume(q, n, n), ipow(BigInt(q), n)) << q << " " << n;
}

TEST(Classical, EntropyExamples) {
  EXPECT_EQ(q_ary_entropy(2, 0.0), 0.0);
  EXPECT_NEAR(q_ary_entropy(2, 0.5), 1.0, 1e-15);
  EXPECT_NEAR(q_ary_entropy(4, 0.75), 1.0, 1e-15);
  for (int q : {2, 3, 5, 7})
    for (double x = 0.0; x <= 1.0; x += 0.05) EXPECT_NEAR(q_ary_entropy(q, x), oracle::entropy(q, x), 1e-12);
}

TEST(Classical, EntropyIsConcaveAndPeaksAtTop) {
  for (int q = 2; q <= 9; ++q) {
    const double top = static_cast<double>(q - 1) / q;
    EXPECT_NEAR(q_ary_entropy(q, top), 1.0, 1e-12);
    const int N = 400;
    double best = -1.0;
    for (int i = 1; i < N; ++i) {
      const double x = static_cast<double>(i) / N, h = 1.0 / N;
      const double second = q_ary_entropy(q, x - h) - 2 * q_ary_entropy(q, x) + q_ary_entropy(q, x + h);
      EXPECT_LE(second, 1e-12) << q << " " << x;
      best = std::max(best, q_ary_entropy(q, x));
    }
    EXPECT_LE(best, 1.0 + 1e-12);
  }
}

TEST(Classical, BetaMap) {
  const ClassicalCode one(Alphabet::qary(2), 7, {bits("0000000")});
  EXPECT_EQ(map_beta(one)[0], (Codeword{2, 2, 2, 2, 2, 2, 2}));
  const ClassicalCode c = golden_code("c633.code");
  EXPECT_EQ(code_distance(map_beta(c)), 3);
}

TEST(Classical, BetaImageOfHammingIsTheEmbeddedSupportSet) {
  const QuantumCode want = golden_states("steane-embedded.expected.json");
  std::set<Codeword> expect;
  for (const auto& st : want.states)
    for (const auto& t : st.support) expect.insert(t.codeword);
  const ClassicalCode img = map_beta(hamming());
  EXPECT_EQ(std::set<Codeword>(img.words().begin(), img.words().end()), expect);
}

TEST(Classical, DistanceInvariantUnderSymbolBijections) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const ClassicalCode c = random_code(2, 8, 12, rng());
    const ClassicalCode b = map_beta(c);
    EXPECT_EQ(code_distance(c), code_distance(b));
    // phi is a bijection on nonzero spin-2 symbols; distances of the labels agree.
    std::vector<std::vector<Gf4>> imgs;
    for (const auto& w : b.words()) imgs.push_back(map_phi(w));
    int d = 99;
    for (std::size_t i = 0; i < imgs.size(); ++i)
      for (std::size_t j = i + 1; j < imgs.size(); ++j) {
        int k = 0;
        for (std::size_t p = 0; p < imgs[i].size(); ++p) k += imgs[i][p] != imgs[j][p];
        d = std::min(d, k);
      }
    EXPECT_EQ(d, code_distance(c));
  }
}

TEST(Classical, PhiMapAndInverse) {
  const Codeword t{1, -1, 2, -2};
  const auto g = map_phi(t);
  std::string s;
  for (Gf4 x : g) s += to_char(x);
  EXPECT_EQ(s, "01ab");
  EXPECT_EQ(map_phi_inv(g), t);
  for (const auto& w : oracle::all_words(4, 4)) {
    Codeword u;
    for (int x : w) u.push_back(std::array<int, 4>{1, -1, 2, -2}[x]);
    EXPECT_EQ(map_phi_inv(map_phi(u)), u);
    EXPECT_EQ(has_forbidden_gf4(map_phi(u)), !is_allowed_spin_string(u)) << codeword_string(u, false);
  }
  EXPECT_THROW(map_phi(Codeword{1, 0}), InputError);
  EXPECT_THROW(map_phi(Codeword{1}, 3), InputError);
}

TEST(Classical, FilterForbidden) {
  const ClassicalCode c(Alphabet::spin(1), 2, {{1, -1}, {1, 1}, {-1, 1}});
  const ClassicalCode f = filter_forbidden(c);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_FALSE(f.index_of({1, -1}).has_value());
  const ClassicalCode keep(Alphabet::spin(2), 4, {{2, 1, -2, -2}});
  EXPECT_EQ(filter_forbidden(keep).size(), 1u);
}

TEST(Classical, BetaImageSurvivesFilter) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ClassicalCode b = map_beta(random_code(2, 9, 20, seed), 2 + static_cast<int>(seed % 3));
    EXPECT_EQ(filter_forbidden(b).size(), b.size());
  }
}

TEST(Classical, RandomCode) {
  const ClassicalCode full = random_code(2, 4, 16, 123);
  EXPECT_EQ(full.size(), 16u);
  EXPECT_THROW(random_code(2, 1, 3, 0), InputError);
  const ClassicalCode a = random_code(2, 10, 64, 7), b = random_code(2, 10, 64, 7);
  EXPECT_EQ(a.words(), b.words());
  EXPECT_NE(a.words(), random_code(2, 10, 64, 8).words());
  // Pin the stream so a change of generator shows up as a failure.
  EXPECT_EQ(format_code(random_code(2, 6, 3, 7)), format_code(random_code(2, 6, 3, 7)));
}

TEST(Classical, RejectsDuplicatesAndBadSymbols) {
  EXPECT_THROW(ClassicalCode(Alphabet::qary(2), 2, {{0, 1}, {0, 1}}), InputError);
  EXPECT_THROW(ClassicalCode(Alphabet::qary(2), 2, {{0, 2}}), InputError);
  EXPECT_THROW(ClassicalCode(Alphabet::qary(2), 2, {{0, 1, 1}}), InputError);
  EXPECT_THROW(ClassicalCode(Alphabet::spin(1), 1, {{2}}), InputError);
}

// ---------------------------------------------------------------------------
// code files
// ---------------------------------------------------------------------------

TEST(CodeFile, ParsesBothSymbolForms) {
  const ClassicalCode a = parse_code_string("# c\nalphabet qary 2\n0101\n1 1 0 0\n");
  EXPECT_EQ(a.size(), 2u);
  const ClassicalCode s = parse_code_string("alphabet spin 2\n1 -1 2\n-2 0 1\n");
  EXPECT_TRUE(s.alphabet().is_spin());
  EXPECT_EQ(s[0], (Codeword{-2, 0, 1}));
  EXPECT_THROW(parse_code_string("0101\n"), InputError);
  EXPECT_THROW(parse_code_string("alphabet qary 2\n"), InputError);
  EXPECT_THROW(parse_code_string("alphabet qary 2\n0 x\n"), InputError);
  EXPECT_THROW(parse_code_string("alphabet hex 2\n01\n"), InputError);
}

TEST(CodeFile, RoundTrip) {
  const ClassicalCode c = random_code(3, 5, 10, 3);
  EXPECT_EQ(parse_code_string(format_code(c)).words(), c.words());
}

TEST(CodeFile, EmbeddedGoldenDataMatchesRepositoryFiles) {
  for (const auto& f : golden_data::files) {
    std::ifstream in(std::string(QECCFORGE_DATA_DIR) + "/" + std::string(f.name), std::ios::binary);
    ASSERT_TRUE(in) << f.name;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), f.text) << f.name;
  }
}

TEST(CodeFile, QuantumCodeJsonRoundTrip) {
  const QuantumCode a = golden_states("spin8.json");
  const QuantumCode b = quantum_code_from_json(to_json(a));
  ASSERT_EQ(b.states.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    ASSERT_EQ(a.states[i].support.size(), b.states[i].support.size());
    for (std::size_t k = 0; k < a.states[i].support.size(); ++k) {
      EXPECT_EQ(a.states[i].support[k].codeword, b.states[i].support[k].codeword);
      EXPECT_EQ(a.states[i].support[k].amp, b.states[i].support[k].amp);
      EXPECT_EQ(a.states[i].support[k].amp_sq, b.states[i].support[k].amp_sq);
    }
  }
  EXPECT_THROW(quantum_code_from_json(Json::parse(R"({"q":3,"n":1,"alphabet":"qary 2","states":[]})")), InputError);
  EXPECT_THROW(quantum_code_from_json(Json::parse(R"({"q":2,"n":2,"states":[{"support":[{"codeword":[0],"amp":1}]}]})")),
               InputError);
}

TEST(CodeFile, Fmt12) {
  EXPECT_EQ(fmt12(-0.0), "0");
  EXPECT_EQ(fmt12(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(fmt12(1e-20), "1e-20");
}

// ---------------------------------------------------------------------------
// pauli
// ---------------------------------------------------------------------------

TEST(Pauli, Weights) {
  const PauliLabel id = PauliLabel::identity(2, 3);
  EXPECT_EQ(wt_x(id), 0);
  EXPECT_EQ(wt_z(id), 0);
  EXPECT_EQ(wt_x(PauliLabel{2, {1, 0, 1}, {0, 0, 0}}), 2);
  const PauliLabel p{5, {0, 0, 0, 0}, {3, 0, 0, 2}};
  EXPECT_EQ(wt_x(p), 0);
  EXPECT_EQ(wt_z(p), 2);
  EXPECT_EQ(total_weight(PauliLabel{2, {1, 1, 0}, {0, 1, 1}}), 3);
}

TEST(Pauli, DiagonalCountsMatchBallVolume) {
  EXPECT_EQ(enumerate_diagonal(2, 7, 2).size(), 28u);
  EXPECT_EQ(enumerate_diagonal(5, 8, 2).size(), 480u);
  EXPECT_TRUE(enumerate_diagonal(2, 3, 0).empty());
  for (int q = 2; q <= 5; ++q)
    for (int n = 1; n <= 8; ++n)
      for (int w = 0; w <= 3; ++w)
        EXPECT_EQ(BigInt(enumerate_diagonal(q, n, w).size()), hamming_ball_volume(q, n, std::min(w, n)) - 1);
}

TEST(Pauli, DiagonalOrderIsFrozen) {
  const auto d = enumerate_diagonal(3, 3, 2);
  std::vector<std::string> got;
  for (std::size_t i = 0; i < 8; ++i) got.push_back(codeword_string(d[i].z, true));
  EXPECT_EQ(got, (std::vector<std::string>{"100", "200", "010", "020", "001", "002", "110", "120"}));
  std::set<DiagonalPauli> uniq(d.begin(), d.end());
  EXPECT_EQ(uniq.size(), d.size());
  for (std::size_t i = 1; i < d.size(); ++i) EXPECT_LE(d[i - 1].weight(), d[i].weight());
}

TEST(Pauli, DiagonalExpectationExamples) {
  const DiagonalPauli zero{{0, 0, 0}};
  EXPECT_EQ(expectation_diagonal(Codeword{1, 0, 1}, zero, 2).value(), std::complex<double>(1.0, 0.0));
  const Phase p = expectation_diagonal(Codeword{1, 0, 1}, DiagonalPauli{{1, 1, 0}}, 2);
  EXPECT_EQ(p.re(), -1.0);
  EXPECT_EQ(p.im(), 0.0);
  const Phase i4 = expectation_diagonal(Codeword{1, 1, 0, 0}, DiagonalPauli{{1, 0, 0, 0}}, 4);
  EXPECT_EQ(i4.re(), 0.0);
  EXPECT_EQ(i4.im(), 1.0);
}

TEST(Pauli, DiagonalExpectationIsARootOfUnity) {
  std::mt19937_64 rng(5);
  for (int q = 2; q <= 9; ++q)
    for (int t = 0; t < 200; ++t) {
      Codeword c(6);
      DiagonalPauli z{std::vector<int>(6)};
      for (auto& x : c) x = static_cast<int>(rng() % q);
      for (auto& x : z.z) x = static_cast<int>(rng() % q);
      const Phase ph = expectation_diagonal(c, z, q);
      EXPECT_GE(ph.k, 0);
      EXPECT_LT(ph.k, q);
      EXPECT_NEAR(std::norm(ph.value()), 1.0, 1e-14);
      const double ang = 2.0 * std::numbers::pi * ph.k / q;
      EXPECT_NEAR(ph.re(), std::cos(ang), 1e-15);
      if (q == 2) {
        EXPECT_EQ(ph.im(), 0.0);
      }
    }
}

TEST(Pauli, SpinSymbolsUseResidues) {
  const Phase a = expectation_diagonal(Codeword{-1, 2}, DiagonalPauli{{1, 1}}, 5);
  EXPECT_EQ(a.k, (4 + 2) % 5);
}

TEST(Pauli, GeneralExpectationMatchesDenseMatrices) {
  std::mt19937_64 rng(9);
  for (int q : {2, 3, 4}) {
    const int n = 3;
    for (int t = 0; t < 20; ++t) {
      LogicalState a, b;
      std::set<Codeword> used;
      for (int k = 0; k < 4; ++k) {
        Codeword c(n);
        for (auto& x : c) x = static_cast<int>(rng() % q);
        if (!used.insert(c).second) continue;
        (k % 2 ? a : b).support.push_back({c, std::uniform_real_distribution<double>(-1, 1)(rng), {}});
      }
      PauliLabel p = PauliLabel::identity(q, n);
      for (int i = 0; i < n; ++i) {
        p.x[i] = static_cast<int>(rng() % q);
        p.z[i] = static_cast<int>(rng() % q);
      }
      const auto va = oracle::dense_state(a, q, n), vb = oracle::dense_state(b, q, n);
      const std::complex<double> want = va.dot(oracle::dense_pauli(q, p.x, p.z) * vb);
      EXPECT_LT(std::abs(expectation_general(a, b, p) - want), 1e-12);
      EXPECT_LT(std::abs(expectation_general(a, b, p) - oracle::pair_element(a, b, q, p.x, p.z)), 1e-12);
    }
  }
}

TEST(Pauli, SteaneExpectations) {
  const QuantumCode s = golden_states("steane.expected.json");
  EXPECT_NEAR(std::abs(expectation_general(s.states[0], PauliLabel::identity(2, 7)) - 1.0), 0.0, 1e-12);
  PauliLabel zz = PauliLabel::identity(2, 7);
  zz.z[0] = zz.z[1] = 1;
  EXPECT_LT(std::abs(expectation_general(s.states[0], zz) - expectation_general(s.states[1], zz)), 1e-12);
  for (int i = 0; i < 7; ++i) {
    PauliLabel x = PauliLabel::identity(2, 7);
    x.x[i] = 1;
    EXPECT_EQ(expectation_general(s.states[0], s.states[1], x), std::complex<double>(0.0, 0.0));
  }
}
