#include <random>

#include "doctest.h"
#include "hbcells/betti.hpp"
#include "hbcells/errors.hpp"
#include "hbcells/hilbert_burch.hpp"
#include "hbcells/parse.hpp"

using namespace hbcells;

namespace {

using K = PieceEntry::Kind;
PieceEntry param(int k) { return {K::Param, k}; }
const PieceEntry kZero{K::Zero, 0};
const PieceEntry kOne{K::One, 0};

std::vector<Staircase> staircases_up_to(int d) {
  std::vector<Staircase> out;
  for (int k = 1; k <= d; ++k) {
    auto s = enumerate_staircases(k);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::vector<Scalar> random_p(std::mt19937_64& rng, std::size_t n) {
  // Small range so that rank drops actually occur.
  std::uniform_int_distribution<int> dist(-1, 1);
  std::vector<Scalar> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(Scalar(dist(rng)));
  return p;
}

// beta_{1,j} - beta_{0,j} read off (1-z)^2 h(z), independent of any matrix.
std::map<int, int> betti_difference(const std::vector<int>& h) {
  std::map<int, int> out;
  for (int j = 1; j < static_cast<int>(h.size()) + 3; ++j) {
    auto at = [&](int k) { return k >= 0 && k < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(k)] : 0; };
    int coeff = at(j) - 2 * at(j - 1) + at(j - 2);
    if (coeff != 0) out[j] = coeff;
  }
  return out;
}

Staircase example_e() { return Staircase::from_d({1, 2, 1, 0, 1, 2}); }

}  // namespace

TEST_CASE("resolution_degrees examples") {
  ResolutionDegrees r = resolution_degrees(example_e());
  CHECK(example_e().m() == std::vector<int>{0, 1, 3, 4, 4, 5, 7});
  CHECK(r.a == std::vector<int>{6, 6, 7, 7, 6, 6, 7});
  CHECK(r.b == std::vector<int>{7, 8, 8, 7, 7, 8});
  ResolutionDegrees r1 = resolution_degrees(Staircase::from_m({0, 1}));
  CHECK(r1.a == std::vector<int>{1, 1});
  CHECK(r1.b == std::vector<int>{2});
  Staircase l = Staircase::from_m({0, 1, 2, 4, 5, 6, 7, 9, 10});
  ResolutionDegrees rl = resolution_degrees(l);
  CHECK(rl.a == std::vector<int>{8, 8, 8, 9, 9, 9, 9, 10, 10});
  CHECK(rl.b == std::vector<int>{9, 9, 10, 10, 10, 10, 11, 11});
}

TEST_CASE("a_i are the degrees of the full generator list") {
  for (const auto& e : staircases_up_to(12)) {
    auto r = resolution_degrees(e);
    auto g = generators(e, false);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(r.a[i] == static_cast<int>(g[i].degree()));
  }
}

TEST_CASE("graded_matrix for the degree-7 piece") {
  GradedPieceMatrix g = graded_matrix(example_e(), 7);
  CHECK(g.rows == std::vector<int>{3, 4, 7});
  CHECK(g.cols == std::vector<int>{1, 4, 5});
  Grid<PieceEntry> want(3, 3);
  want.at(1, 1) = param(1);
  want.at(2, 1) = param(2);
  want.at(2, 2) = kOne;
  want.at(3, 1) = param(3);
  want.at(3, 3) = param(7);
  CHECK(g.entries == want);
  CHECK(g.star_rows == std::vector<int>{3, 7});
  CHECK(g.star_cols == std::vector<int>{1, 5});
  Grid<PieceEntry> star(2, 2);
  star.at(1, 1) = param(1);
  star.at(2, 1) = param(3);
  star.at(2, 2) = param(7);
  CHECK(g.star() == star);
  CHECK(g.star().at(1, 2) == kZero);
}

TEST_CASE("graded_matrix edge cases") {
  GradedPieceMatrix g = graded_matrix(Staircase::from_m({0, 1}), 1);
  CHECK(g.rows == std::vector<int>{1, 2});
  CHECK(g.cols.empty());
  CHECK(g.entries.rows() == 2);
  CHECK(g.entries.cols() == 0);
  GradedPieceMatrix none = graded_matrix(Staircase::from_m({0, 1}), 40);
  CHECK(none.rows.empty());
}

TEST_CASE("the degree-19 star matrix has the displayed zero pattern") {
  Staircase e = Staircase::from_d({1, 1, 2, 1, 0, 1, 1, 1, 2, 1, 1, 0, 1, 1, 2, 1, 1, 1});
  GradedPieceMatrix g = graded_matrix(e, 19);
  Grid<PieceEntry> s = g.star();
  const char* pattern[] = {"**00000", "*****00", "*****00", "*******", "*******", "*******", "*******"};
  REQUIRE(s.rows() == 7);
  REQUIRE(s.cols() == 7);
  std::vector<int> seen;
  for (int r = 1; r <= 7; ++r) {
    for (int c = 1; c <= 7; ++c) {
      bool bullet = pattern[r - 1][c - 1] == '*';
      CHECK((s.at(r, c).kind == K::Param) == bullet);
      CHECK(s.at(r, c).kind != K::One);
      if (bullet) seen.push_back(s.at(r, c).param);
    }
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  StratumDescriptor d = stratum_descriptor(e, 19, 2);
  CHECK(d.rank_bound == 5);
}

TEST_CASE("betti_numbers examples") {
  Staircase e = example_e();
  std::vector<Scalar> zero(8, Scalar(0));
  BettiTable t0 = betti_numbers(e, zero);
  CHECK(t0.at(7).beta0 == 2);
  std::vector<Scalar> ones(8, Scalar(1));
  BettiTable t1 = betti_numbers(e, ones);
  CHECK(t1.count(7) == 0);
  CHECK_THROWS_AS(betti_numbers(e, {Scalar(1)}), UsageError);
  // p = 0 reproduces the monomial ideal's own table.
  IdealBasis mono(2, {});
  for (const auto& m : generators(e, true)) mono.elements.push_back(Polynomial::monomial(m));
  for (const auto& [j, b] : t0) CHECK(b.beta0 == static_cast<int>(graded_minimal_generators(mono, j)));
}

TEST_CASE("rank formula agrees with the linear-algebra oracle") {
  std::mt19937_64 rng(4);
  for (const auto& e : staircases_up_to(9)) {
    const std::size_t n = s_set(e).size();
    for (int rep = 0; rep < 4; ++rep) {
      auto p = random_p(rng, n);
      BettiTable table = betti_numbers(e, p);
      IdealBasis ideal = minors_ideal(cell_matrix_from_coordinates(e, CellKind::V3, p));
      REQUIRE(ideal.is_homogeneous());
      int sum0 = 0, sum1 = 0;
      for (int j : resolution_degree_range(e)) {
        int oracle = static_cast<int>(graded_minimal_generators(ideal, static_cast<std::uint32_t>(j)));
        int got = table.count(j) ? table.at(j).beta0 : 0;
        CHECK(got == oracle);
      }
      for (const auto& [j, b] : table) {
        sum0 += b.beta0;
        sum1 += b.beta1;
      }
      CHECK(sum0 - sum1 == 1);
      // Differences match the Hilbert function of R/E.
      auto diff = betti_difference(hilbert_function(e));
      std::map<int, int> got;
      for (const auto& [j, b] : table)
        if (b.beta1 != b.beta0) got[j] = b.beta1 - b.beta0;
      CHECK(got == diff);
    }
  }
}

TEST_CASE("graded pieces have disjoint parameters and staircase-shaped stars") {
  for (const auto& e : staircases_up_to(16)) {
    std::vector<int> all;
    for (int j : resolution_degree_range(e)) {
      GradedPieceMatrix g = graded_matrix(e, j);
      auto ps = g.parameters();
      all.insert(all.end(), ps.begin(), ps.end());
      CHECK(static_cast<int>(g.star_rows.size()) == monomial_beta0(e, j));
      Grid<PieceEntry> s = g.star();
      for (int r = 1; r <= s.rows(); ++r) {
        for (int c = 1; c <= s.cols(); ++c) {
          CHECK(s.at(r, c).kind != K::One);
          if (s.at(r, c).kind != K::Zero) continue;
          for (int h1 = 1; h1 <= r; ++h1)
            for (int h2 = c; h2 <= s.cols(); ++h2) CHECK(s.at(h1, h2).kind == K::Zero);
        }
      }
    }
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("beta0 of E counts the surviving rows") {
  for (const auto& e : staircases_up_to(20)) {
    IdealBasis mono(2, {});
    for (const auto& m : generators(e, true)) mono.elements.push_back(Polynomial::monomial(m));
    for (int j : resolution_degree_range(e)) {
      int expect = 0;
      for (const auto& m : generators(e, true)) expect += static_cast<int>(m.degree()) == j ? 1 : 0;
      CHECK(monomial_beta0(e, j) == expect);
    }
  }
}

TEST_CASE("stratum descriptors for the degree-7 piece") {
  Staircase e = example_e();
  auto names = parameter_names(8);
  StratumDescriptor d1 = stratum_descriptor(e, 7, 1);
  CHECK(d1.rank_bound == 1);
  auto eq1 = stratum_equations(d1, 8);
  REQUIRE(eq1.size() == 1);
  CHECK(eq1[0] == parse_polynomial("p1*p7", names));
  StratumDescriptor d2 = stratum_descriptor(e, 7, 2);
  CHECK(d2.rank_bound == 0);
  auto eq2 = stratum_equations(d2, 8);
  CHECK(eq2 == std::vector<Polynomial>{parse_polynomial("p1", names), parse_polynomial("p3", names),
                                       parse_polynomial("p7", names)});
  CHECK(stratum_equations(stratum_descriptor(e, 7, 0), 8).empty());
  CHECK(stratum_equations(stratum_descriptor(e, 7, 3), 8) == std::vector<Polynomial>{parse_polynomial("1", names)});
  CHECK(cell_dimension(e, CellKind::V3) == 8);
}

TEST_CASE("the lex-segment with dim 22") {
  Staircase l = Staircase::from_m({0, 1, 2, 4, 5, 6, 7, 9, 10});
  CHECK(l.is_lex_segment());
  CHECK(cell_dimension(l, CellKind::V3) == 22);
  GradedPieceMatrix g9 = graded_matrix(l, 9);
  GradedPieceMatrix g10 = graded_matrix(l, 10);
  CHECK(g9.entries.rows() == 4);
  CHECK(g9.entries.cols() == 2);
  CHECK(g10.entries.rows() == 2);
  CHECK(g10.entries.cols() == 4);
  CHECK(g9.parameters() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(g10.parameters() == std::vector<int>{13, 14, 15, 16, 17, 18, 19, 20});
  CHECK(g9.entries.at(1, 2) == param(5));
  CHECK(g10.entries.at(2, 3) == param(18));
  CHECK(g9.star_rows.size() == 4);
  CHECK(lex_codim(l, 9, 3) == 3);
  CHECK(lex_codim(l, 9, 4) == 8);
  CHECK(lex_codim(l, 9, 2) == 0);
  CHECK_THROWS_AS(lex_codim(l, 9, 1), DomainError);
  CHECK_THROWS_AS(lex_codim(l, 9, 5), DomainError);
  CHECK_THROWS_AS(lex_codim(Staircase::from_m({0, 3, 3, 5}), 3, 0), UsageError);
}

TEST_CASE("lex codimension matches the generic determinantal codimension") {
  for (const auto& l : staircases_up_to(16)) {
    if (!l.is_lex_segment()) continue;
    for (int j : resolution_degree_range(l)) {
      GradedPieceMatrix g = graded_matrix(l, j);
      int b0 = static_cast<int>(g.rows.size()), b1 = static_cast<int>(g.cols.size());
      for (int u = std::max(0, b0 - b1); u <= b0; ++u) {
        int r = b0 - u;
        CHECK(lex_codim(l, j, u) == (b0 - r) * (b1 - r));
      }
    }
  }
}

TEST_CASE("g_dim examples") {
  CHECK(g_dim(HSeries({1, 2, 1}), GDimMethod::Bella) == 2);
  CHECK(g_dim(HSeries({1, 2, 1}), GDimMethod::Brutta) == 2);
  CHECK(g_dim(HSeries({1, 2, 3, 2, 1}), GDimMethod::Bella) == 4);
  CHECK(g_dim(HSeries({1, 2, 3, 2, 1}), GDimMethod::Brutta) == 4);
  CHECK(g_dim(HSeries({1}), GDimMethod::Bella) == 0);
  CHECK(g_dim(HSeries({1}), GDimMethod::Brutta) == 0);
  CHECK(g_dim(HSeries({1, 2}), GDimMethod::Bella) == 0);
  CHECK(g_dim(HSeries({1, 2}), GDimMethod::Brutta) == 0);
}
