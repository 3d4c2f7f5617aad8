#include <random>

#include "doctest.h"
#include "hbcells/errors.hpp"
#include "hbcells/groebner.hpp"
#include "hbcells/staircase.hpp"

using namespace hbcells;

namespace {

// Partition counts p(0..20).
const int kPartitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};

Staircase random_staircase(std::mt19937_64& rng, int max_colength) {
  std::uniform_int_distribution<int> part(0, 3);
  std::vector<int> m{0, 1 + part(rng)};
  int total = m[1];
  while (true) {
    int next = m.back() + part(rng);
    if (total + next > max_colength) break;
    m.push_back(next);
    total += next;
  }
  return Staircase::from_m(m);
}

}  // namespace

TEST_CASE("staircase validation") {
  CHECK_THROWS_AS(Staircase::from_m({0}), UsageError);
  CHECK_THROWS_AS(Staircase::from_m({1, 2}), UsageError);
  CHECK_THROWS_AS(Staircase::from_m({0, 0, 1}), UsageError);
  CHECK_THROWS_AS(Staircase::from_m({0, 3, 2}), UsageError);
  CHECK_THROWS_AS(Staircase::from_d({0, 1}), UsageError);
  Staircase e = Staircase::from_d({3, 0, 2});
  CHECK(e.m() == std::vector<int>{0, 3, 3, 5});
  CHECK(e.colength() == 11u);
  CHECK(e.to_string() == "m=[0,3,3,5]");
  CHECK(parse_staircase("d=[3,0,2]") == e);
  CHECK(parse_staircase("m=[0,3,3,5]") == e);
  CHECK(parse_staircase("0, 3, 3, 5") == e);
  CHECK_THROWS_AS(parse_staircase("0,3,,5"), ParseError);
}

TEST_CASE("staircase_from_monomial_ideal examples") {
  Staircase e = staircase_from_monomial_ideal(MonomialIdeal(2, {Monomial{3, 0}, Monomial{1, 3}, Monomial{0, 5}}));
  CHECK(e.m() == std::vector<int>{0, 3, 3, 5});
  CHECK(e.d_vector() == std::vector<int>{3, 0, 2});
  CHECK(staircase_from_monomial_ideal(MonomialIdeal(2, {Monomial{1, 0}, Monomial{0, 1}})).m() ==
        std::vector<int>{0, 1});
  Staircase f = staircase_from_monomial_ideal(MonomialIdeal(2, {Monomial{2, 0}, Monomial{0, 1}}));
  CHECK(f.m() == std::vector<int>{0, 1, 1});
  CHECK(f.d_vector() == std::vector<int>{1, 0});
  CHECK_THROWS_AS(staircase_from_monomial_ideal(MonomialIdeal(2, {Monomial{2, 0}})), DomainError);
  CHECK_THROWS_AS(staircase_from_monomial_ideal(MonomialIdeal(2, {Monomial{0, 0}})), DomainError);
  CHECK_THROWS_AS(staircase_from_monomial_ideal(MonomialIdeal(3, {Monomial{1, 0, 0}})), UsageError);
}

TEST_CASE("generators examples") {
  Staircase e = Staircase::from_m({0, 3, 3, 5});
  CHECK(generators(e, false) == std::vector<Monomial>{{3, 0}, {2, 3}, {1, 3}, {0, 5}});
  CHECK(generators(e, true) == std::vector<Monomial>{{3, 0}, {1, 3}, {0, 5}});
  CHECK(generators(Staircase::from_m({0, 1}), true) == std::vector<Monomial>{{1, 0}, {0, 1}});
  Staircase g = Staircase::from_m({0, 1, 3, 4, 4, 5, 7});
  CHECK(generators(g, true) == std::vector<Monomial>{{6, 0}, {5, 1}, {4, 3}, {2, 4}, {1, 5}, {0, 7}});
  // Minimal generators are mutually non-dividing.
  auto mins = generators(g, true);
  for (std::size_t a = 0; a < mins.size(); ++a)
    for (std::size_t b = 0; b < mins.size(); ++b)
      if (a != b) CHECK_FALSE(mins[a].divides(mins[b]));
}

TEST_CASE("staircase round trip through monomial ideals") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 300; ++k) {
    Staircase e = random_staircase(rng, 30);
    MonomialIdeal ideal(2, generators(e, false));
    CHECK(staircase_from_monomial_ideal(ideal) == e);
    CHECK(colength(ideal) == e.colength());
  }
}

TEST_CASE("hilbert_function examples") {
  CHECK(hilbert_function(Staircase::from_m({0, 1, 1})) == std::vector<int>{1, 1});
  CHECK(hilbert_function(Staircase::from_m({0, 1, 2})) == std::vector<int>{1, 2});
  auto h = hilbert_function(Staircase::from_m({0, 3, 3, 5}));
  int sum = 0;
  for (int v : h) sum += v;
  CHECK(sum == 11);
}

TEST_CASE("hseries validation") {
  HSeries h({1, 2, 3, 2, 1});
  CHECK(h.c() == 3);
  CHECK(h.s() == 4);
  CHECK(h.total() == 9);
  CHECK(h.first_difference() == std::vector<int>{1, 1, 1, -1, -1, -1});
  CHECK(HSeries({1}).c() == 1);
  CHECK(HSeries({1, 2}).c() == 2);
  CHECK_THROWS_AS(HSeries({2}), DomainError);
  CHECK_THROWS_AS(HSeries({1, 3}), DomainError);
  CHECK_THROWS_AS(HSeries({1, 2, 0}), DomainError);
  CHECK_THROWS_AS(HSeries({1, 1, 2}), DomainError);
  CHECK_THROWS_AS(HSeries({1, 2, 2, 3}), DomainError);
  try {
    HSeries({1, 1, 2});
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("nonincreasing") != std::string::npos);
  }
}

TEST_CASE("lex_segment_from_hseries examples") {
  CHECK(lex_segment_from_hseries(HSeries({1, 2, 1})).m() == std::vector<int>{0, 1, 3});
  CHECK(lex_segment_from_hseries(HSeries({1, 1})).m() == std::vector<int>{0, 2});
  CHECK(lex_segment_from_hseries(HSeries({1, 2, 3, 2, 1})).m() == std::vector<int>{0, 1, 3, 5});
  CHECK(lex_segment_from_hseries(HSeries({1})).m() == std::vector<int>{0, 1});
}

TEST_CASE("lex segments are lex segments and round-trip the Hilbert function") {
  // Every admissible h with total <= 14, built recursively.
  int count = 0;
  auto rec = [&](auto&& self, std::vector<int> h, int total) -> void {
    HSeries hs(h);
    Staircase l = lex_segment_from_hseries(hs);
    CHECK(l.is_lex_segment());
    CHECK(hilbert_function(l) == h);
    CHECK(l.colength() == static_cast<std::uint64_t>(total));
    // Each graded piece is spanned by the lex-largest monomials.
    MonomialIdeal ideal = to_monomial_ideal(l);
    for (int j = 0; j < static_cast<int>(h.size()) + 1; ++j) {
      bool seen_outside = false;
      for (int a = j; a >= 0; --a) {
        bool in = ideal.contains(Monomial{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(j - a)});
        if (!in) seen_outside = true;
        if (in) CHECK_FALSE(seen_outside);
      }
    }
    ++count;
    int j = static_cast<int>(h.size());
    int cap = hs.c() < j ? h.back() : j + 1;
    for (int v = 1; v <= cap && total + v <= 14; ++v) {
      auto next = h;
      next.push_back(v);
      self(self, next, total + v);
    }
  };
  rec(rec, {1}, 1);
  CHECK(count > 100);
}

TEST_CASE("enumerate_staircases examples and counts") {
  CHECK(enumerate_staircases(1) == std::vector<Staircase>{Staircase::from_m({0, 1})});
  auto two = enumerate_staircases(2);
  CHECK(two.size() == 2);
  CHECK(two[0].m() == std::vector<int>{0, 1, 1});
  CHECK(two[1].m() == std::vector<int>{0, 2});
  CHECK(enumerate_staircases(5).size() == 7);
  for (int d = 1; d <= 20; ++d) {
    auto all = enumerate_staircases(d);
    CHECK(all.size() == static_cast<std::size_t>(kPartitions[d]));
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].colength() == static_cast<std::uint64_t>(d));
      if (i > 0) CHECK(all[i - 1] < all[i]);
    }
  }
  CHECK_THROWS_AS(enumerate_staircases(0), UsageError);
}

TEST_CASE("enumerate_hseries matches the lex-segment staircases") {
  for (int total : {1, 5, 10, 14}) {
    std::size_t lex = 0;
    for (int d = 1; d <= total; ++d)
      for (const auto& e : enumerate_staircases(d)) lex += e.is_lex_segment() ? 1 : 0;
    auto hs = enumerate_hseries(total);
    CHECK(hs.size() == lex);
    for (const auto& h : hs) {
      CHECK(h.total() <= total);
      CHECK(hilbert_function(lex_segment_from_hseries(h)) == h.values());
    }
  }
  CHECK_THROWS_AS(enumerate_hseries(0), UsageError);
}
