#include <algorithm>
#include <random>

#include "doctest.h"
#include "hbcells/errors.hpp"
#include "hbcells/hilbert_burch.hpp"
#include "hbcells/parse.hpp"

using namespace hbcells;

namespace {

const std::vector<std::string> kXY{"x", "y"};
Polynomial P(const std::string& s) { return parse_polynomial(s, kXY); }
IdealBasis I(const std::string& s) { return IdealBasis(2, parse_polynomial_list(s, kXY)); }
UniPoly U(const std::string& s) { return UniPoly::from_polynomial(P(s), 1); }

// Cofactor expansion along the first row; the independent minor oracle.
Polynomial laplace_det(const std::vector<std::vector<Polynomial>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Polynomial det(2);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      sub.push_back(row);
    }
    Polynomial term = a[0][c] * laplace_det(sub);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

Polynomial minor_deleting_row(const PolyMatrix& a, int row) {
  std::vector<std::vector<Polynomial>> m;
  for (int i = 1; i <= a.rows(); ++i) {
    if (i == row) continue;
    std::vector<Polynomial> r;
    for (int j = 1; j <= a.cols(); ++j) r.push_back(a.at(i, j));
    m.push_back(r);
  }
  return laplace_det(m);
}

std::vector<Staircase> staircases_up_to(int d) {
  std::vector<Staircase> out;
  for (int k = 1; k <= d; ++k) {
    auto s = enumerate_staircases(k);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

bool contains_kind(const std::vector<CellKind>& ks, CellKind k) { return std::find(ks.begin(), ks.end(), k) != ks.end(); }

}  // namespace

TEST_CASE("canonical_frame for m=(0,3,3,5)") {
  Staircase e = Staircase::from_m({0, 3, 3, 5});
  CanonicalFrame f = canonical_frame(e);
  const char* m0[4][3] = {{"y^3", "0", "0"}, {"-x", "1", "0"}, {"0", "-x", "y^2"}, {"0", "0", "-x"}};
  const int u[4][3] = {{3, 2, 3}, {1, 0, 1}, {2, 1, 2}, {1, 0, 1}};
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 3; ++j) {
      CHECK(f.m0.at(i, j) == P(m0[i - 1][j - 1]));
      CHECK(f.u.at(i, j) == u[i - 1][j - 1]);
    }
  }
  CHECK(f.s == std::vector<IndexPair>{{2, 1}, {3, 1}, {4, 1}, {4, 3}});
  CHECK(signed_maximal_minors(f.m0) == std::vector<Polynomial>{P("x^3"), P("x^2*y^3"), P("x*y^3"), P("y^5")});
}

TEST_CASE("canonical_frame for m=(0,1)") {
  CanonicalFrame f = canonical_frame(Staircase::from_m({0, 1}));
  CHECK(f.m0.at(1, 1) == P("y"));
  CHECK(f.m0.at(2, 1) == P("-x"));
  CHECK(f.s.empty());
}

TEST_CASE("S(E) is numbered column-major") {
  auto s = s_set(Staircase::from_d({1, 2, 1, 0, 1, 2}));
  CHECK(s.size() == 8);
  CHECK(s == std::vector<IndexPair>{{3, 1}, {4, 1}, {7, 1}, {3, 2}, {4, 2}, {7, 2}, {7, 5}, {7, 6}});
}

TEST_CASE("frame invariants") {
  for (const auto& e : staircases_up_to(12)) {
    CanonicalFrame f = canonical_frame(e);
    for (int i = 1; i <= e.t(); ++i) {
      CHECK(f.u.at(i, i) == e.d(i));
      CHECK(f.u.at(i + 1, i) == 1);
    }
    std::vector<Polynomial> expect;
    for (const auto& m : generators(e, false)) expect.push_back(Polynomial::monomial(m));
    CHECK(signed_maximal_minors(f.m0) == expect);
  }
}

TEST_CASE("cell_dimension examples") {
  Staircase e = Staircase::from_m({0, 3, 3, 5});
  CHECK(cell_dimension(e, CellKind::V0) == 16);
  CHECK(cell_dimension(e, CellKind::V1) == 11);
  CHECK(cell_dimension(e, CellKind::V2) == 8);
  CHECK(cell_dimension(e, CellKind::V3) == 4);
  CHECK(cell_dimension(Staircase::from_m({0, 1}), CellKind::V0) == 2);
  CHECK(cell_dimension(Staircase::from_m({0, 1, 3, 4, 4, 5, 7}), CellKind::V3) == 8);
}

TEST_CASE("free slots count the cell dimension") {
  for (const auto& e : staircases_up_to(14)) {
    for (CellKind k : kAllCellKinds) CHECK(free_slots(e, k).size() == cell_dimension(e, k));
  }
}

TEST_CASE("cell matrix shape is enforced") {
  Staircase e = Staircase::from_m({0, 3, 3, 5});
  CellMatrix n(e);
  CHECK_THROWS_AS(n.set(1, 2, U("1")), StructuralError);
  CHECK_THROWS_AS(n.set(2, 1, U("y^3")), StructuralError);
  CHECK_THROWS_AS(n.set(3, 2, U("1")), StructuralError);
  CHECK_THROWS_AS(n.set(5, 1, U("1")), StructuralError);
  n.set(4, 3, U("y + 1"));
  CHECK(n.at(4, 3) == U("y + 1"));
  CHECK_THROWS_AS(CellMatrix(e, Grid<UniPoly>(3, 3)), StructuralError);
}

TEST_CASE("validate_cell_matrix examples") {
  Staircase e = Staircase::from_m({0, 3, 3, 5});
  CellMatrix n(e);
  for (CellKind k : kAllCellKinds) CHECK(validate_cell_matrix(n, k).valid);
  n.set(2, 1, U("2*y"));
  n.set(3, 1, U("-y^2"));
  n.set(4, 1, U("5*y"));
  n.set(4, 3, U("1/3*y"));
  for (CellKind k : kAllCellKinds) CHECK(validate_cell_matrix(n, k).valid);

  CellMatrix bad(e);
  bad.set(1, 1, U("1"));
  CHECK(validate_cell_matrix(bad, CellKind::V0).valid);
  for (CellKind k : {CellKind::V1, CellKind::V2, CellKind::V3}) {
    CellValidation v = validate_cell_matrix(bad, k);
    CHECK_FALSE(v.valid);
    CHECK(v.row == 1);
    CHECK(v.col == 1);
  }
  CHECK(validate_cell_matrix(bad, CellKind::V1).condition.starts_with("(1)"));

  CellMatrix c2(e);
  c2.set(2, 1, U("1"));
  CHECK(validate_cell_matrix(c2, CellKind::V1).valid);
  CHECK_FALSE(validate_cell_matrix(c2, CellKind::V2).valid);
  CHECK(validate_cell_matrix(c2, CellKind::V2).condition.starts_with("(2)"));
  // Row 4 of column 1 lies beyond k+1 = 2, so a constant there is allowed in T2.
  CellMatrix c3(e);
  c3.set(4, 1, U("1"));
  CHECK(validate_cell_matrix(c3, CellKind::V2).valid);
  CHECK_FALSE(validate_cell_matrix(c3, CellKind::V3).valid);
  // The column-3 block runs down to row 4 because m_3 is the last index.
  CellMatrix c4(e);
  c4.set(4, 3, U("1"));
  CHECK_FALSE(validate_cell_matrix(c4, CellKind::V2).valid);
}

TEST_CASE("minors_ideal examples") {
  Staircase e = Staircase::from_m({0, 3, 3, 5});
  IdealBasis b = minors_ideal(CellMatrix(e));
  CHECK(b.elements == std::vector<Polynomial>{P("x^3"), P("x^2*y^3"), P("x*y^3"), P("y^5")});

  Staircase e2 = Staircase::from_m({0, 2});
  CellMatrix n2(e2);
  n2.set(2, 1, U("7 + 5*y"));
  IdealBasis b2 = minors_ideal(n2);
  CHECK(b2.elements == std::vector<Polynomial>{P("x - 7 - 5*y"), P("y^2")});

  CellMatrix n3(e);
  n3.set(2, 1, U("y"));
  IdealBasis b3 = minors_ideal(n3);
  CHECK(b3.is_homogeneous());
  IdealBasis g3 = buchberger_reduced(b3);
  CHECK(staircase_from_monomial_ideal(leading_term_ideal(g3)) == e);
}

TEST_CASE("structured minors agree with cofactor expansion") {
  std::mt19937_64 rng(17);
  int seed = 0;
  for (const auto& e : staircases_up_to(8)) {
    if (e.t() > 6) continue;
    for (CellKind k : kAllCellKinds) {
      CellMatrix n = random_cell_matrix(e, k, static_cast<std::uint64_t>(++seed));
      PolyMatrix a = hilbert_burch_matrix(n);
      auto f = signed_maximal_minors(a);
      for (int i = 0; i <= e.t(); ++i) {
        Polynomial oracle = minor_deleting_row(a, i + 1);
        if ((e.t() - i) % 2 != 0) oracle = -oracle;
        CHECK(f[static_cast<std::size_t>(i)] == oracle);
      }
    }
  }
  CHECK_THROWS_AS(signed_maximal_minors(PolyMatrix(2, 2, P("0"))), UsageError);
}

TEST_CASE("minors are monic Groebner bases with the expected leading terms") {
  int seed = 100;
  for (const auto& e : staircases_up_to(9)) {
    for (CellKind k : kAllCellKinds) {
      CellMatrix n = random_cell_matrix(e, k, static_cast<std::uint64_t>(++seed));
      IdealBasis b = minors_ideal(n);
      auto gens = generators(e, false);
      for (int i = 0; i <= e.t(); ++i) {
        const auto& fi = b.elements[static_cast<std::size_t>(i)];
        CHECK(fi.leading_monomial() == gens[static_cast<std::size_t>(i)]);
        CHECK(fi.leading_coefficient() == Scalar(1));
      }
      CHECK(is_groebner_basis(b));
      CHECK(staircase_from_monomial_ideal(leading_term_ideal(buchberger_reduced(b))) == e);

      // f_t is the product of the diagonal entries.
      PolyMatrix a = hilbert_burch_matrix(n);
      Polynomial diag = P("1");
      for (int i = 1; i <= e.t(); ++i) diag *= a.at(i, i);
      CHECK(b.elements.back() == diag);

      // Columns of M0 + N are syzygies of (f_0..f_t).
      for (int j = 1; j <= e.t(); ++j) {
        Polynomial s(2);
        for (int i = 1; i <= e.t() + 1; ++i) s += a.at(i, j) * b.elements[static_cast<std::size_t>(i - 1)];
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("canonical_matrix examples") {
  CanonicalForm c = canonical_matrix(I("x - 3, y - 2"));
  CHECK(c.e.m() == std::vector<int>{0, 1});
  CHECK(c.n.at(1, 1) == U("-2"));
  CHECK(c.n.at(2, 1) == U("3"));
  CHECK(minors_ideal(c.n).elements == std::vector<Polynomial>{P("x - 3"), P("y - 2")});

  CanonicalForm z = canonical_matrix(I("x^3, x*y^3, y^5"));
  CHECK(z.e.m() == std::vector<int>{0, 3, 3, 5});
  CHECK(z.n == CellMatrix(z.e));

  CHECK_THROWS_AS(canonical_matrix(I("x^2")), DomainError);
  CHECK_THROWS_AS(canonical_matrix(I("x - 1, x - 2")), DomainError);
}

TEST_CASE("canonical_matrix inverts minors_ideal") {
  int seed = 1000;
  for (const auto& e : staircases_up_to(10)) {
    for (int rep = 0; rep < 3; ++rep) {
      CellMatrix n = random_cell_matrix(e, CellKind::V0, static_cast<std::uint64_t>(++seed));
      IdealBasis gens = minors_ideal(n);
      CanonicalForm c = canonical_matrix(gens);
      CHECK(c.e == e);
      CHECK(c.n == n);
    }
  }
}

TEST_CASE("canonical_matrix on arbitrary generators") {
  // A generating set unrelated to any matrix: the ideal of three points (0,0), (1,0), (0,1).
  IdealBasis gens = I("x*(x-1), x*y, y*(y-1)");
  CanonicalForm c = canonical_matrix(gens);
  CHECK(c.e.colength() == 3);
  CHECK(buchberger_reduced(minors_ideal(c.n)) == buchberger_reduced(gens));
  CHECK(canonical_matrix(minors_ideal(c.n)).n == c.n);
}

TEST_CASE("cell_kind_of_ideal examples") {
  CHECK(cell_kind_of_ideal(I("x - 3, y - 2")) == std::vector<CellKind>{CellKind::V0});
  CHECK(cell_kind_of_ideal(I("x - y, y^2")) ==
        std::vector<CellKind>{CellKind::V0, CellKind::V1, CellKind::V2, CellKind::V3});
  CHECK(cell_kind_of_ideal(I("x - y^2, y^3")) == std::vector<CellKind>{CellKind::V0, CellKind::V1, CellKind::V2});
  // y in the radical but support off the origin along x.
  CHECK(cell_kind_of_ideal(I("x - 1, y^2")) == std::vector<CellKind>{CellKind::V0, CellKind::V1});
  CHECK_THROWS_AS(cell_kind_of_ideal(I("y^2")), DomainError);
}

TEST_CASE("cell kinds of minors match T_i membership") {
  int seed = 5000;
  for (const auto& e : staircases_up_to(8)) {
    for (CellKind k : kAllCellKinds) {
      for (int rep = 0; rep < 3; ++rep) {
        CellMatrix n = random_cell_matrix(e, k, static_cast<std::uint64_t>(++seed));
        auto kinds = cell_kind_of_ideal(minors_ideal(n));
        for (CellKind other : kAllCellKinds) {
          CHECK(contains_kind(kinds, other) == validate_cell_matrix(n, other).valid);
        }
        // The y = 0 block determinant criterion agrees with V2 inside T1.
        if (validate_cell_matrix(n, CellKind::V1).valid) {
          UniPoly w = block_determinant_at_y0(n);
          bool pure = !w.is_zero() && w == UniPoly::monomial(w.degree(), w.leading_coefficient()) &&
                      w.degree() == e.t();
          CHECK(pure == contains_kind(kinds, CellKind::V2));
        }
      }
    }
  }
}

TEST_CASE("random_cell_matrix") {
  Staircase e = Staircase::from_m({0, 3, 3, 5});
  CellMatrix a = random_cell_matrix(e, CellKind::V3, 42);
  CHECK(a == random_cell_matrix(e, CellKind::V3, 42));
  CHECK(validate_cell_matrix(a, CellKind::V3).valid);
  int populated = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 3; ++j) populated += a.at(i, j).is_zero() ? 0 : 1;
  CHECK(populated <= 4);
  CellMatrix b = random_cell_matrix(e, CellKind::V0, 3, Field::prime_field(5));
  CHECK(validate_cell_matrix(b, CellKind::V0).valid);
  CHECK((b.field() == 5 || b.field() == 0));
  for (const auto& s : {Staircase::from_m({0, 2, 2, 5, 6}), Staircase::from_d({1, 2, 1, 0, 1, 2})}) {
    for (CellKind k : kAllCellKinds) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(validate_cell_matrix(random_cell_matrix(s, k, seed), k).valid);
    }
  }
}

TEST_CASE("cell_matrix_from_coordinates") {
  Staircase e = Staircase::from_m({0, 3, 3, 5});
  std::vector<Scalar> v{Scalar(1), Scalar(2), Scalar(3), Scalar(4)};
  CellMatrix n = cell_matrix_from_coordinates(e, CellKind::V3, v);
  CHECK(n.at(2, 1) == U("y"));
  CHECK(n.at(3, 1) == U("2*y^2"));
  CHECK(n.at(4, 1) == U("3*y"));
  CHECK(n.at(4, 3) == U("4*y"));
  CHECK_THROWS_AS(cell_matrix_from_coordinates(e, CellKind::V3, {Scalar(1)}), UsageError);
}

TEST_CASE("cell kind names") {
  CHECK(parse_cell_kind("V2") == CellKind::V2);
  CHECK(parse_cell_kind("3") == CellKind::V3);
  CHECK(parse_cell_kind("T1") == CellKind::V1);
  CHECK_THROWS_AS(parse_cell_kind("V9"), UsageError);
}
