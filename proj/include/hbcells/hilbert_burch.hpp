#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hbcells/grid.hpp"
#include "hbcells/groebner.hpp"
#include "hbcells/polynomial.hpp"
#include "hbcells/scalar.hpp"
#include "hbcells/staircase.hpp"
#include "hbcells/unipoly.hpp"

namespace hbcells {

using PolyMatrix = Grid<Polynomial>;
using IntMatrix = Grid<int>;

// Grobner cells of ideals I of k[x,y] with Lt(I) = E:
//   V0  all such I
//   V1  y in sqrt(I)
//   V2  sqrt(I) = (x,y)
//   V3  I homogeneous
enum class CellKind { V0, V1, V2, V3 };

inline constexpr CellKind kAllCellKinds[] = {CellKind::V0, CellKind::V1, CellKind::V2, CellKind::V3};

std::string to_string(CellKind kind);
CellKind parse_cell_kind(const std::string& text);

// M0(E): (t+1) x t with y^{d_i} at (i,i), -x at (i+1,i), zero elsewhere.
// U(E): u_{ij} = m_j - m_{i-1} + i - j.
// S(E): {(i,j) : 1 <= j < i <= t+1, 0 <= u_{ij} < d_j}, column-major order.
struct CanonicalFrame {
  Staircase e;
  PolyMatrix m0;
  IntMatrix u;
  std::vector<IndexPair> s;
};

CanonicalFrame canonical_frame(const Staircase& e);
int degree_matrix_entry(const Staircase& e, int i, int j);
std::vector<IndexPair> s_set(const Staircase& e);

// dim V0 = colength + m_t, dim V1 = colength, dim V2 = colength - t,
// dim V3 = #S(E).
std::uint64_t cell_dimension(const Staircase& e, CellKind kind);

// Element N of T0(E): (t+1) x t matrix of polynomials in y with n_{ij} = 0
// for i < j and deg n_{ij} < d_j otherwise. Indices are 1-based.
class CellMatrix {
 public:
  explicit CellMatrix(Staircase e);
  // Throws StructuralError if `entries` breaks the T0 shape.
  CellMatrix(Staircase e, Grid<UniPoly> entries);

  const Staircase& staircase() const { return e_; }
  const Grid<UniPoly>& entries() const { return n_; }
  const UniPoly& at(int i, int j) const { return n_.at(i, j); }
  // Throws StructuralError on a shape violation.
  void set(int i, int j, UniPoly value);

  std::uint32_t field() const;  // modulus of the first nonzero coefficient, 0 if none

  friend bool operator==(const CellMatrix&, const CellMatrix&) = default;

 private:
  static void check_entry(const Staircase& e, int i, int j, const UniPoly& value);

  Staircase e_;
  Grid<UniPoly> n_;
};

// A coefficient slot of T_kind(E): the coefficient of y^power in n_{row,col}.
struct CellSlot {
  int row;
  int col;
  int power;
  friend bool operator==(const CellSlot&, const CellSlot&) = default;
};

// Free coordinates of the affine space T_kind(E); their number equals
// cell_dimension(e, kind). V3 slots follow the column-major order of S(E).
std::vector<CellSlot> free_slots(const Staircase& e, CellKind kind);

// Places values[k] at free_slots(e, kind)[k].
CellMatrix cell_matrix_from_coordinates(const Staircase& e, CellKind kind,
                                        const std::vector<Scalar>& values);

struct CellValidation {
  bool valid = true;
  std::string condition;  // violated condition, empty when valid
  int row = 0;
  int col = 0;
};

// Membership N in T_kind(E). Condition (1): n_{ii} = 0. Condition (2): for
// d_j > 0, n_{ij}(0) = 0 for j < i <= k+1 where k = max{v >= j : m_v = m_j}.
// Condition (3): n_{ij} = p_{ij} y^{u_{ij}} on S(E), zero elsewhere.
CellValidation validate_cell_matrix(const CellMatrix& n, CellKind kind);

// M0(E) + N as a matrix over k[x,y].
PolyMatrix hilbert_burch_matrix(const CellMatrix& n);

// f_0..f_t with f_i = (-1)^{t-i} times the minor of `a` deleting row i+1.
// `a` must be (t+1) x t with a_{ij} = 0 for i < j; computed by expanding
// along the sub-diagonal structure in O(t^2) products.
std::vector<Polynomial> signed_maximal_minors(const PolyMatrix& a);

// The map phi: N -> ideal of t-minors of M0(E) + N, returned as f_0..f_t.
IdealBasis minors_ideal(const CellMatrix& n);

struct CanonicalForm {
  Staircase e;
  CellMatrix n;
};

// Inverse of phi. DomainError if Lt(I) has infinite colength or I = (1).
CanonicalForm canonical_matrix(const IdealBasis& gens);

// Direct predicates on the ideal, independent of any matrix: V1 iff the
// generator of I cap k[y] is a power of y; V2 iff additionally
// I + (y) = (x^u, y); V3 iff the reduced Grobner basis is homogeneous.
std::vector<CellKind> cell_kind_of_ideal(const IdealBasis& gens);

// det of (M0 + N)|_{y=0} with the first row deleted, as a polynomial in x
// (fraction-free elimination). For N in T1 this is +-x^t iff sqrt(I) = (x,y).
UniPoly block_determinant_at_y0(const CellMatrix& n);

// Deterministic pseudo-random N in T_kind(E). Over Q coefficients are
// integers in [-3, 3]; over F_p they are uniform.
CellMatrix random_cell_matrix(const Staircase& e, CellKind kind, std::uint64_t seed,
                              Field field = Field::rationals());

}  // namespace hbcells
