#include "hbcells/hilbert_burch.hpp"

#include <algorithm>
#include <random>

#include "hbcells/errors.hpp"

namespace hbcells {

namespace {

constexpr std::size_t kX = 0;
constexpr std::size_t kY = 1;

Polynomial y_power(int e) { return Polynomial::monomial(Monomial{0, static_cast<std::uint32_t>(e)}); }
Polynomial x_power(int e) { return Polynomial::monomial(Monomial{static_cast<std::uint32_t>(e), 0}); }
Polynomial lift(const UniPoly& p) { return p.to_polynomial(2, kY); }

}  // namespace

std::string to_string(CellKind kind) {
  switch (kind) {
    case CellKind::V0: return "V0";
    case CellKind::V1: return "V1";
    case CellKind::V2: return "V2";
    case CellKind::V3: return "V3";
  }
  return "?";
}

CellKind parse_cell_kind(const std::string& text) {
  for (CellKind k : kAllCellKinds) {
    auto name = to_string(k);
    if (text == name || text == name.substr(1) || text == "T" + name.substr(1)) return k;
  }
  throw UsageError("unknown cell kind '" + text + "' (expected V0..V3)");
}

int degree_matrix_entry(const Staircase& e, int i, int j) { return e.m(j) - e.m(i - 1) + i - j; }

std::vector<IndexPair> s_set(const Staircase& e) {
  std::vector<IndexPair> s;
  const int t = e.t();
  for (int j = 1; j <= t; ++j) {
    for (int i = j + 1; i <= t + 1; ++i) {
      int u = degree_matrix_entry(e, i, j);
      if (u >= 0 && u < e.d(j)) s.push_back({i, j});
    }
  }
  return s;
}

CanonicalFrame canonical_frame(const Staircase& e) {
  const int t = e.t();
  CanonicalFrame f{e, PolyMatrix(t + 1, t, Polynomial(2)), IntMatrix(t + 1, t), s_set(e)};
  for (int i = 1; i <= t; ++i) {
    f.m0.at(i, i) = y_power(e.d(i));
    f.m0.at(i + 1, i) = -x_power(1);
  }
  for (int i = 1; i <= t + 1; ++i) {
    for (int j = 1; j <= t; ++j) f.u.at(i, j) = degree_matrix_entry(e, i, j);
  }
  return f;
}

std::uint64_t cell_dimension(const Staircase& e, CellKind kind) {
  const auto len = e.colength();
  switch (kind) {
    case CellKind::V0: return len + static_cast<std::uint64_t>(e.m(e.t()));
    case CellKind::V1: return len;
    case CellKind::V2: return len - static_cast<std::uint64_t>(e.t());
    case CellKind::V3: return s_set(e).size();
  }
  return 0;
}

CellMatrix::CellMatrix(Staircase e) : e_(std::move(e)), n_(e_.t() + 1, e_.t()) {}

CellMatrix::CellMatrix(Staircase e, Grid<UniPoly> entries) : e_(std::move(e)), n_(std::move(entries)) {
  if (n_.rows() != e_.t() + 1 || n_.cols() != e_.t()) {
    throw StructuralError("cell matrix must be " + std::to_string(e_.t() + 1) + " x " + std::to_string(e_.t()));
  }
  for (int i = 1; i <= n_.rows(); ++i) {
    for (int j = 1; j <= n_.cols(); ++j) check_entry(e_, i, j, n_.at(i, j));
  }
}

void CellMatrix::check_entry(const Staircase& e, int i, int j, const UniPoly& value) {
  if (i < 1 || i > e.t() + 1 || j < 1 || j > e.t()) throw StructuralError("cell matrix index out of range");
  if (value.is_zero()) return;
  if (i < j) {
    throw StructuralError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") above the diagonal must be zero");
  }
  if (value.degree() >= e.d(j)) {
    throw StructuralError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") must have degree < d_" +
                          std::to_string(j) + " = " + std::to_string(e.d(j)));
  }
}

void CellMatrix::set(int i, int j, UniPoly value) {
  check_entry(e_, i, j, value);
  n_.at(i, j) = std::move(value);
}

std::uint32_t CellMatrix::field() const {
  for (int i = 1; i <= n_.rows(); ++i) {
    for (int j = 1; j <= n_.cols(); ++j) {
      for (const auto& c : n_.at(i, j).coefficients()) {
        if (!c.is_zero()) return c.modulus();
      }
    }
  }
  return 0;
}

std::vector<CellSlot> free_slots(const Staircase& e, CellKind kind) {
  std::vector<CellSlot> slots;
  const int t = e.t();
  if (kind == CellKind::V3) {
    for (const auto& [i, j] : s_set(e)) slots.push_back({i, j, degree_matrix_entry(e, i, j)});
    return slots;
  }
  for (int j = 1; j <= t; ++j) {
    int k = j;
    while (k < t && e.m(k + 1) == e.m(j)) ++k;
    for (int i = j; i <= t + 1; ++i) {
      if (i == j && kind != CellKind::V0) continue;
      for (int p = 0; p < e.d(j); ++p) {
        if (kind == CellKind::V2 && p == 0 && i > j && i <= k + 1) continue;
        slots.push_back({i, j, p});
      }
    }
  }
  return slots;
}

CellMatrix cell_matrix_from_coordinates(const Staircase& e, CellKind kind, const std::vector<Scalar>& values) {
  auto slots = free_slots(e, kind);
  if (values.size() != slots.size()) {
    throw UsageError("expected " + std::to_string(slots.size()) + " coordinates, got " + std::to_string(values.size()));
  }
  Grid<UniPoly> g(e.t() + 1, e.t());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto& s = slots[k];
    g.at(s.row, s.col) += UniPoly::monomial(s.power, values[k]);
  }
  return CellMatrix(e, std::move(g));
}

CellValidation validate_cell_matrix(const CellMatrix& n, CellKind kind) {
  const Staircase& e = n.staircase();
  const int t = e.t();
  auto fail = [](std::string cond, int i, int j) { return CellValidation{false, std::move(cond), i, j}; };

  if (kind == CellKind::V3) {
    auto s = s_set(e);
    for (int j = 1; j <= t; ++j) {
      for (int i = j; i <= t + 1; ++i) {
        const UniPoly& v = n.at(i, j);
        if (v.is_zero()) continue;
        bool in_s = std::find(s.begin(), s.end(), IndexPair{i, j}) != s.end();
        if (!in_s) return fail("(3) entry must vanish outside S(E)", i, j);
        int u = degree_matrix_entry(e, i, j);
        if (v != UniPoly::monomial(u, v.coefficient(u))) {
          return fail("(3) entry must be a scalar multiple of y^" + std::to_string(u), i, j);
        }
      }
    }
    return {};
  }
  if (kind == CellKind::V0) return {};

  for (int i = 1; i <= t; ++i) {
    if (!n.at(i, i).is_zero()) return fail("(1) diagonal entry must vanish", i, i);
  }
  if (kind == CellKind::V1) return {};

  for (int j = 1; j <= t; ++j) {
    if (e.d(j) == 0) continue;
    int k = j;
    while (k < t && e.m(k + 1) == e.m(j)) ++k;
    for (int i = j + 1; i <= k + 1; ++i) {
      if (!n.at(i, j).constant_term().is_zero()) return fail("(2) entry must have no constant term", i, j);
    }
  }
  return {};
}

PolyMatrix hilbert_burch_matrix(const CellMatrix& n) {
  PolyMatrix a = canonical_frame(n.staircase()).m0;
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) a.at(i, j) += lift(n.at(i, j));
  }
  return a;
}

std::vector<Polynomial> signed_maximal_minors(const PolyMatrix& a) {
  const int t = a.cols();
  if (a.rows() != t + 1 || t < 1) throw UsageError("expected a (t+1) x t matrix");
  const std::size_t nv = a.at(1, 1).nvars();
  for (int i = 1; i <= t + 1; ++i) {
    for (int j = i + 1; j <= t; ++j) {
      if (!a.at(i, j).is_zero()) throw UsageError("matrix must vanish above the diagonal");
    }
  }
  const Polynomial one = Polynomial::constant(nv, Scalar(1));
  // dets[r] = det of rows r+1..t+1, columns r..t; dets[t+1] = 1.
  std::vector<Polynomial> dets(static_cast<std::size_t>(t) + 2, one);
  for (int r = t; r >= 1; --r) {
    Polynomial acc(nv);
    Polynomial diag_run = one;  // prod_{k=r+1}^{i-1} a_kk
    for (int i = r + 1; i <= t + 1; ++i) {
      if (!a.at(i, r).is_zero()) {
        Polynomial term = a.at(i, r) * diag_run * dets[static_cast<std::size_t>(i)];
        if ((i - r - 1) % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      if (i <= t) diag_run *= a.at(i, i);
      if (diag_run.is_zero()) break;
    }
    dets[static_cast<std::size_t>(r)] = std::move(acc);
  }
  std::vector<Polynomial> f;
  Polynomial diag_prefix = one;  // prod_{k=1}^{i} a_kk
  for (int i = 0; i <= t; ++i) {
    if (i > 0) diag_prefix *= a.at(i, i);
    Polynomial fi = diag_prefix * dets[static_cast<std::size_t>(i) + 1];
    f.push_back((t - i) % 2 == 0 ? fi : -fi);
  }
  return f;
}

IdealBasis minors_ideal(const CellMatrix& n) { return IdealBasis(2, signed_maximal_minors(hilbert_burch_matrix(n))); }

namespace {

// Writes p = sum_j q_j f_j with q_j in k[y], using only y-power multiples
// of the f_j (Lt f_j = x^{t-j} y^{m_j}, monic).
std::vector<UniPoly> y_reduce(Polynomial p, const std::vector<Polynomial>& f, const Staircase& e, int lowest) {
  const int t = e.t();
  std::vector<UniPoly> q(static_cast<std::size_t>(t) + 1);
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    int i = t - static_cast<int>(lt.mono[kX]);
    int b = static_cast<int>(lt.mono[kY]);
    if (i < lowest || i > t || b < e.m(i)) {
      throw DomainError("leading term " + lt.mono.to_string({"x", "y"}) + " is not reducible by the staircase basis");
    }
    int shift = b - e.m(i);
    q[static_cast<std::size_t>(i)] += UniPoly::monomial(shift, lt.coef);
    p -= f[static_cast<std::size_t>(i)].mul_term(Monomial{0, static_cast<std::uint32_t>(shift)}, lt.coef);
  }
  return q;
}

}  // namespace

CanonicalForm canonical_matrix(const IdealBasis& gens) {
  if (gens.nvars != 2) throw UsageError("canonical_matrix works in k[x,y]");
  IdealBasis gb = buchberger_reduced(gens);
  MonomialIdeal lt = leading_term_ideal(gb);
  if (lt.is_unit()) throw DomainError("the unit ideal has no Hilbert-Burch matrix");
  if (!lt.pure_power(kX) || !lt.pure_power(kY)) throw DomainError("ideal has infinite colength");
  Staircase e = staircase_from_monomial_ideal(lt);
  const int t = e.t();

  // Seed: f_i = x^{j-i} g_j where j = max{v : m_v = m_i} indexes a minimal generator.
  std::vector<Polynomial> f(static_cast<std::size_t>(t) + 1);
  for (int i = 0; i <= t; ++i) {
    int j = i;
    while (j < t && e.m(j + 1) == e.m(i)) ++j;
    Monomial target{static_cast<std::uint32_t>(t - j), static_cast<std::uint32_t>(e.m(j))};
    auto it = std::find_if(gb.elements.begin(), gb.elements.end(),
                           [&](const Polynomial& g) { return g.leading_monomial() == target; });
    f[static_cast<std::size_t>(i)] = it->mul_term(Monomial{static_cast<std::uint32_t>(j - i), 0}, Scalar(1));
  }

  Grid<UniPoly> n(t + 1, t);
  for (int k = t; k >= 1; --k) {
    const auto km1 = static_cast<std::size_t>(k - 1);
    Polynomial p = f[km1].mul_term(Monomial{0, static_cast<std::uint32_t>(e.d(k))}, Scalar(1)) -
                   f[static_cast<std::size_t>(k)].mul_term(Monomial{1, 0}, Scalar(1));
    // p = sum q_j f_j, so y^{d_k} f_{k-1} - x f_k + sum g_j f_j = 0 with g_j = -q_j.
    auto q = y_reduce(std::move(p), f, e, k - 1);
    UniPoly g_diag = -q[km1];
    UniPoly h = UniPoly::monomial(e.d(k)) + g_diag;
    n.at(k, k) = g_diag;
    Polynomial fold(2);
    for (int j = k; j <= t; ++j) {
      auto [quot, rem] = divide_univariate(-q[static_cast<std::size_t>(j)], h);
      n.at(j + 1, k) = rem;
      fold += lift(quot) * f[static_cast<std::size_t>(j)];
    }
    f[km1] += fold;
  }
  return {e, CellMatrix(e, std::move(n))};
}

std::vector<CellKind> cell_kind_of_ideal(const IdealBasis& gens) {
  if (gens.nvars != 2) throw UsageError("cell kinds are defined in k[x,y]");
  IdealBasis gb = buchberger_reduced(gens);
  MonomialIdeal lt = leading_term_ideal(gb);
  if (lt.is_unit() || !lt.pure_power(kX) || !lt.pure_power(kY)) {
    throw DomainError("ideal does not have finite positive colength");
  }
  std::vector<CellKind> kinds{CellKind::V0};
  // The last reduced-basis element generates I cap k[y].
  const Polynomial& fy = gb.elements.back();
  bool v1 = fy.size() == 1;
  if (v1) kinds.push_back(CellKind::V1);
  if (v1) {
    IdealBasis plus_y = gens;
    plus_y.elements.push_back(Polynomial::variable(2, kY));
    IdealBasis g2 = buchberger_reduced(plus_y);
    bool v2 = g2.elements.size() == 2 && g2.elements[0].size() == 1 && g2.elements[0].degree_in(kY) == 0 &&
              g2.elements[0].degree_in(kX) > 0;
    if (v2) kinds.push_back(CellKind::V2);
  }
  if (gb.is_homogeneous()) kinds.push_back(CellKind::V3);
  return kinds;
}

UniPoly block_determinant_at_y0(const CellMatrix& n) {
  const Staircase& e = n.staircase();
  const int t = e.t();
  // W = rows 2..t+1 of (M0 + N)|_{y=0}, entries in k[x].
  std::vector<std::vector<UniPoly>> w(static_cast<std::size_t>(t), std::vector<UniPoly>(static_cast<std::size_t>(t)));
  for (int i = 2; i <= t + 1; ++i) {
    for (int j = 1; j <= t; ++j) {
      UniPoly v = UniPoly::constant(n.at(i, j).constant_term());
      if (i == j && e.d(j) == 0) v += UniPoly::constant(Scalar(1));
      if (i == j + 1) v -= UniPoly::monomial(1);
      w[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] = v;
    }
  }
  // Bareiss fraction-free elimination over k[x].
  const auto sz = static_cast<std::size_t>(t);
  UniPoly prev = UniPoly::constant(Scalar(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < sz; ++k) {
    if (w[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < sz && w[p][k].is_zero()) ++p;
      if (p == sz) return {};
      std::swap(w[k], w[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < sz; ++i) {
      for (std::size_t j = k + 1; j < sz; ++j) {
        UniPoly num = w[i][j] * w[k][k] - w[i][k] * w[k][j];
        w[i][j] = divide_univariate(num, prev).first;
      }
      w[i][k] = UniPoly();
    }
    prev = w[k][k];
  }
  UniPoly det = w[sz - 1][sz - 1];
  return negate ? -det : det;
}

CellMatrix random_cell_matrix(const Staircase& e, CellKind kind, std::uint64_t seed, Field field) {
  std::mt19937_64 rng(seed);
  auto slots = free_slots(e, kind);
  std::vector<Scalar> values;
  values.reserve(slots.size());
  if (field.is_finite()) {
    std::uniform_int_distribution<std::int64_t> dist(0, static_cast<std::int64_t>(field.prime) - 1);
    for (std::size_t k = 0; k < slots.size(); ++k) values.push_back(field.from_int(dist(rng)));
  } else {
    std::uniform_int_distribution<long> dist(-3, 3);
    for (std::size_t k = 0; k < slots.size(); ++k) values.push_back(Scalar(dist(rng)));
  }
  return cell_matrix_from_coordinates(e, kind, values);
}

}  // namespace hbcells
