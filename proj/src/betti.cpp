#include "hbcells/betti.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

#include "hbcells/errors.hpp"
#include "hbcells/hilbert_burch.hpp"
#include "hbcells/linalg.hpp"

namespace hbcells {

ResolutionDegrees resolution_degrees(const Staircase& e) {
  const int t = e.t();
  ResolutionDegrees r;
  for (int i = 1; i <= t + 1; ++i) r.a.push_back(t + 1 - i + e.m(i - 1));
  for (int i = 1; i <= t; ++i) r.b.push_back(r.a[static_cast<std::size_t>(i)] + 1);
  return r;
}

Grid<PieceEntry> GradedPieceMatrix::star() const {
  Grid<PieceEntry> s(static_cast<int>(star_rows.size()), static_cast<int>(star_cols.size()));
  for (std::size_t r = 0; r < star_rows.size(); ++r) {
    auto ri = std::find(rows.begin(), rows.end(), star_rows[r]) - rows.begin();
    for (std::size_t c = 0; c < star_cols.size(); ++c) {
      auto ci = std::find(cols.begin(), cols.end(), star_cols[c]) - cols.begin();
      s.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) =
          entries.at(static_cast<int>(ri) + 1, static_cast<int>(ci) + 1);
    }
  }
  return s;
}

std::vector<int> GradedPieceMatrix::parameters() const {
  std::vector<int> out;
  for (int r = 1; r <= entries.rows(); ++r)
    for (int c = 1; c <= entries.cols(); ++c)
      if (entries.at(r, c).kind == PieceEntry::Kind::Param) out.push_back(entries.at(r, c).param);
  std::sort(out.begin(), out.end());
  return out;
}

GradedPieceMatrix graded_matrix(const Staircase& e, int j) {
  ResolutionDegrees deg = resolution_degrees(e);
  GradedPieceMatrix g;
  g.j = j;
  for (std::size_t i = 0; i < deg.a.size(); ++i)
    if (deg.a[i] == j) g.rows.push_back(static_cast<int>(i) + 1);
  for (std::size_t i = 0; i < deg.b.size(); ++i)
    if (deg.b[i] == j) g.cols.push_back(static_cast<int>(i) + 1);

  auto s = s_set(e);
  g.entries = Grid<PieceEntry>(static_cast<int>(g.rows.size()), static_cast<int>(g.cols.size()));
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    for (std::size_t c = 0; c < g.cols.size(); ++c) {
      int i1 = g.rows[r];
      int i2 = g.cols[c];
      PieceEntry entry;
      if (i1 == i2) {
        entry.kind = PieceEntry::Kind::One;
      } else if (i1 > i2 && e.d(i2) > 0) {
        auto it = std::find(s.begin(), s.end(), IndexPair{i1, i2});
        if (it == s.end()) throw StructuralError("degree-zero position outside S(E)");
        entry.kind = PieceEntry::Kind::Param;
        entry.param = static_cast<int>(it - s.begin()) + 1;
      }
      g.entries.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) = entry;
    }
  }
  for (int i : g.rows)
    if (std::find(g.cols.begin(), g.cols.end(), i) == g.cols.end()) g.star_rows.push_back(i);
  for (int i : g.cols)
    if (std::find(g.rows.begin(), g.rows.end(), i) == g.rows.end()) g.star_cols.push_back(i);
  return g;
}

std::vector<int> resolution_degree_range(const Staircase& e) {
  ResolutionDegrees deg = resolution_degrees(e);
  std::vector<int> js = deg.a;
  js.insert(js.end(), deg.b.begin(), deg.b.end());
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  return js;
}

BettiTable betti_numbers(const Staircase& e, const std::vector<Scalar>& p) {
  const std::size_t n = s_set(e).size();
  if (p.size() != n) {
    throw UsageError("expected " + std::to_string(n) + " parameter values, got " + std::to_string(p.size()));
  }
  BettiTable table;
  for (int j : resolution_degree_range(e)) {
    GradedPieceMatrix g = graded_matrix(e, j);
    ScalarMatrix m(g.rows.size(), std::vector<Scalar>(g.cols.size()));
    for (std::size_t r = 0; r < g.rows.size(); ++r) {
      for (std::size_t c = 0; c < g.cols.size(); ++c) {
        const PieceEntry& x = g.entries.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1);
        if (x.kind == PieceEntry::Kind::One) m[r][c] = Scalar(1);
        if (x.kind == PieceEntry::Kind::Param) m[r][c] = p[static_cast<std::size_t>(x.param) - 1];
      }
    }
    int rk = g.cols.empty() ? 0 : static_cast<int>(rank(m));
    BettiEntry b{static_cast<int>(g.rows.size()) - rk, static_cast<int>(g.cols.size()) - rk};
    if (b.beta0 != 0 || b.beta1 != 0) table[j] = b;
  }
  return table;
}

int monomial_beta0(const Staircase& e, int j) { return static_cast<int>(graded_matrix(e, j).star_rows.size()); }

StratumDescriptor stratum_descriptor(const Staircase& e, int j, int u) {
  if (u < 0) throw UsageError("stratum level u must be nonnegative");
  StratumDescriptor d{graded_matrix(e, j), u, 0};
  d.rank_bound = static_cast<int>(d.piece.star_rows.size()) - u;
  return d;
}

namespace {

// Determinant of a square symbolic matrix, expanding along rows with the
// remaining column set memoized.
Polynomial symbolic_det(const std::vector<std::vector<Polynomial>>& a, std::size_t nvars) {
  const std::size_t n = a.size();
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> Polynomial {
    const auto row = n - static_cast<std::size_t>(std::popcount(mask));
    if (row == n) return Polynomial::constant(nvars, Scalar(1));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial sum(nvars);
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      if (!a[row][c].is_zero()) {
        Polynomial term = a[row][c] * self(self, mask & ~(1u << c));
        if (position % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      ++position;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, n == 0 ? 0u : (n >= 32 ? ~0u : (1u << n) - 1));
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Polynomial> stratum_equations(const StratumDescriptor& d, std::size_t nparams) {
  if (d.rank_bound < 0) return {Polynomial::constant(nparams, Scalar(1))};
  Grid<PieceEntry> s = d.piece.star();
  const auto size = static_cast<std::size_t>(d.rank_bound) + 1;
  const auto rows = static_cast<std::size_t>(s.rows());
  const auto cols = static_cast<std::size_t>(s.cols());
  if (size > rows || size > cols) return {};
  if (size > 31) throw UsageError("star matrix too large for symbolic minors");

  auto entry = [&](std::size_t r, std::size_t c) {
    const PieceEntry& x = s.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1);
    if (x.kind == PieceEntry::Kind::Param) {
      if (static_cast<std::size_t>(x.param) > nparams) throw UsageError("parameter index exceeds nparams");
      return Polynomial::variable(nparams, static_cast<std::size_t>(x.param) - 1);
    }
    if (x.kind == PieceEntry::Kind::One) return Polynomial::constant(nparams, Scalar(1));
    return Polynomial(nparams);
  };

  std::vector<Polynomial> out;
  for_each_subset(rows, size, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(cols, size, [&](const std::vector<std::size_t>& cs) {
      std::vector<std::vector<Polynomial>> m;
      for (auto r : rs) {
        std::vector<Polynomial> row;
        for (auto c : cs) row.push_back(entry(r, c));
        m.push_back(row);
      }
      Polynomial det = symbolic_det(m, nparams);
      if (det.is_zero()) return;
      det = det.monic();
      if (std::find(out.begin(), out.end(), det) == out.end()) out.push_back(det);
    });
  });
  return out;
}

int lex_codim(const Staircase& l, int j, int u) {
  if (!l.is_lex_segment()) throw UsageError("lex_codim needs a lex-segment ideal (all d_i > 0)");
  GradedPieceMatrix g = graded_matrix(l, j);
  const int beta0 = static_cast<int>(g.rows.size());
  const int beta1 = static_cast<int>(g.cols.size());
  if (u < beta0 - beta1 || u > beta0) {
    throw DomainError("u = " + std::to_string(u) + " outside [" + std::to_string(beta0 - beta1) + ", " +
                      std::to_string(beta0) + "]");
  }
  return (beta1 - beta0 + u) * u;
}

int g_dim(const HSeries& h, GDimMethod method) {
  if (method == GDimMethod::Brutta) return static_cast<int>(s_set(lex_segment_from_hseries(h)).size());
  auto p = [&](int j) { return h[j] - h[j - 1]; };
  int total = h[h.c()];
  for (int j = h.c(); j <= h.s(); ++j) total += p(j) * p(j + 1);
  return total;
}

std::vector<std::string> parameter_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

}  // namespace hbcells
