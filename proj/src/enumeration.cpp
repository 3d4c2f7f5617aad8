#include "hbcells/enumeration.hpp"

#include <array>

#include "hbcells/errors.hpp"
#include "hbcells/hilbert_burch.hpp"

namespace hbcells {

std::string to_string(const QPolynomial& p) {
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    auto [e, c] = *it;
    if (c == 0) continue;
    std::int64_t a = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
    if (mono.empty()) {
      out += std::to_string(a);
    } else {
      out += (a == 1 ? "" : std::to_string(a) + "*") + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::uint64_t evaluate(const QPolynomial& p, std::uint64_t q) {
  std::int64_t sum = 0;
  for (auto [e, c] : p) {
    std::int64_t v = c;
    for (int i = 0; i < e; ++i) v *= static_cast<std::int64_t>(q);
    sum += v;
  }
  if (sum < 0) throw DomainError("q-polynomial evaluates negative");
  return static_cast<std::uint64_t>(sum);
}

CellCensus cell_census(int d) {
  CellCensus c;
  c.colength = d;
  for (auto& e : enumerate_staircases(d)) {
    CensusRecord r{e, {}};
    for (std::size_t k = 0; k < 4; ++k) r.dims[k] = cell_dimension(e, kAllCellKinds[k]);
    c.total[static_cast<int>(r.dims[0])] += 1;
    c.records.push_back(std::move(r));
  }
  return c;
}

namespace {

// F_q for q in {2, 3, 4}; elements are 0..q-1. F_4 = F_2[w]/(w^2+w+1) with
// element b0 + 2*b1 standing for b0 + b1*w.
struct SmallField {
  int q;
  std::array<std::array<std::uint8_t, 4>, 4> add{}, mul{};
  std::array<std::uint8_t, 4> neg{}, inv{};

  explicit SmallField(int order) : q(order) {
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        if (q == 4) {
          add[a][b] = static_cast<std::uint8_t>(a ^ b);
          int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
          // (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1.
          int c0 = (a0 * b0 + a1 * b1) & 1;
          int c1 = (a0 * b1 + a1 * b0 + a1 * b1) & 1;
          mul[a][b] = static_cast<std::uint8_t>(c0 | (c1 << 1));
        } else {
          add[a][b] = static_cast<std::uint8_t>((a + b) % q);
          mul[a][b] = static_cast<std::uint8_t>((a * b) % q);
        }
      }
    }
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        if (add[a][b] == 0) neg[a] = static_cast<std::uint8_t>(b);
        if (mul[a][b] == 1) inv[a] = static_cast<std::uint8_t>(b);
      }
    }
  }
};

using Vec = std::vector<std::uint8_t>;

// Row-reduces `rows` in place; returns the rank.
std::size_t reduce_rows(const SmallField& f, std::vector<Vec>& rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    auto s = f.inv[rows[rank][col]];
    for (auto& v : rows[rank]) v = f.mul[v][s];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      auto c = f.neg[rows[r][col]];
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] = f.add[rows[r][k]][f.mul[c][rows[rank][k]]];
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

// Basis of {v : A v = 0}.
std::vector<Vec> null_space(const SmallField& f, std::vector<Vec> a, std::size_t n) {
  reduce_rows(f, a);
  std::vector<int> pivot_of_col(n, -1);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a[r][c] != 0) {
        pivot_of_col[c] = static_cast<int>(r);
        break;
      }
    }
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = f.neg[a[static_cast<std::size_t>(pivot_of_col[c])][free]];
    }
    basis.push_back(v);
  }
  return basis;
}

using Small = std::array<std::uint8_t, 3>;

// Incremental echelon basis of a subspace of F_q^d, d <= 3.
struct Echelon {
  const SmallField* f;
  std::size_t d;
  std::array<Small, 3> rows{};
  std::array<std::size_t, 3> pivots{};
  std::size_t size = 0;

  // Adds v if it is independent of the basis; returns whether it was added.
  bool insert(Small v) {
    for (std::size_t r = 0; r < size; ++r) {
      auto c = v[pivots[r]];
      if (c == 0) continue;
      auto m = f->neg[c];
      for (std::size_t k = 0; k < d; ++k) v[k] = f->add[v[k]][f->mul[m][rows[r][k]]];
    }
    std::size_t p = 0;
    while (p < d && v[p] == 0) ++p;
    if (p == d) return false;
    auto s = f->inv[v[p]];
    for (std::size_t k = 0; k < d; ++k) v[k] = f->mul[v[k]][s];
    rows[size] = v;
    pivots[size] = p;
    ++size;
    return true;
  }
};

Small apply(const SmallField& f, const Vec& m, const Small& v, std::size_t d) {
  Small out{};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[i] = f.add[out[i]][f.mul[m[i * d + j]][v[j]]];
  return out;
}

// Is e_1 cyclic for the algebra generated by X and Y? Breadth-first over
// words in X and Y, keeping only vectors that enlarge the span.
bool e1_cyclic(const SmallField& f, const Vec& x, const Vec& y, std::size_t d) {
  Echelon span{&f, d};
  std::array<Small, 8> queue{};
  std::size_t head = 0, tail = 0;
  Small e1{};
  e1[0] = 1;
  span.insert(e1);
  queue[tail++] = e1;
  while (head < tail) {
    Small v = queue[head++];
    for (const Vec* m : {&x, &y}) {
      Small w = apply(f, *m, v, d);
      if (span.insert(w)) {
        if (span.size == d) return true;
        queue[tail++] = w;
      }
    }
  }
  return span.size == d;
}

}  // namespace

std::uint64_t brute_force_ideal_count(int d, int q) {
  if (q != 2 && q != 3 && q != 4) throw UsageError("brute-force count supports q in {2, 3, 4}");
  if (d < 1) throw UsageError("colength must be at least 1");
  if (d > 3) throw UsageError("brute-force count is limited to colength <= 3 (the search grows like q^(d^2))");
  SmallField f(q);
  const auto n = static_cast<std::size_t>(d);
  const std::size_t nn = n * n;

  std::uint64_t total_x = 1;
  for (std::size_t k = 0; k < nn; ++k) total_x *= static_cast<std::uint64_t>(q);

  std::uint64_t pairs = 0;
  Vec x(nn, 0);
  for (std::uint64_t code = 0; code < total_x; ++code) {
    std::uint64_t c = code;
    for (std::size_t k = 0; k < nn; ++k) {
      x[k] = static_cast<std::uint8_t>(c % static_cast<std::uint64_t>(q));
      c /= static_cast<std::uint64_t>(q);
    }
    // Linear conditions XY - YX = 0 on the entries of Y.
    std::vector<Vec> eqs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vec row(nn, 0);
        for (std::size_t k = 0; k < n; ++k) {
          // (XY)_{ij} = sum_k X_ik Y_kj,  (YX)_{ij} = sum_k Y_ik X_kj.
          row[k * n + j] = f.add[row[k * n + j]][x[i * n + k]];
          row[i * n + k] = f.add[row[i * n + k]][f.neg[x[k * n + j]]];
        }
        eqs.push_back(row);
      }
    }
    auto basis = null_space(f, eqs, nn);
    std::uint64_t count_y = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) count_y *= static_cast<std::uint64_t>(q);
    Vec y(nn, 0);
    for (std::uint64_t yc = 0; yc < count_y; ++yc) {
      std::fill(y.begin(), y.end(), 0);
      std::uint64_t cc = yc;
      for (const auto& b : basis) {
        auto coef = static_cast<std::uint8_t>(cc % static_cast<std::uint64_t>(q));
        cc /= static_cast<std::uint64_t>(q);
        if (coef == 0) continue;
        for (std::size_t k = 0; k < nn; ++k) y[k] = f.add[y[k]][f.mul[coef][b[k]]];
      }
      if (e1_cyclic(f, x, y, n)) ++pairs;
    }
  }
  // GL_d acts freely on triples (X, Y, v) with v cyclic and transitively on
  // nonzero v, so #ideals = pairs * (q^d - 1) / |GL_d(F_q)|.
  std::uint64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= static_cast<std::uint64_t>(q);
  std::uint64_t gl = 1;
  std::uint64_t qi = 1;
  for (int i = 0; i < d; ++i) {
    gl *= qd - qi;
    qi *= static_cast<std::uint64_t>(q);
  }
  std::uint64_t num = pairs * (qd - 1);
  if (num % gl != 0) throw StructuralError("orbit count is not an integer");
  return num / gl;
}

}  // namespace hbcells
