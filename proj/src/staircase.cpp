#include "hbcells/staircase.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hbcells/errors.hpp"

namespace hbcells {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '[' ||
                                 text[pos] == ']' || text[pos] == '(' || text[pos] == ')')) {
      ++pos;
    }
  };
  skip();
  while (pos < text.size()) {
    std::size_t start = pos;
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || !std::isdigit(static_cast<unsigned char>(text[pos - 1]))) {
      throw ParseError("expected an integer", start);
    }
    if (pos - start > 9) throw ParseError("integer too large", start);
    out.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    skip();
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
      skip();
    }
  }
  return out;
}

}  // namespace

Staircase Staircase::from_m(std::vector<int> m) {
  if (m.size() < 2) throw UsageError("staircase needs t >= 1 (at least two m entries)");
  if (m[0] != 0) throw UsageError("staircase must start with m_0 = 0");
  if (m[1] <= 0) throw UsageError("staircase needs m_1 > 0");
  for (std::size_t i = 2; i < m.size(); ++i) {
    if (m[i] < m[i - 1]) {
      throw UsageError("staircase must be nondecreasing (m_" + std::to_string(i) + " < m_" +
                       std::to_string(i - 1) + ")");
    }
  }
  return Staircase(std::move(m));
}

Staircase Staircase::from_d(const std::vector<int>& d) {
  if (d.empty()) throw UsageError("d vector must be nonempty");
  if (d[0] <= 0) throw UsageError("d_1 must be positive");
  std::vector<int> m{0};
  for (int di : d) {
    if (di < 0) throw UsageError("d entries must be nonnegative");
    m.push_back(m.back() + di);
  }
  return from_m(std::move(m));
}

int Staircase::d(int i) const {
  if (i < 1 || i > t()) throw UsageError("d index out of range");
  return m_[static_cast<std::size_t>(i)] - m_[static_cast<std::size_t>(i) - 1];
}

std::vector<int> Staircase::d_vector() const {
  std::vector<int> d;
  for (int i = 1; i <= t(); ++i) d.push_back(this->d(i));
  return d;
}

std::uint64_t Staircase::colength() const {
  return std::accumulate(m_.begin(), m_.end(), std::uint64_t{0});
}

bool Staircase::is_lex_segment() const {
  for (int i = 1; i <= t(); ++i) {
    if (d(i) == 0) return false;
  }
  return true;
}

std::string Staircase::to_string() const {
  std::string out = "m=[";
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(m_[i]);
  }
  return out + "]";
}

Staircase parse_staircase(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  if (trimmed.starts_with("d=")) return Staircase::from_d(parse_int_list(trimmed.substr(2)));
  if (trimmed.starts_with("m=")) trimmed.remove_prefix(2);
  return Staircase::from_m(parse_int_list(trimmed));
}

Staircase staircase_from_monomial_ideal(const MonomialIdeal& e) {
  if (e.nvars() != 2) throw UsageError("staircases live in k[x,y]");
  if (e.is_unit()) throw DomainError("the unit ideal has no staircase (t = 0)");
  auto tx = e.pure_power(0);
  auto ty = e.pure_power(1);
  if (!tx || !ty) throw DomainError("monomial ideal has infinite colength");
  int t = static_cast<int>(*tx);
  std::vector<int> m(static_cast<std::size_t>(t) + 1);
  for (int i = 0; i <= t; ++i) {
    auto a = static_cast<std::uint32_t>(t - i);
    std::uint32_t b = 0;
    while (!e.contains(Monomial{a, b})) ++b;
    m[static_cast<std::size_t>(i)] = static_cast<int>(b);
  }
  return Staircase::from_m(std::move(m));
}

std::vector<int> minimal_generator_indices(const Staircase& e) {
  std::vector<int> idx;
  for (int i = 0; i <= e.t(); ++i) {
    if (i == e.t() || e.m(i + 1) > e.m(i)) idx.push_back(i);
  }
  return idx;
}

std::vector<Monomial> generators(const Staircase& e, bool minimal) {
  std::vector<Monomial> out;
  std::vector<int> indices;
  if (minimal) {
    indices = minimal_generator_indices(e);
  } else {
    indices.resize(static_cast<std::size_t>(e.t()) + 1);
    std::iota(indices.begin(), indices.end(), 0);
  }
  for (int i : indices) {
    out.push_back(Monomial{static_cast<std::uint32_t>(e.t() - i), static_cast<std::uint32_t>(e.m(i))});
  }
  return out;
}

MonomialIdeal to_monomial_ideal(const Staircase& e) { return MonomialIdeal(2, generators(e, true)); }

HSeries::HSeries(std::vector<int> h) : h_(std::move(h)) {
  if (h_.empty()) throw DomainError("Hilbert function must be nonempty");
  if (h_[0] != 1) throw DomainError("h_0 must be 1");
  for (std::size_t j = 0; j < h_.size(); ++j) {
    if (h_[j] <= 0) throw DomainError("h_" + std::to_string(j) + " must be positive (h_s > 0)");
    if (h_[j] > static_cast<int>(j) + 1) {
      throw DomainError("h_" + std::to_string(j) + " exceeds j+1 = " + std::to_string(j + 1));
    }
  }
  c_ = static_cast<int>(h_.size());
  for (std::size_t j = 0; j < h_.size(); ++j) {
    if (h_[j] < static_cast<int>(j) + 1) {
      c_ = static_cast<int>(j);
      break;
    }
  }
  for (std::size_t j = static_cast<std::size_t>(c_) + 1; j < h_.size(); ++j) {
    if (h_[j] > h_[j - 1]) {
      throw DomainError("h must be nonincreasing from degree c = " + std::to_string(c_) + ": h_" +
                        std::to_string(j) + " > h_" + std::to_string(j - 1));
    }
  }
}

int HSeries::operator[](int j) const {
  if (j < 0 || j >= static_cast<int>(h_.size())) return 0;
  return h_[static_cast<std::size_t>(j)];
}

int HSeries::total() const { return std::accumulate(h_.begin(), h_.end(), 0); }

std::vector<int> HSeries::first_difference() const {
  std::vector<int> p;
  for (int j = 0; j <= s() + 1; ++j) p.push_back((*this)[j] - (*this)[j - 1]);
  return p;
}

HSeries parse_hseries(std::string_view text) { return HSeries(parse_int_list(text)); }

std::vector<int> hilbert_function(const Staircase& e) {
  std::vector<int> h;
  const int t = e.t();
  for (int a = 0; a < t; ++a) {
    int ymax = e.m(t - a);
    for (int b = 0; b < ymax; ++b) {
      auto j = static_cast<std::size_t>(a + b);
      if (h.size() <= j) h.resize(j + 1, 0);
      ++h[j];
    }
  }
  return h;
}

Staircase lex_segment_from_hseries(const HSeries& h) {
  const int top = h.s() + 1;
  // x^a y^b (degree j = a + b) lies in L iff b < j + 1 - h_j.
  auto in_lex = [&](int a, int b) { return b < a + b + 1 - h[a + b]; };
  const int t = h.c();
  std::vector<int> m(static_cast<std::size_t>(t) + 1);
  for (int i = 0; i <= t; ++i) {
    int a = t - i;
    int b = 0;
    while (!in_lex(a, b)) {
      ++b;
      if (a + b > top) throw DomainError("Hilbert function does not come from a lex-segment");
    }
    m[static_cast<std::size_t>(i)] = b;
  }
  Staircase l = Staircase::from_m(std::move(m));
  if (hilbert_function(l) != h.values()) {
    throw DomainError("lex-segment construction does not reproduce the Hilbert function");
  }
  return l;
}

std::vector<Staircase> enumerate_staircases(int d) {
  if (d < 1) throw UsageError("colength must be at least 1");
  std::vector<Staircase> out;
  std::vector<int> m{0};
  // Nondecreasing parts m_1 <= m_2 <= ... summing to d.
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      out.push_back(Staircase::from_m(m));
      return;
    }
    for (int part = min_part; part <= remaining; ++part) {
      m.push_back(part);
      self(self, remaining - part, part);
      m.pop_back();
    }
  };
  rec(rec, d, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HSeries> enumerate_hseries(int max_total) {
  if (max_total < 1) throw UsageError("total must be at least 1");
  std::vector<HSeries> out;
  std::vector<int> h{1};
  // Strictly increasing by one up to c, then nonincreasing.
  auto rec = [&](auto&& self, int total, bool past_c) -> void {
    out.emplace_back(h);
    const int j = static_cast<int>(h.size());
    const int cap = past_c ? h.back() : j + 1;
    for (int v = 1; v <= cap && total + v <= max_total; ++v) {
      h.push_back(v);
      self(self, total + v, past_c || v < j + 1);
      h.pop_back();
    }
  };
  rec(rec, 1, false);
  return out;
}

}  // namespace hbcells
