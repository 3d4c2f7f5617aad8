#include "hbcells/io.hpp"

#include <sstream>

#include "hbcells/errors.hpp"

namespace hbcells {

Json scalar_to_json(const Scalar& s) {
  if (!s.is_rational()) return static_cast<std::int64_t>(s.residue());
  mpq_class v = s.rational_value();
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return s.to_string();
}

Scalar scalar_from_json(const Json& j, Field field) {
  Scalar s;
  if (j.is_number_integer()) {
    s = Scalar(j.get<long>());
  } else if (j.is_string()) {
    mpq_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad rational '" + j.get<std::string>() + "'", 0);
    if (v.get_den() == 0) throw DivisionByZero();
    v.canonicalize();
    s = Scalar(v);
  } else {
    throw UsageError("expected an integer or \"a/b\" string");
  }
  return s.in_field(field.prime);
}

Json staircase_to_json(const Staircase& e) { return Json{{"m", e.m()}}; }

Staircase staircase_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m")) throw UsageError("staircase JSON needs an \"m\" array");
  return Staircase::from_m(j.at("m").get<std::vector<int>>());
}

Json cell_matrix_to_json(const CellMatrix& n) {
  Json rows = Json::array();
  for (int i = 1; i <= n.entries().rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= n.entries().cols(); ++j) {
      Json coeffs = Json::array();
      for (const auto& c : n.at(i, j).coefficients()) coeffs.push_back(scalar_to_json(c));
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  return Json{{"m", n.staircase().m()}, {"N", rows}};
}

CellMatrix cell_matrix_from_json(const Json& j, Field field) {
  Staircase e = staircase_from_json(j);
  if (!j.contains("N")) return CellMatrix(e);
  const Json& rows = j.at("N");
  if (!rows.is_array() || static_cast<int>(rows.size()) != e.t() + 1) {
    throw StructuralError("\"N\" must have t+1 = " + std::to_string(e.t() + 1) + " rows");
  }
  Grid<UniPoly> g(e.t() + 1, e.t());
  for (int i = 1; i <= e.t() + 1; ++i) {
    const Json& row = rows.at(static_cast<std::size_t>(i - 1));
    if (!row.is_array() || static_cast<int>(row.size()) != e.t()) {
      throw StructuralError("row " + std::to_string(i) + " of \"N\" must have t = " + std::to_string(e.t()) + " entries");
    }
    for (int c = 1; c <= e.t(); ++c) {
      std::vector<Scalar> coeffs;
      for (const auto& x : row.at(static_cast<std::size_t>(c - 1))) coeffs.push_back(scalar_from_json(x, field));
      g.at(i, c) = UniPoly(coeffs);
    }
  }
  return CellMatrix(e, std::move(g));
}

std::string cell_matrix_to_text(const CellMatrix& n) {
  std::string out = "[";
  for (int i = 1; i <= n.entries().rows(); ++i) {
    if (i > 1) out += ",";
    out += "[";
    for (int j = 1; j <= n.entries().cols(); ++j) {
      if (j > 1) out += ",";
      out += n.at(i, j).to_string("y");
    }
    out += "]";
  }
  return out + "]";
}

Json frame_to_json(const CanonicalFrame& f) {
  Json m0 = Json::array();
  Json u = Json::array();
  for (int i = 1; i <= f.m0.rows(); ++i) {
    Json r0 = Json::array();
    Json ru = Json::array();
    for (int j = 1; j <= f.m0.cols(); ++j) {
      r0.push_back(f.m0.at(i, j).to_string());
      ru.push_back(f.u.at(i, j));
    }
    m0.push_back(r0);
    u.push_back(ru);
  }
  Json s = Json::array();
  for (const auto& p : f.s) s.push_back({p.row, p.col});
  return Json{{"m", f.e.m()}, {"M0", m0}, {"U", u}, {"S", s}};
}

namespace {

Json entry_to_json(const PieceEntry& e) {
  switch (e.kind) {
    case PieceEntry::Kind::Zero: return Json::array({"zero"});
    case PieceEntry::Kind::One: return Json::array({"one"});
    case PieceEntry::Kind::Param: return Json::array({"p", e.param});
  }
  return {};
}

PieceEntry entry_from_json(const Json& j) {
  std::string tag = j.at(0).get<std::string>();
  if (tag == "zero") return {};
  if (tag == "one") return {PieceEntry::Kind::One, 0};
  if (tag == "p") return {PieceEntry::Kind::Param, j.at(1).get<int>()};
  throw UsageError("unknown matrix entry tag '" + tag + "'");
}

Json grid_to_json(const Grid<PieceEntry>& g) {
  Json rows = Json::array();
  for (int r = 1; r <= g.rows(); ++r) {
    Json row = Json::array();
    for (int c = 1; c <= g.cols(); ++c) row.push_back(entry_to_json(g.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json stratum_to_json(const StratumDescriptor& d) {
  return Json{{"j", d.piece.j},
              {"rows", d.piece.rows},
              {"cols", d.piece.cols},
              {"entries", grid_to_json(d.piece.entries)},
              {"star_rows", d.piece.star_rows},
              {"star_cols", d.piece.star_cols},
              {"u", d.u},
              {"rank_bound", d.rank_bound}};
}

StratumDescriptor stratum_from_json(const Json& j) {
  StratumDescriptor d;
  d.piece.j = j.at("j").get<int>();
  d.piece.rows = j.at("rows").get<std::vector<int>>();
  d.piece.cols = j.at("cols").get<std::vector<int>>();
  const Json& rows = j.at("entries");
  d.piece.entries = Grid<PieceEntry>(static_cast<int>(d.piece.rows.size()), static_cast<int>(d.piece.cols.size()));
  if (rows.size() != d.piece.rows.size()) throw StructuralError("entries do not match the row indices");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != d.piece.cols.size()) throw StructuralError("entries do not match the column indices");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      d.piece.entries.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) = entry_from_json(rows[r][c]);
    }
  }
  d.piece.star_rows = j.at("star_rows").get<std::vector<int>>();
  d.piece.star_cols = j.at("star_cols").get<std::vector<int>>();
  d.u = j.at("u").get<int>();
  d.rank_bound = j.at("rank_bound").get<int>();
  return d;
}

Json betti_to_json(const BettiTable& t) {
  Json rows = Json::array();
  for (const auto& [j, b] : t) rows.push_back({{"j", j}, {"beta0", b.beta0}, {"beta1", b.beta1}});
  return rows;
}

BettiTable betti_from_json(const Json& j) {
  BettiTable t;
  for (const auto& row : j) t[row.at("j").get<int>()] = {row.at("beta0").get<int>(), row.at("beta1").get<int>()};
  return t;
}

Json census_to_json(const CellCensus& c) {
  Json recs = Json::array();
  for (const auto& r : c.records) {
    recs.push_back({{"m", r.e.m()}, {"V0", r.dims[0]}, {"V1", r.dims[1]}, {"V2", r.dims[2]}, {"V3", r.dims[3]}});
  }
  Json total = Json::object();
  for (auto it = c.total.rbegin(); it != c.total.rend(); ++it) total[std::to_string(it->first)] = it->second;
  return Json{{"d", c.colength}, {"records", recs}, {"total", to_string(c.total)}, {"coefficients", total}};
}

CellCensus census_from_json(const Json& j) {
  CellCensus c;
  c.colength = j.at("d").get<int>();
  for (const auto& r : j.at("records")) {
    CensusRecord rec{Staircase::from_m(r.at("m").get<std::vector<int>>()),
                     {r.at("V0").get<std::uint64_t>(), r.at("V1").get<std::uint64_t>(),
                      r.at("V2").get<std::uint64_t>(), r.at("V3").get<std::uint64_t>()}};
    c.records.push_back(std::move(rec));
  }
  for (const auto& [k, v] : j.at("coefficients").items()) c.total[std::stoi(k)] = v.get<std::int64_t>();
  return c;
}

Json elimination_to_json(const EliminationReport& r, bool with_log) {
  auto names = lambda_names(r.initial);
  Json survivors = Json::array();
  for (auto k : r.survivors) survivors.push_back(names[k]);
  Json residual = Json::array();
  for (const auto& e : r.residual) {
    residual.push_back({{"equation", e.to_string(names)}, {"degree", e.total_degree()}});
  }
  Json out{{"initial", r.initial},
           {"eliminated", r.eliminated_count()},
           {"surviving", r.surviving_count()},
           {"affine_space", affine_space_check(r)},
           {"survivors", survivors},
           {"residual", residual}};
  if (with_log) {
    Json log = Json::array();
    for (const auto& el : r.eliminated) log.push_back({{"parameter", names[el.parameter]}, {"value", el.value.to_string(names)}});
    out["substitutions"] = log;
  }
  return out;
}

namespace {

std::string latex_poly(const Polynomial& p) {
  std::string s = p.to_string();
  std::string out;
  for (char c : s) {
    if (c != '*') out += c;
  }
  return out;
}

std::string bordered(const std::vector<std::string>& top, const std::vector<std::string>& left,
                     const std::vector<std::vector<std::string>>& cells) {
  std::ostringstream os;
  os << "\\begin{array}{r|" << std::string(top.size(), 'r') << "}\n";
  os << " ";
  for (const auto& t : top) os << " & " << t;
  os << " \\\\\n\\hline\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << left[r];
    for (const auto& c : cells[r]) os << " & " << c;
    os << " \\\\\n";
  }
  os << "\\end{array}";
  return os.str();
}

}  // namespace

std::string hilbert_burch_latex(const CellMatrix& n) {
  ResolutionDegrees deg = resolution_degrees(n.staircase());
  PolyMatrix a = hilbert_burch_matrix(n);
  std::vector<std::string> top, left;
  for (int b : deg.b) top.push_back(std::to_string(b));
  for (int x : deg.a) left.push_back(std::to_string(x));
  std::vector<std::vector<std::string>> cells;
  for (int i = 1; i <= a.rows(); ++i) {
    std::vector<std::string> row;
    for (int j = 1; j <= a.cols(); ++j) row.push_back(latex_poly(a.at(i, j)));
    cells.push_back(row);
  }
  return bordered(top, left, cells);
}

std::string piece_entry_text(const PieceEntry& e) {
  switch (e.kind) {
    case PieceEntry::Kind::Zero: return "0";
    case PieceEntry::Kind::One: return "1";
    case PieceEntry::Kind::Param: return "p" + std::to_string(e.param);
  }
  return "?";
}

std::string piece_latex(const GradedPieceMatrix& g, bool star) {
  Grid<PieceEntry> m = star ? g.star() : g.entries;
  const auto& rows = star ? g.star_rows : g.rows;
  const auto& cols = star ? g.star_cols : g.cols;
  std::vector<std::string> top(cols.size(), std::to_string(g.j)), left(rows.size(), std::to_string(g.j));
  std::vector<std::vector<std::string>> cells;
  for (int r = 1; r <= m.rows(); ++r) {
    std::vector<std::string> row;
    for (int c = 1; c <= m.cols(); ++c) {
      const PieceEntry& e = m.at(r, c);
      row.push_back(e.kind == PieceEntry::Kind::Param ? "p_{" + std::to_string(e.param) + "}" : piece_entry_text(e));
    }
    cells.push_back(row);
  }
  return bordered(top, left, cells);
}

}  // namespace hbcells
