#include "hbcells/cli.hpp"

#include <sstream>

#include "CLI11.hpp"

#include "hbcells/betti.hpp"
#include "hbcells/enumeration.hpp"
#include "hbcells/errors.hpp"
#include "hbcells/generic_cells.hpp"
#include "hbcells/hilbert_burch.hpp"
#include "hbcells/io.hpp"
#include "hbcells/parse.hpp"

namespace hbcells {

namespace {

enum class Format { Text, Json, Latex };

struct Options {
  std::string m, d, h, field = "q", format = "text";
  std::uint64_t seed = 1;
  std::string kind = "V0";
  std::string matrix;
  std::string p;
  std::string gens;
  std::string vars;
  int j = 0;
  int u = 0;
  int colength = 0;
  int nvars = 2;
  int q = 0;
  bool ungraded = false;
  bool log = false;
};

Field parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return Field::rationals();
  if (s.starts_with("p:")) {
    std::uint32_t p = 0;
    try {
      p = static_cast<std::uint32_t>(std::stoul(s.substr(2)));
    } catch (const std::exception&) {
      throw UsageError("bad --field value '" + s + "' (expected q or p:<prime>)");
    }
    return Field::prime_field(p);
  }
  throw UsageError("bad --field value '" + s + "' (expected q or p:<prime>)");
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  throw UsageError("bad --format value '" + s + "' (expected text, json or latex)");
}

Staircase staircase_of(const Options& o) {
  if (!o.m.empty() && !o.d.empty()) throw UsageError("give only one of --m and --d");
  if (!o.m.empty()) return parse_staircase("m=" + o.m);
  if (!o.d.empty()) return parse_staircase("d=" + o.d);
  throw UsageError("a staircase is required (--m or --d)");
}

// Zero denominators in typed input are reported as malformed input.
template <class F>
auto parsing(F&& f) {
  try {
    return f();
  } catch (const DivisionByZero&) {
    throw UsageError("zero denominator in input");
  }
}

std::vector<std::string> variable_names(const Options& o, std::size_t fallback) {
  if (o.vars.empty()) return default_variable_names(fallback);
  std::vector<std::string> names;
  std::stringstream ss(o.vars);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("empty variable name in --vars");
    names.push_back(item);
  }
  return names;
}

IdealBasis ideal_of(const Options& o, const Field& field) {
  if (o.gens.empty()) throw UsageError("an ideal is required (comma-separated polynomials)");
  auto names = default_variable_names(2);
  return IdealBasis(2, parsing([&] { return parse_polynomial_list(o.gens, names, field); }));
}

std::string kinds_text(const std::vector<CellKind>& ks) {
  std::string out;
  for (CellKind k : ks) out += (out.empty() ? "" : " ") + to_string(k);
  return out;
}

std::string grid_text(const Grid<PieceEntry>& g) {
  std::string out;
  for (int r = 1; r <= g.rows(); ++r) {
    out += "  ";
    for (int c = 1; c <= g.cols(); ++c) out += (c > 1 ? " " : "") + piece_entry_text(g.at(r, c));
    out += "\n";
  }
  return out;
}

std::string list_text(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

void cmd_frame(const Options& o, Format fmt, std::ostream& out) {
  CanonicalFrame f = canonical_frame(staircase_of(o));
  if (fmt == Format::Json) {
    out << frame_to_json(f).dump() << "\n";
    return;
  }
  if (fmt == Format::Latex) {
    out << hilbert_burch_latex(CellMatrix(f.e)) << "\n";
    return;
  }
  out << f.e.to_string() << "\nM0:\n";
  for (int i = 1; i <= f.m0.rows(); ++i) {
    out << " ";
    for (int j = 1; j <= f.m0.cols(); ++j) out << " " << f.m0.at(i, j).to_string();
    out << "\n";
  }
  out << "U:\n";
  for (int i = 1; i <= f.u.rows(); ++i) {
    out << " ";
    for (int j = 1; j <= f.u.cols(); ++j) out << " " << f.u.at(i, j);
    out << "\n";
  }
  out << "S: {";
  for (std::size_t k = 0; k < f.s.size(); ++k) out << (k ? "," : "") << "(" << f.s[k].row << "," << f.s[k].col << ")";
  out << "}\n";
}

void cmd_dims(const Options& o, Format fmt, std::ostream& out) {
  Staircase e = staircase_of(o);
  if (fmt == Format::Json) {
    Json j = staircase_to_json(e);
    for (CellKind k : kAllCellKinds) j[to_string(k)] = cell_dimension(e, k);
    out << j.dump() << "\n";
    return;
  }
  std::string line;
  for (CellKind k : kAllCellKinds) line += (line.empty() ? "" : " ") + to_string(k) + "=" + std::to_string(cell_dimension(e, k));
  out << line << "\n";
}

void cmd_minors(const Options& o, Format fmt, std::ostream& out) {
  Field field = parse_field(o.field);
  CellMatrix n = o.matrix.empty() ? random_cell_matrix(staircase_of(o), parse_cell_kind(o.kind), o.seed, field)
                                  : parsing([&] { return cell_matrix_from_json(Json::parse(o.matrix), field); });
  IdealBasis f = minors_ideal(n);
  IdealBasis gb = buchberger_reduced(f);
  if (fmt == Format::Json) {
    Json minors = Json::array(), basis = Json::array();
    for (const auto& p : f.elements) minors.push_back(p.to_string());
    for (const auto& p : gb.elements) basis.push_back(p.to_string());
    out << Json{{"matrix", cell_matrix_to_json(n)}, {"minors", minors}, {"groebner_basis", basis}}.dump() << "\n";
    return;
  }
  if (fmt == Format::Latex) {
    out << hilbert_burch_latex(n) << "\n";
    return;
  }
  out << n.staircase().to_string() << "; N=" << cell_matrix_to_text(n) << "\n";
  for (std::size_t i = 0; i < f.elements.size(); ++i) out << "f" << i << " = " << f.elements[i].to_string() << "\n";
  out << "reduced basis: " << gb.to_string() << "\n";
}

void cmd_canonicalize(const Options& o, Format fmt, std::ostream& out) {
  CanonicalForm c = canonical_matrix(ideal_of(o, parse_field(o.field)));
  if (fmt == Format::Json) {
    out << cell_matrix_to_json(c.n).dump() << "\n";
  } else if (fmt == Format::Latex) {
    out << hilbert_burch_latex(c.n) << "\n";
  } else {
    out << c.e.to_string() << "; N=" << cell_matrix_to_text(c.n) << "\n";
  }
}

void cmd_kinds(const Options& o, Format fmt, std::ostream& out) {
  auto ks = cell_kind_of_ideal(ideal_of(o, parse_field(o.field)));
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (CellKind k : ks) arr.push_back(to_string(k));
    out << Json{{"kinds", arr}}.dump() << "\n";
  } else {
    out << kinds_text(ks) << "\n";
  }
}

void cmd_betti(const Options& o, Format fmt, std::ostream& out) {
  Staircase e = staircase_of(o);
  Field field = parse_field(o.field);
  const std::size_t n = s_set(e).size();
  std::vector<Scalar> p(n, field.zero());
  if (!o.p.empty()) {
    p.clear();
    auto names = default_variable_names(2);
    for (const auto& v : parsing([&] { return parse_polynomial_list(o.p, names, field); })) {
      if (!v.is_constant()) throw UsageError("--p values must be constants");
      p.push_back(v.is_zero() ? field.zero() : v.leading_coefficient());
    }
  }
  BettiTable t = betti_numbers(e, p);
  if (fmt == Format::Json) {
    out << Json{{"m", e.m()}, {"betti", betti_to_json(t)}}.dump() << "\n";
    return;
  }
  out << "j beta0 beta1\n";
  for (const auto& [j, b] : t) out << j << " " << b.beta0 << " " << b.beta1 << "\n";
}

void cmd_stratum(const Options& o, Format fmt, std::ostream& out) {
  Staircase e = staircase_of(o);
  StratumDescriptor d = stratum_descriptor(e, o.j, o.u);
  const std::size_t n = s_set(e).size();
  auto eqs = stratum_equations(d, n);
  auto names = parameter_names(n);
  if (fmt == Format::Json) {
    Json j = stratum_to_json(d);
    Json arr = Json::array();
    for (const auto& q : eqs) arr.push_back(q.to_string(names));
    j["equations"] = arr;
    out << j.dump() << "\n";
    return;
  }
  if (fmt == Format::Latex) {
    out << piece_latex(d.piece, false) << "\n" << piece_latex(d.piece, true) << "\n";
    return;
  }
  out << "j=" << d.piece.j << " rows=" << list_text(d.piece.rows) << " cols=" << list_text(d.piece.cols) << "\n";
  out << "M(p):\n" << grid_text(d.piece.entries);
  out << "star rows=" << list_text(d.piece.star_rows) << " cols=" << list_text(d.piece.star_cols) << "\n";
  out << "M(p)*:\n" << grid_text(d.piece.star());
  out << "rank bound: " << d.rank_bound << "\n";
  out << "equations:";
  if (eqs.empty()) out << " none";
  for (const auto& q : eqs) out << " " << q.to_string(names) << ";";
  out << "\n";
}

void cmd_gdim(const Options& o, Format fmt, std::ostream& out) {
  if (o.h.empty()) throw UsageError("a Hilbert function is required (--h)");
  HSeries h = parse_hseries(o.h);
  int bella = g_dim(h, GDimMethod::Bella);
  int brutta = g_dim(h, GDimMethod::Brutta);
  if (fmt == Format::Json) {
    out << Json{{"h", h.values()}, {"bella", bella}, {"brutta", brutta}, {"agree", bella == brutta}}.dump() << "\n";
  } else {
    out << "bella=" << bella << " brutta=" << brutta << " agree=" << (bella == brutta ? "true" : "false") << "\n";
  }
}

void cmd_generic(const Options& o, Format fmt, std::ostream& out) {
  if (o.gens.empty()) throw UsageError("monomial generators are required");
  if (o.nvars < 1) throw UsageError("--n must be positive");
  auto names = variable_names(o, static_cast<std::size_t>(o.nvars));
  auto polys = parsing([&] { return parse_polynomial_list(o.gens, names); });
  std::vector<Monomial> gens;
  for (const auto& p : polys) {
    if (p.size() != 1 || !p.leading_coefficient().is_one()) throw UsageError("generators must be monic monomials");
    gens.push_back(p.leading_monomial());
  }
  GenericFamily f = generic_family(gens, names.size(), !o.ungraded);
  EliminationReport r = eliminate_linear(buchberger_equations(f), f.nparams());
  if (fmt == Format::Json) {
    out << elimination_to_json(r, o.log).dump() << "\n";
    return;
  }
  auto pn = lambda_names(f.nparams());
  out << "family:\n";
  for (const auto& m : f.members) out << "  " << m.to_string(names, pn) << "\n";
  out << "parameters=" << r.initial << " eliminated=" << r.eliminated_count() << " surviving=" << r.surviving_count()
      << " residual=" << r.residual.size() << " affine_space=" << (affine_space_check(r) ? "true" : "false") << "\n";
  if (o.log) {
    for (const auto& el : r.eliminated) out << "  " << pn[el.parameter] << " = " << el.value.to_string(pn) << "\n";
  }
  for (const auto& e : r.residual) out << "  " << e.to_string(pn) << " = 0\n";
}

void cmd_census(const Options& o, Format fmt, std::ostream& out) {
  if (o.colength < 1) throw UsageError("--d must be at least 1");
  CellCensus c = cell_census(o.colength);
  std::uint64_t brute = 0;
  if (o.q != 0) brute = brute_force_ideal_count(o.colength, o.q);
  if (fmt == Format::Json) {
    Json j = census_to_json(c);
    if (o.q != 0) {
      j["q"] = o.q;
      j["census_at_q"] = evaluate(c.total, static_cast<std::uint64_t>(o.q));
      j["brute_force"] = brute;
    }
    out << j.dump() << "\n";
    return;
  }
  for (const auto& r : c.records) {
    out << r.e.to_string() << " V0=" << r.dims[0] << " V1=" << r.dims[1] << " V2=" << r.dims[2] << " V3=" << r.dims[3]
        << "\n";
  }
  out << "total=" << to_string(c.total) << "\n";
  if (o.q != 0) {
    std::uint64_t at = evaluate(c.total, static_cast<std::uint64_t>(o.q));
    out << "q=" << o.q << " census=" << at << " brute_force=" << brute << " agree=" << (at == brute ? "true" : "false")
        << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-Burch matrices and Grobner cells of k[x,y]", "hb-cells"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, json or latex");
    sub->add_option("--field", o.field, "q (rationals) or p:<prime>");
    sub->add_option("--seed", o.seed, "seed for random data");
  };
  auto staircase_opts = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "staircase as m_0,...,m_t");
    sub->add_option("--d", o.d, "staircase as d_1,...,d_t");
  };

  auto* frame = app.add_subcommand("frame", "M0(E), U(E) and S(E)");
  auto* dims = app.add_subcommand("dims", "dimensions of the four cells");
  auto* minors = app.add_subcommand("minors", "ideal of maximal minors of M0(E) + N");
  auto* canon = app.add_subcommand("canonicalize", "canonical Hilbert-Burch matrix of an ideal");
  auto* kinds = app.add_subcommand("kinds", "which cells V0..V3 contain an ideal");
  auto* betti = app.add_subcommand("betti", "graded Betti numbers from the parameters p");
  auto* stratum = app.add_subcommand("stratum", "Betti stratum descriptor V(E, j, >= u)");
  auto* gdim = app.add_subcommand("gdim", "dimension of G(h) by both formulas");
  auto* generic = app.add_subcommand("generic", "generic family, Buchberger equations, elimination");
  auto* census = app.add_subcommand("census", "cell census of a colength");

  for (auto* s : {frame, dims, minors, canon, kinds, betti, stratum, gdim, generic, census}) common(s);
  for (auto* s : {frame, dims, minors, betti, stratum}) staircase_opts(s);
  minors->add_option("--kind", o.kind, "cell kind of the random N (V0..V3)");
  minors->add_option("--matrix", o.matrix, "N as JSON {\"m\":[...],\"N\":[...]}");
  canon->add_option("ideal", o.gens, "comma-separated generators in x, y")->required();
  kinds->add_option("ideal", o.gens, "comma-separated generators in x, y")->required();
  betti->add_option("--p", o.p, "comma-separated values of p_1..p_n (default 0)");
  stratum->add_option("--j", o.j, "degree")->required();
  stratum->add_option("--u", o.u, "stratum level")->required();
  gdim->add_option("--h", o.h, "Hilbert function h_0,...,h_s")->required();
  generic->add_option("generators", o.gens, "comma-separated monomial generators")->required();
  generic->add_option("--n", o.nvars, "number of variables (names x,y for 2, else x1..xn)");
  generic->add_option("--vars", o.vars, "comma-separated variable names");
  generic->add_flag("--ungraded", o.ungraded, "drop the degree condition (finite colength needed)");
  generic->add_flag("--log", o.log, "print the substitutions");
  census->add_option("--d", o.colength, "colength d")->required();
  census->add_option("--q", o.q, "compare with a brute-force count over F_q (q <= 4, d <= 3)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Format fmt = parse_format(o.format);
    if (*frame) cmd_frame(o, fmt, out);
    if (*dims) cmd_dims(o, fmt, out);
    if (*minors) cmd_minors(o, fmt, out);
    if (*canon) cmd_canonicalize(o, fmt, out);
    if (*kinds) cmd_kinds(o, fmt, out);
    if (*betti) cmd_betti(o, fmt, out);
    if (*stratum) cmd_stratum(o, fmt, out);
    if (*gdim) cmd_gdim(o, fmt, out);
    if (*generic) cmd_generic(o, fmt, out);
    if (*census) cmd_census(o, fmt, out);
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hbcells
