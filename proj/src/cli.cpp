#include "braidrep/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "braidrep/burau.hpp"
#include "braidrep/fox.hpp"
#include "braidrep/gassner.hpp"
#include "braidrep/presentations.hpp"
#include "braidrep/verify.hpp"

namespace braidrep {

namespace {

nlohmann::json ambient_json(const Ambient& a) {
  return {{"kind", a.kind == Ambient::Kind::Welded ? "welded" : "semidirect"}, {"rank", a.rank}};
}

Ambient ambient_from_json(const nlohmann::json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const int rank = j.at("rank").get<int>();
  if (kind == "welded") return Ambient::welded(rank);
  if (kind == "semidirect") return Ambient::semidirect(rank);
  throw Error("unknown ambient kind '" + kind + "'");
}

template <typename T, typename F>
nlohmann::json matrix_json(const Matrix<T>& m, nlohmann::json ambient, F&& entry) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(entry(m(r, c)));
    rows.push_back(row);
  }
  return {{"size", m.size()}, {"basis", m.basis().to_string()}, {"ambient", ambient}, {"entries", rows}};
}

template <typename T, typename F>
Matrix<T> matrix_from_json(const nlohmann::json& j, const T& zero, F&& entry) {
  const int n = j.at("size").get<int>();
  Matrix<T> m(n, zero, Basis::parse(j.at("basis").get<std::string>()));
  const auto& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != n) throw Error("matrix JSON has the wrong number of rows");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) throw Error("matrix JSON has a short row");
    for (int c = 0; c < n; ++c) m(r, c) = entry(rows[r][c]);
  }
  return m;
}

struct Options {
  bool json = false;
  int n = 0;
  int r = 1;
  int i = 0;
  int j = 0;
  int wrt = 0;
  std::string word;
  std::string group;
  std::string mode = "evaluated";
  std::string rep;
  std::vector<std::string> subst;
  std::vector<int> reduce;
};

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

MatrixMode parse_mode(const std::string& s) {
  if (s == "symbolic") return MatrixMode::Symbolic;
  if (s == "evaluated") return MatrixMode::Evaluated;
  throw Error("mode must be symbolic or evaluated, got '" + s + "'");
}

template <typename T>
void emit_matrix(std::ostream& out, const Matrix<T>& m, bool json, const nlohmann::json& header = {}) {
  if (json) {
    nlohmann::json j = to_json(m);
    if (!header.is_null()) j["input"] = header;
    print_json(out, j);
  } else {
    out << m.to_string();
  }
}

int cmd_relators(const Options& o, std::ostream& out) {
  const GroupFamily f{parse_family(o.group), o.n};
  const auto rels = relators(f);
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rels) arr.push_back({{"label", r.label}, {"lhs", format_word(r.lhs)}, {"rhs", format_word(r.rhs)}});
    print_json(out, arr);
  } else {
    for (const auto& r : rels) {
      const auto side = [](const Word& w) { return w.empty() ? std::string("1") : format_word(w); };
      out << r.label << ": " << side(r.lhs) << " = " << side(r.rhs) << "\n";
    }
  }
  return 0;
}

int cmd_artin(const Options& o, std::ostream& out) {
  const auto a = word_to_auto(expand_xi(parse_word(o.word), o.n), o.n);
  if (o.json) {
    nlohmann::json images = nlohmann::json::object();
    for (int k = 1; k <= o.n; ++k) images["x" + std::to_string(k)] = format_free(a.image(k));
    print_json(out, {{"n", o.n}, {"word", o.word}, {"images", images}});
  } else {
    out << format_auto(a) << "\n";
  }
  return 0;
}

int cmd_fox(const Options& o, std::ostream& out) {
  const auto d = fox_derivative(parse_word(o.word), o.wrt, o.n);
  if (o.json) {
    print_json(out, {{"n", o.n}, {"word", o.word}, {"wrt", o.wrt}, {"derivative", to_json(d)}});
  } else {
    out << d.to_string() << "\n";
  }
  return 0;
}

int cmd_foxmat(const Options& o, std::ostream& out) {
  emit_matrix(out, fox_action_matrix(parse_word(o.word), o.n), o.json);
  return 0;
}

int cmd_burau(const Options& o, std::ostream& out) {
  const BurauRepresentation rep(BurauParams{o.n});
  const Word w = parse_word(o.word);
  const Substitution s = Substitution::parse(o.subst);
  if (parse_mode(o.mode) == MatrixMode::Symbolic) {
    emit_matrix(out, substitute(rep.word_symbolic(w), s.bindings), o.json);
  } else {
    emit_matrix(out, substitute(rep.word_evaluated(w), s.bindings), o.json);
  }
  return 0;
}

int cmd_gassner(const Options& o, std::ostream& out) {
  if (parse_mode(o.mode) == MatrixMode::Symbolic) {
    emit_matrix(out, gassner_symbolic(o.i, o.j, o.n), o.json);
  } else {
    emit_matrix(out, gassner_evaluated(o.i, o.j, o.n), o.json);
  }
  return 0;
}

int cmd_iterate(const Options& o, std::ostream& out) {
  PolyMatrix m = iterate({o.n, o.r}, o.i, o.j);
  if (!o.reduce.empty()) m = delete_rows_cols(m, std::set<int>(o.reduce.begin(), o.reduce.end()));
  emit_matrix(out, m, o.json);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const GroupFamily f{parse_family(o.group), o.n};
  const auto report = verify_rep(f, RepSpec::parse(o.rep), Substitution::parse(o.subst));
  if (o.json) {
    print_json(out, report.to_json());
  } else {
    out << report.to_text();
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

nlohmann::json to_json(const PolyMatrix& m) {
  return matrix_json(m, nullptr, [](const LaurentPoly& p) { return nlohmann::json{{"poly", to_json(p)}}; });
}

nlohmann::json to_json(const AlgebraMatrix& m) {
  const Ambient amb = m.size() > 0 ? m(0, 0).ambient() : Ambient{};
  return matrix_json(m, ambient_json(amb), [](const AlgebraElement& x) { return to_json(x); });
}

PolyMatrix poly_matrix_from_json(const nlohmann::json& j) {
  return matrix_from_json(j, LaurentPoly(), [](const nlohmann::json& e) { return poly_from_json(e.at("poly")); });
}

AlgebraMatrix algebra_matrix_from_json(const nlohmann::json& j) {
  const Ambient amb = ambient_from_json(j.at("ambient"));
  return matrix_from_json(j, AlgebraElement::zero(amb),
                          [&amb](const nlohmann::json& e) { return algebra_from_json(amb, e); });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representations of virtual, welded and pure welded braid groups", "braidrep"};
  app.require_subcommand(1);
  Options o;
  const auto add_json = [&o](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON instead of text"); };
  const auto add_n = [&o](CLI::App* sub, const std::string& help) {
    sub->add_option("--n", o.n, help)->required()->check(CLI::Range(1, 64));
  };

  auto* rel = app.add_subcommand("relators", "List the defining relators of a group family");
  rel->add_option("--group", o.group, "braid|sym|vb|wb|twb|pwb")->required();
  add_n(rel, "Number of strands");
  add_json(rel);

  auto* artin = app.add_subcommand("artin", "Artin automorphism of a word");
  add_n(artin, "Number of strands");
  artin->add_option("--word", o.word, "Word in s/t/q letters")->required();
  add_json(artin);

  auto* fox = app.add_subcommand("fox", "Fox derivative of a free word");
  add_n(fox, "Rank of the free group");
  fox->add_option("--word", o.word, "Word in x letters")->required();
  fox->add_option("--wrt", o.wrt, "Generator index k")->required();
  add_json(fox);

  auto* foxmat = app.add_subcommand("foxmat", "Fox action matrix of an element of F_n x| PW_n");
  add_n(foxmat, "Rank of the free group");
  foxmat->add_option("--elem", o.word, "Word in q/x letters")->required();
  add_json(foxmat);

  auto* burau = app.add_subcommand("burau", "Burau-type matrix of a virtual braid word");
  add_n(burau, "Number of strands");
  burau->add_option("--word", o.word, "Word in s/t letters")->required();
  burau->add_option("--mode", o.mode, "symbolic|evaluated")->required();
  burau->add_option("--subst", o.subst, "Parameter binding such as b=1");
  add_json(burau);

  auto* gassner = app.add_subcommand("gassner", "Gassner-type matrix of a generator q<i>.<j>");
  add_n(gassner, "Rank of the pure welded group");
  gassner->add_option("--i", o.i, "First index")->required();
  gassner->add_option("--j", o.j, "Second index")->required();
  gassner->add_option("--mode", o.mode, "symbolic|evaluated")->required();
  add_json(gassner);

  auto* iter = app.add_subcommand("iterate", "Iterated Gassner-type matrix");
  add_n(iter, "Base rank");
  iter->add_option("--r", o.r, "Iteration depth")->required();
  iter->add_option("--i", o.i, "First index")->required();
  iter->add_option("--j", o.j, "Second index")->required();
  iter->add_option("--reduce", o.reduce, "1-based rows/columns to delete, e.g. 4,8,12")->delimiter(',');
  add_json(iter);

  auto* ver = app.add_subcommand("verify", "Check every defining relator under a representation");
  ver->add_option("--group", o.group, "vb|wb|twb|pwb (also braid, sym)")->required();
  add_n(ver, "Number of strands");
  ver->add_option("--rep", o.rep, "artin|burau-symbolic|burau-evaluated|gassner-symbolic|gassner-evaluated|iterated-<r>")
      ->required();
  ver->add_option("--subst", o.subst, "Parameter binding such as b=1 or b=a");
  add_json(ver);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "braidrep: " << e.what() << "\n";
    return 2;
  }

  try {
    if (rel->parsed()) return cmd_relators(o, out);
    if (artin->parsed()) return cmd_artin(o, out);
    if (fox->parsed()) return cmd_fox(o, out);
    if (foxmat->parsed()) return cmd_foxmat(o, out);
    if (burau->parsed()) return cmd_burau(o, out);
    if (gassner->parsed()) return cmd_gassner(o, out);
    if (iter->parsed()) return cmd_iterate(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "braidrep: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace braidrep
