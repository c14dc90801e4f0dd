#include "braidrep/verify.hpp"

#include <future>
#include <memory>
#include <sstream>

#include "braidrep/burau.hpp"
#include "braidrep/gassner.hpp"
#include "braidrep/matrix.hpp"

namespace braidrep {

RepSpec RepSpec::parse(std::string_view text) {
  if (text == "artin") return {Tag::Artin};
  if (text == "burau-symbolic") return {Tag::BurauSymbolic};
  if (text == "burau-evaluated") return {Tag::BurauEvaluated};
  if (text == "gassner-symbolic") return {Tag::GassnerSymbolic};
  if (text == "gassner-evaluated") return {Tag::GassnerEvaluated};
  std::string_view rest;
  if (text.rfind("iterated-", 0) == 0) {
    rest = text.substr(9);
  } else if (text.rfind("iterated(", 0) == 0 && text.back() == ')') {
    rest = text.substr(9, text.size() - 10);
  } else {
    throw Error("unknown representation '" + std::string(text) + "'");
  }
  int r = 0;
  try {
    r = std::stoi(std::string(rest));
  } catch (const std::exception&) {
    throw Error("bad iteration depth in '" + std::string(text) + "'");
  }
  if (r < 1) throw Error("iteration depth must be positive");
  return {Tag::Iterated, r};
}

std::string RepSpec::to_string() const {
  switch (tag) {
    case Tag::Artin:
      return "artin";
    case Tag::BurauSymbolic:
      return "burau-symbolic";
    case Tag::BurauEvaluated:
      return "burau-evaluated";
    case Tag::GassnerSymbolic:
      return "gassner-symbolic";
    case Tag::GassnerEvaluated:
      return "gassner-evaluated";
    case Tag::Iterated:
      return "iterated-" + std::to_string(level);
  }
  return {};
}

Substitution Substitution::parse(const std::vector<std::string>& items) {
  Substitution s;
  for (const auto& item : items) {
    auto [p, v] = parse_binding(item);
    s.bindings[p] = v;
    if (!s.label.empty()) s.label += ",";
    s.label += p.name() + "=" + v.to_string();
  }
  return s;
}

namespace {

bool is_pure_rep(RepSpec::Tag t) {
  return t == RepSpec::Tag::GassnerSymbolic || t == RepSpec::Tag::GassnerEvaluated || t == RepSpec::Tag::Iterated;
}

// One representation, built once and shared read-only between relator checks.
class Evaluator {
 public:
  Evaluator(const RepSpec& rep, int n) : rep_(rep), n_(n) {
    using Tag = RepSpec::Tag;
    switch (rep.tag) {
      case Tag::Artin:
        break;
      case Tag::BurauSymbolic:
      case Tag::BurauEvaluated:
        burau_ = std::make_unique<BurauRepresentation>(BurauParams{n});
        break;
      case Tag::GassnerSymbolic:
        gassner_ = std::make_unique<GassnerRepresentation>(GassnerRepresentation::Kind::Symbolic, n);
        break;
      case Tag::GassnerEvaluated:
        gassner_ = std::make_unique<GassnerRepresentation>(GassnerRepresentation::Kind::Evaluated, n);
        break;
      case Tag::Iterated:
        gassner_ = std::make_unique<GassnerRepresentation>(GassnerRepresentation::Kind::Iterated,
                                                           n + rep.level - 1, rep.level);
        break;
    }
  }

  RelatorRecord check(const Relator& rel, const Substitution& subst) const {
    RelatorRecord rec;
    rec.label = rel.label;
    using Tag = RepSpec::Tag;
    switch (rep_.tag) {
      case Tag::Artin: {
        const auto a = word_to_auto(expand_xi(rel.lhs, n_), n_);
        const auto b = word_to_auto(expand_xi(rel.rhs, n_), n_);
        rec.pass = a == b;
        for (int k = 1; !rec.pass && k <= n_; ++k) {
          if (a.image(k) != b.image(k)) {
            rec.position = std::pair{k, 0};
            rec.lhs_value = format_free(a.image(k));
            rec.rhs_value = format_free(b.image(k));
            break;
          }
        }
        return rec;
      }
      case Tag::BurauSymbolic:
        return compare(rec, substitute(burau_->word_symbolic(rel.lhs), subst.bindings),
                       substitute(burau_->word_symbolic(rel.rhs), subst.bindings));
      case Tag::BurauEvaluated:
        return compare(rec, substitute(burau_->word_evaluated(rel.lhs), subst.bindings),
                       substitute(burau_->word_evaluated(rel.rhs), subst.bindings));
      case Tag::GassnerSymbolic:
        return compare(rec, substitute(gassner_->word_symbolic(rel.lhs), subst.bindings),
                       substitute(gassner_->word_symbolic(rel.rhs), subst.bindings));
      case Tag::GassnerEvaluated:
      case Tag::Iterated:
        return compare(rec, substitute(gassner_->word_evaluated(rel.lhs), subst.bindings),
                       substitute(gassner_->word_evaluated(rel.rhs), subst.bindings));
    }
    return rec;
  }

 private:
  template <typename T>
  static RelatorRecord compare(RelatorRecord rec, const Matrix<T>& a, const Matrix<T>& b) {
    const auto diff = a.first_difference(b);
    rec.pass = !diff.has_value();
    if (diff) {
      rec.position = std::pair{diff->first + 1, diff->second + 1};
      rec.lhs_value = render(a(diff->first, diff->second));
      rec.rhs_value = render(b(diff->first, diff->second));
    }
    return rec;
  }

  RepSpec rep_;
  int n_;
  std::unique_ptr<BurauRepresentation> burau_;
  std::unique_ptr<GassnerRepresentation> gassner_;
};

void check_applicable(Family f, const RepSpec& rep) {
  if (rep.tag == RepSpec::Tag::Artin) return;
  const bool pure = f == Family::PureWelded;
  if (pure != is_pure_rep(rep.tag)) {
    throw Error("representation " + rep.to_string() + " does not apply to family " + family_name(f));
  }
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& r : records) {
    if (!r.pass) return false;
  }
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j = {{"label", r.label}, {"status", r.pass ? "pass" : "fail"}};
    if (r.position) {
      j["witness"] = {{"row", r.position->first}, {"col", r.position->second}, {"lhs", r.lhs_value}, {"rhs", r.rhs_value}};
    }
    recs.push_back(j);
  }
  return {{"family", family_name(family.tag)},
          {"n", family.n},
          {"rep", rep.to_string()},
          {"substitution", substitution},
          {"all_pass", all_pass()},
          {"relators", recs}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "group " << family_name(family.tag) << " n=" << family.n << ", rep " << rep.to_string();
  if (!substitution.empty()) os << ", substitution " << substitution;
  os << "\n";
  int passed = 0;
  for (const auto& r : records) {
    os << (r.pass ? "  pass  " : "  FAIL  ") << r.label;
    if (r.position) {
      os << "  at (" << r.position->first << "," << r.position->second << "): " << r.lhs_value << "  vs  "
         << r.rhs_value;
    }
    os << "\n";
    passed += r.pass ? 1 : 0;
  }
  os << passed << "/" << records.size() << " relators hold\n";
  return os.str();
}

VerificationReport verify_rep(const GroupFamily& family, const RepSpec& rep, const Substitution& subst) {
  check_applicable(family.tag, rep);
  const auto rels = relators(family);
  const Evaluator eval(rep, family.n);

  std::vector<std::future<RelatorRecord>> pending;
  pending.reserve(rels.size());
  for (const auto& rel : rels) {
    pending.push_back(std::async(std::launch::async, [&eval, &rel, &subst] { return eval.check(rel, subst); }));
  }
  VerificationReport report{family, rep, subst.label, {}};
  for (auto& f : pending) report.records.push_back(f.get());
  return report;
}

RelatorRecord check_relator(const Relator& rel, const RepSpec& rep, int n, const Substitution& subst) {
  return Evaluator(rep, n).check(rel, subst);
}

std::vector<FactorOutcome> factor_analysis(const Relator& rel, const RepSpec& rep, int n) {
  const Evaluator eval(rep, n);
  std::vector<FactorOutcome> out;
  out.push_back({"generic", eval.check(rel, {}).pass});
  for (const char* s : {"b=1", "b=a", "a=1"}) {
    out.push_back({s, eval.check(rel, Substitution::parse({s})).pass});
  }
  return out;
}

}  // namespace braidrep
