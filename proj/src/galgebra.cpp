#include "braidrep/galgebra.hpp"

#include <tuple>

#include "braidrep/presentations.hpp"

namespace braidrep {

std::string Ambient::to_string() const {
  return (kind == Kind::Welded ? "WB_" : "F_n x| PW_n, n=") + std::to_string(rank);
}

// ---------------------------------------------------------------------------

GroupElement GroupElement::identity(const Ambient& amb) {
  GroupElement g;
  g.ambient_ = amb;
  g.autom_ = FreeAutomorphism::identity(amb.rank);
  return g;
}

GroupElement GroupElement::free(int n, const FreeWord& w) {
  GroupElement g = identity(Ambient::semidirect(n));
  for (int l : w) {
    if (l == 0 || std::abs(l) > n) throw Error("free letter out of range for F_" + std::to_string(n));
  }
  g.free_ = reduce(w);
  return g;
}

GroupElement GroupElement::from_word(const Ambient& amb, const Word& w) {
  GroupElement g = identity(amb);
  if (amb.kind == Ambient::Kind::Welded) {
    for (const auto& letter : w) {
      if (letter.kind == GenKind::Xi && (letter.i > amb.rank || letter.j > amb.rank)) {
        throw Error("letter '" + format_gen(letter) + "' outside WB_" + std::to_string(amb.rank));
      }
      if (letter.kind == GenKind::FreeX && letter.i >= amb.rank) {
        throw Error("letter '" + format_gen(letter) + "' outside WB_" + std::to_string(amb.rank));
      }
    }
    g.autom_ = word_to_auto(expand_xi(w, amb.rank), amb.rank);
    g.witness_ = w;
    return g;
  }

  const int n = amb.rank;
  for (const auto& letter : w) {
    GroupElement factor = identity(amb);
    if (letter.kind == GenKind::FreeX || (letter.kind == GenKind::Xi && letter.i == n + 1)) {
      const int k = letter.kind == GenKind::FreeX ? letter.i : letter.j;
      if (k < 1 || k > n) throw Error("letter '" + format_gen(letter) + "' outside F_" + std::to_string(n));
      factor.free_ = {letter.sign * k};
    } else if (letter.kind == GenKind::Xi) {
      if (letter.i > n || letter.j > n) {
        throw Error("letter '" + format_gen(letter) + "' is not in F_" + std::to_string(n) + " x| PW_" +
                    std::to_string(n));
      }
      Word xw = xi_word(letter.i, letter.j, n);
      if (letter.sign < 0) xw = braidrep::inverse(xw);
      factor.autom_ = word_to_auto(xw, n);
      factor.witness_ = {letter};
    } else {
      throw Error("letter '" + format_gen(letter) + "' is not in F_" + std::to_string(n) + " x| PW_" +
                  std::to_string(n));
    }
    g = g * factor;
  }
  return g;
}

bool GroupElement::is_identity() const { return free_.empty() && autom_.is_identity(); }

GroupElement GroupElement::inverse() const {
  if (ambient_.kind == Ambient::Kind::Welded) return from_word(ambient_, braidrep::inverse(witness_));
  // (g w)^{-1} = w^{-1} g^{-1}
  const GroupElement ginv = from_word(ambient_, braidrep::inverse(witness_));
  return free(ambient_.rank, free_inverse(free_)) * ginv;
}

FreeWord GroupElement::conjugation_action(const FreeWord& x) const {
  if (ambient_.kind != Ambient::Kind::Semidirect) throw Error("conjugation action needs the semidirect ambient");
  return free_concat(free_concat(free_inverse(free_), autom_.apply(x)), free_);
}

std::string GroupElement::to_string() const {
  if (is_identity()) return "1";
  if (ambient_.kind == Ambient::Kind::Welded) return format_word(witness_);
  return format_word(concat(witness_, from_free(free_)));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (!(a.ambient_ == b.ambient_)) throw Error("group elements live in different ambients");
  GroupElement out;
  out.ambient_ = a.ambient_;
  out.autom_ = compose(a.autom_, b.autom_);
  out.witness_ = concat(a.witness_, b.witness_);
  if (a.ambient_.kind == Ambient::Kind::Semidirect) {
    out.free_ = free_concat(b.autom_.apply(a.free_), b.free_);
  }
  return out;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.ambient_ == b.ambient_ && a.autom_ == b.autom_ && a.free_ == b.free_;
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  return std::tie(a.ambient_, a.autom_, a.free_) < std::tie(b.ambient_, b.autom_, b.free_);
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(const GroupElement& g, LaurentPoly coeff) : ambient_(g.ambient()) {
  add_term(g, coeff);
}

AlgebraElement AlgebraElement::scalar(const Ambient& amb, LaurentPoly c) {
  return AlgebraElement(GroupElement::identity(amb), std::move(c));
}

bool AlgebraElement::is_unit() const { return terms_.size() == 1 && terms_.begin()->second.is_unit(); }

AlgebraElement AlgebraElement::unit_inverse() const {
  if (!is_unit()) throw Error("algebra element '" + to_string() + "' is not a unit");
  const auto& [g, c] = *terms_.begin();
  return AlgebraElement(g.inverse(), c.unit_inverse());
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (!(ambient_ == o.ambient_)) {
    throw Error("algebra elements over different groups: " + ambient_.to_string() + " vs " + o.ambient_.to_string());
  }
}

void AlgebraElement::add_term(const GroupElement& g, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(o);
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same(o);
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same(b);
  AlgebraElement out(a.ambient_);
  for (const auto& [ga, ca] : a.terms_) {
    for (const auto& [gb, cb] : b.terms_) out.add_term(ga * gb, ca * cb);
  }
  return out;
}

AlgebraElement operator*(const LaurentPoly& c, const AlgebraElement& a) {
  AlgebraElement out(a.ambient_);
  for (const auto& [g, ca] : a.terms_) out.add_term(g, c * ca);
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(ambient_);
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    std::string coeff = c.to_string();
    const bool negative = c.terms().size() == 1 && c.terms().begin()->second < 0;
    if (negative) coeff = (-c).to_string();
    const bool compound = c.terms().size() > 1;
    if (compound) coeff = "(" + coeff + ")";
    std::string term;
    if (g.is_identity()) {
      term = coeff;
    } else if (coeff == "1") {
      term = "[" + g.to_string() + "]";
    } else {
      term = coeff + "*[" + g.to_string() + "]";
    }
    if (first) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

AlgebraElement substitute(const AlgebraElement& x, const Bindings& bindings) {
  AlgebraElement out(x.ambient());
  for (const auto& [g, c] : x.terms()) out += substitute(c, bindings) * AlgebraElement(g);
  return out;
}

LaurentPoly augment(const AlgebraElement& x, AugmentMode mode) {
  const bool welded = x.ambient().kind == Ambient::Kind::Welded;
  if (mode == AugmentMode::Htilde && !welded) throw Error("h-tilde augmentation needs a welded ambient");
  if (mode == AugmentMode::AMap && welded) throw Error("a-map augmentation needs the semidirect ambient");
  LaurentPoly out;
  for (const auto& [g, c] : x.terms()) {
    if (mode == AugmentMode::Htilde) {
      out += c;
      continue;
    }
    Monomial m;
    for (int l : g.free_part()) m = m * Monomial::of(Param::t(1, std::abs(l)), l > 0 ? 1 : -1);
    out += c * LaurentPoly::monomial(m);
  }
  return out;
}

nlohmann::json to_json(const AlgebraElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [g, c] : x.terms()) {
    terms.push_back({{"coeff", to_json(c)}, {"group", g.is_identity() ? "" : g.to_string()}});
  }
  return {{"terms", terms}};
}

AlgebraElement algebra_from_json(const Ambient& amb, const nlohmann::json& j) {
  AlgebraElement out(amb);
  for (const auto& t : j.at("terms")) {
    const auto g = GroupElement::from_word(amb, parse_word(t.at("group").get<std::string>()));
    out += AlgebraElement(g, poly_from_json(t.at("coeff")));
  }
  return out;
}

}  // namespace braidrep
