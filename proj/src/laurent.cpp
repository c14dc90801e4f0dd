#include "braidrep/laurent.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "braidrep/words.hpp"

namespace braidrep {

namespace {

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

int parse_positive(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    throw Error("bad parameter name '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Param Param::t(int level, int index) {
  if (level < 1 || index < 1) throw Error("parameter level and index must be positive");
  return {Kind::T, level, index};
}

std::string Param::name() const {
  switch (kind) {
    case Kind::Alpha:
      return "a";
    case Kind::Beta:
      return "b";
    case Kind::T:
      if (level == 1) return "t" + std::to_string(index);
      if (level == 2) return "s" + std::to_string(index);
      return "t[" + std::to_string(level) + "]" + std::to_string(index);
  }
  return {};
}

Param Param::parse(std::string_view name) {
  if (name == "a") return alpha();
  if (name == "b") return beta();
  if (name.size() >= 2 && name[0] == 't' && name[1] == '[') {
    const auto close = name.find(']');
    if (close == std::string_view::npos) throw Error("bad parameter name '" + std::string(name) + "'");
    return t(parse_positive(name.substr(2, close - 2), name), parse_positive(name.substr(close + 1), name));
  }
  if (name.size() >= 2 && (name[0] == 't' || name[0] == 's')) {
    return t(name[0] == 't' ? 1 : 2, parse_positive(name.substr(1), name));
  }
  throw Error("bad parameter name '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

Monomial Monomial::of(const Param& p, int exponent) {
  Monomial m;
  if (exponent != 0) m.exps_.emplace_back(p, exponent);
  return m;
}

int Monomial::degree_of(const Param& p) const {
  for (const auto& [q, e] : exps_) {
    if (q == p) return e;
  }
  return 0;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& pe : m.exps_) pe.second = -pe.second;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.exps_.begin();
  auto ib = b.exps_.begin();
  while (ia != a.exps_.end() || ib != b.exps_.end()) {
    if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
      out.exps_.push_back(*ia++);
    } else if (ia == a.exps_.end() || ib->first < ia->first) {
      out.exps_.push_back(*ib++);
    } else {
      const int e = ia->second + ib->second;
      if (e != 0) out.exps_.emplace_back(ia->first, e);
      ++ia;
      ++ib;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(Coeff c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, Coeff c) {
  LaurentPoly p;
  p.add_term(m, c);
  return p;
}

LaurentPoly LaurentPoly::param(const Param& p, int exponent) {
  return monomial(Monomial::of(p, exponent));
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw Error("Laurent polynomial '" + to_string() + "' is not a unit");
  const auto& [m, c] = *terms_.begin();
  return monomial(m.inverse(), c);
}

void LaurentPoly::add_term(const Monomial& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, checked_mul(ca, cb));
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, checked_mul(c, -1));
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  LaurentPoly base = e < 0 ? unit_inverse() : *this;
  LaurentPoly out(1);
  for (int k = 0; k < std::abs(e); ++k) out *= base;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string body;
    for (const auto& [p, e] : m.exponents()) {
      if (!body.empty()) body += '*';
      body += p.name();
      if (e != 1) body += "^" + std::to_string(e);
    }
    const Coeff mag = c < 0 ? -c : c;
    std::string term;
    if (body.empty()) {
      term = std::to_string(mag);
    } else if (mag == 1) {
      term = body;
    } else {
      term = std::to_string(mag) + "*" + body;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

LaurentPoly substitute(const LaurentPoly& p, const Bindings& bindings) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly term(c);
    Monomial kept;
    for (const auto& [param, e] : m.exponents()) {
      auto it = bindings.find(param);
      if (it == bindings.end()) {
        kept = kept * Monomial::of(param, e);
        continue;
      }
      if (e < 0 && !it->second.is_unit()) {
        throw Error("cannot substitute non-unit '" + it->second.to_string() + "' for " + param.name() +
                    " (negative exponent)");
      }
      term *= it->second.pow(e);
    }
    out += term * LaurentPoly::monomial(kept);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expression parser.

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cannot parse polynomial '" + std::string(s_) + "': " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == 'a' || c == 'b' || c == 't' ||
           c == 's';
  }

  LaurentPoly expr() {
    LaurentPoly acc;
    bool negate = false;
    if (peek_is('-')) {
      ++pos_;
      negate = true;
    } else if (peek_is('+')) {
      ++pos_;
    }
    LaurentPoly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (peek_is('+')) {
        ++pos_;
        acc += term();
      } else if (peek_is('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (true) {
      if (peek_is('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly factor() {
    LaurentPoly base = atom();
    if (peek_is('^')) {
      ++pos_;
      skip();
      int sign = 1;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        sign = -1;
        ++pos_;
      }
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      base = base.pow(sign * e);
    }
    return base;
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!peek_is(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      LaurentPoly::Coeff v = 0;
      auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
      if (ec != std::errc()) fail("bad integer");
      return LaurentPoly(v);
    }
    const std::size_t start = pos_;
    ++pos_;
    if ((c == 't' || c == 's') && pos_ < s_.size() && s_[pos_] == '[') {
      while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
      if (pos_ < s_.size()) ++pos_;
    }
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return LaurentPoly::param(Param::parse(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::pair<Param, LaurentPoly> parse_binding(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw Error("substitution must look like 'b=1', got '" + std::string(text) + "'");
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const Param p = Param::parse(trim(text.substr(0, eq)));
  LaurentPoly value = parse_poly(trim(text.substr(eq + 1)));
  if (!value.is_unit()) throw Error("substituted value must be a unit monomial: '" + std::string(text) + "'");
  return {p, std::move(value)};
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [param, e] : m.exponents()) exps[param.name()] = e;
    terms.push_back({{"coeff", c}, {"exps", exps}});
  }
  return {{"terms", terms}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  LaurentPoly out;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (const auto& [name, e] : t.at("exps").items()) m = m * Monomial::of(Param::parse(name), e.get<int>());
    out += LaurentPoly::monomial(m, t.at("coeff").get<LaurentPoly::Coeff>());
  }
  return out;
}

}  // namespace braidrep
