#include "braidrep/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidrep {

namespace {

int parse_index(std::string_view digits, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 1) {
    throw Error("bad generator token '" + std::string(token) + "'");
  }
  return value;
}

Gen parse_token(std::string_view tok) {
  if (tok.size() < 2) throw Error("bad generator token '" + std::string(tok) + "'");
  const char c = tok.front();
  const int sign = (c >= 'A' && c <= 'Z') ? -1 : 1;
  const std::string_view rest = tok.substr(1);
  switch (c) {
    case 's':
    case 'S':
      return Gen::sigma(parse_index(rest, tok), sign);
    case 't':
    case 'T':
      return Gen::tau(parse_index(rest, tok), sign);
    case 'x':
    case 'X':
      return Gen::x(parse_index(rest, tok), sign);
    case 'q':
    case 'Q': {
      const auto dot = rest.find('.');
      if (dot == std::string_view::npos) {
        throw Error("bad generator token '" + std::string(tok) + "'");
      }
      const int i = parse_index(rest.substr(0, dot), tok);
      const int j = parse_index(rest.substr(dot + 1), tok);
      if (i == j) throw Error("xi generator needs distinct indices: '" + std::string(tok) + "'");
      return Gen::xi(i, j, sign);
    }
    default:
      throw Error("bad generator token '" + std::string(tok) + "'");
  }
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) w.push_back(parse_token(text.substr(pos, end - pos)));
    pos = end;
  }
  return w;
}

std::string format_gen(const Gen& g) {
  const bool inv = g.sign < 0;
  switch (g.kind) {
    case GenKind::Sigma:
      return (inv ? "S" : "s") + std::to_string(g.i);
    case GenKind::Tau:
      return (inv ? "T" : "t") + std::to_string(g.i);
    case GenKind::Xi:
      return (inv ? "Q" : "q") + std::to_string(g.i) + "." + std::to_string(g.j);
    case GenKind::FreeX:
      return (inv ? "X" : "x") + std::to_string(g.i);
  }
  return {};
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += ' ';
    out += format_gen(g);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

FreeWord reduce(FreeWord w) {
  std::size_t top = 0;
  for (int letter : w) {
    if (top > 0 && w[top - 1] == -letter) {
      --top;
    } else {
      w[top++] = letter;
    }
  }
  w.resize(top);
  return w;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

FreeWord free_concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out;
  out.reserve(a.size() + b.size());
  out = a;
  for (int l : b) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::string format_free(const FreeWord& w) { return w.empty() ? "1" : format_word(from_free(w)); }

FreeWord to_free(const Word& w) {
  FreeWord out;
  out.reserve(w.size());
  for (const auto& g : w) {
    if (g.kind != GenKind::FreeX) {
      throw Error("expected a free-group word, got letter '" + format_gen(g) + "'");
    }
    out.push_back(g.sign * g.i);
  }
  return out;
}

Word from_free(const FreeWord& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) out.push_back(Gen::x(std::abs(l), l > 0 ? 1 : -1));
  return out;
}

Word reduce(const Word& w) { return from_free(reduce(to_free(w))); }

// ---------------------------------------------------------------------------

FreeAutomorphism::FreeAutomorphism(int rank, std::vector<FreeWord> images)
    : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank_) {
    throw Error("automorphism needs one image per generator");
  }
  for (auto& im : images_) {
    for (int l : im) {
      if (l == 0 || std::abs(l) > rank_) throw Error("image letter out of range");
    }
    im = reduce(std::move(im));
  }
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<FreeWord> images(rank);
  for (int k = 1; k <= rank; ++k) images[k - 1] = {k};
  return FreeAutomorphism(rank, std::move(images));
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (int l : w) {
    const int k = std::abs(l);
    if (k > rank_) throw Error("letter x" + std::to_string(k) + " exceeds rank");
    const FreeWord& im = images_[k - 1];
    if (l > 0) {
      out = free_concat(out, im);
    } else {
      out = free_concat(out, free_inverse(im));
    }
  }
  return out;
}

bool FreeAutomorphism::is_identity() const { return *this == identity(rank_); }

FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank() != b.rank()) throw Error("rank mismatch in automorphism composition");
  std::vector<FreeWord> images;
  images.reserve(a.rank());
  for (const auto& im : a.images()) images.push_back(b.apply(im));
  return FreeAutomorphism(a.rank(), std::move(images));
}

Word apply(const FreeAutomorphism& a, const Word& w) { return from_free(a.apply(to_free(w))); }

bool auto_equal(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank() != b.rank()) throw Error("rank mismatch in automorphism comparison");
  return a == b;
}

FreeAutomorphism artin_auto(const Gen& g, int n) {
  if (g.kind != GenKind::Sigma && g.kind != GenKind::Tau) {
    throw Error("Artin action is defined on sigma/tau letters, got '" + format_gen(g) + "'");
  }
  if (g.i < 1 || g.i > n - 1) {
    throw Error("generator index out of range: '" + format_gen(g) + "' for n=" + std::to_string(n));
  }
  auto a = FreeAutomorphism::identity(n);
  std::vector<FreeWord> images = a.images();
  const int i = g.i;
  const int k = i + 1;
  if (g.kind == GenKind::Tau) {
    images[i - 1] = {k};
    images[k - 1] = {i};
  } else if (g.sign > 0) {
    images[i - 1] = {i, k, -i};
    images[k - 1] = {i};
  } else {
    images[i - 1] = {k};
    images[k - 1] = {-k, i, k};
  }
  return FreeAutomorphism(n, std::move(images));
}

FreeAutomorphism word_to_auto(const Word& w, int n) {
  auto result = FreeAutomorphism::identity(n);
  for (const auto& g : w) result = compose(result, artin_auto(g, n));
  return result;
}

std::string format_auto(const FreeAutomorphism& a) {
  std::ostringstream os;
  for (int k = 1; k <= a.rank(); ++k) {
    if (k > 1) os << ", ";
    const auto im = format_free(a.image(k));
    os << 'x' << k << " -> " << (im.empty() ? "1" : im);
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Permutation::Permutation(int size) : images_(size) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v - 1]) throw Error("not a permutation");
    seen[v - 1] = true;
  }
}

Permutation Permutation::transposition(int size, int a, int b) {
  Permutation p(size);
  std::swap(p.images_.at(a - 1), p.images_.at(b - 1));
  return p;
}

bool Permutation::is_identity() const { return *this == Permutation(size()); }

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error("permutation size mismatch");
  std::vector<int> images(p.size());
  for (int k = 1; k <= p.size(); ++k) images[k - 1] = p(q(k));
  return Permutation(std::move(images));
}

}  // namespace braidrep
