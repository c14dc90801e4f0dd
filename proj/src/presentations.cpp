#include "braidrep/presentations.hpp"

#include <cstdlib>

namespace braidrep {

namespace {

std::string label(const std::string& rule, std::initializer_list<int> idx) {
  std::string out = rule + "[";
  bool first = true;
  for (int v : idx) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

Word commutator(const Word& a, const Word& b) {
  // [a, b] = a^{-1} b^{-1} a b
  return concat(concat(inverse(a), inverse(b)), concat(a, b));
}

void braid_rules(int n, std::vector<Relator>& out) {
  for (int i = 1; i <= n - 2; ++i) {
    out.push_back({label("V1", {i}),
                   {Gen::sigma(i), Gen::sigma(i + 1), Gen::sigma(i)},
                   {Gen::sigma(i + 1), Gen::sigma(i), Gen::sigma(i + 1)}});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      out.push_back({label("V2", {i, j}), {Gen::sigma(i), Gen::sigma(j)}, {Gen::sigma(j), Gen::sigma(i)}});
    }
  }
}

void symmetric_rules(int n, std::vector<Relator>& out) {
  for (int i = 1; i <= n - 1; ++i) {
    out.push_back({label("V3", {i}), {Gen::tau(i), Gen::tau(i)}, {}});
  }
  for (int i = 1; i <= n - 2; ++i) {
    out.push_back({label("V4", {i}),
                   {Gen::tau(i), Gen::tau(i + 1), Gen::tau(i)},
                   {Gen::tau(i + 1), Gen::tau(i), Gen::tau(i + 1)}});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      out.push_back({label("V5", {i, j}), {Gen::tau(i), Gen::tau(j)}, {Gen::tau(j), Gen::tau(i)}});
    }
  }
}

void mixed_rules(int n, std::vector<Relator>& out) {
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) < 2) continue;
      out.push_back({label("V6", {i, j}), {Gen::sigma(i), Gen::tau(j)}, {Gen::tau(j), Gen::sigma(i)}});
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    out.push_back({label("V7", {i}),
                   {Gen::sigma(i), Gen::tau(i + 1), Gen::tau(i)},
                   {Gen::tau(i + 1), Gen::tau(i), Gen::sigma(i + 1)}});
  }
}

void virtual_rules(int n, std::vector<Relator>& out) {
  // Keep the rule numbering order V1..V7.
  std::vector<Relator> braid, sym, mixed;
  braid_rules(n, braid);
  symmetric_rules(n, sym);
  mixed_rules(n, mixed);
  out.insert(out.end(), braid.begin(), braid.end());
  out.insert(out.end(), sym.begin(), sym.end());
  out.insert(out.end(), mixed.begin(), mixed.end());
}

void mccool_rules(int n, std::vector<Relator>& out) {
  auto xi = [](int i, int j) { return Word{Gen::xi(i, j)}; };
  // [xi_{i,j}, xi_{s,t}] for disjoint index pairs, each unordered pair of generators once.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int s = 1; s <= n; ++s) {
        for (int t = 1; t <= n; ++t) {
          if (s == t || s == i || s == j || t == i || t == j) continue;
          if (std::pair{s, t} < std::pair{i, j}) continue;
          out.push_back({label("McCool1", {i, j, s, t}), commutator(xi(i, j), xi(s, t)), {}});
        }
      }
    }
  }
  // [xi_{i,j}, xi_{k,j}], i < k
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == k) continue;
        out.push_back({label("McCool2", {i, k, j}), commutator(xi(i, j), xi(k, j)), {}});
      }
    }
  }
  // [xi_{i,j} xi_{k,j}, xi_{i,k}]
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        out.push_back({label("McCool3", {i, j, k}), commutator(concat(xi(i, j), xi(k, j)), xi(i, k)), {}});
      }
    }
  }
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "braid") return Family::Braid;
  if (name == "sym") return Family::Symmetric;
  if (name == "vb") return Family::Virtual;
  if (name == "wb") return Family::Welded;
  if (name == "twb") return Family::TwinWelded;
  if (name == "pwb") return Family::PureWelded;
  throw Error("unknown group family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Braid:
      return "braid";
    case Family::Symmetric:
      return "sym";
    case Family::Virtual:
      return "vb";
    case Family::Welded:
      return "wb";
    case Family::TwinWelded:
      return "twb";
    case Family::PureWelded:
      return "pwb";
  }
  return {};
}

std::vector<Relator> relators(const GroupFamily& f) {
  if (f.n < 2) throw Error("group rank must be at least 2");
  const int n = f.n;
  std::vector<Relator> out;
  switch (f.tag) {
    case Family::Braid:
      braid_rules(n, out);
      break;
    case Family::Symmetric:
      symmetric_rules(n, out);
      break;
    case Family::Virtual:
      virtual_rules(n, out);
      break;
    case Family::Welded:
      virtual_rules(n, out);
      for (int i = 1; i <= n - 2; ++i) {
        out.push_back({label("Forbidden", {i}),
                       {Gen::tau(i), Gen::sigma(i + 1), Gen::sigma(i)},
                       {Gen::sigma(i + 1), Gen::sigma(i), Gen::tau(i + 1)}});
      }
      break;
    case Family::TwinWelded:
      virtual_rules(n, out);
      for (int i = 1; i <= n - 2; ++i) {
        out.push_back({label("Twin", {i}),
                       {Gen::tau(i + 1), Gen::sigma(i), Gen::sigma(i + 1)},
                       {Gen::tau(i), Gen::sigma(i + 1), Gen::sigma(i)}});
      }
      break;
    case Family::PureWelded:
      mccool_rules(n, out);
      break;
  }
  return out;
}

Relator mirror_relator(int i, int n) {
  if (i < 1 || i > n - 2) {
    throw Error("mirror relator index out of range: i=" + std::to_string(i) + ", n=" + std::to_string(n));
  }
  return {label("Mirror", {i}),
          {Gen::tau(i), Gen::tau(i + 1), Gen::sigma(i)},
          {Gen::sigma(i + 1), Gen::tau(i), Gen::tau(i + 1)}};
}

Word xi_word_literal(int i, int j, int n) {
  if (i < 1 || j > n || i >= j) throw Error("literal xi word needs 1 <= i < j <= n");
  Word w;
  for (int k = i; k <= j - 1; ++k) w.push_back(Gen::tau(k));
  w.push_back(Gen::sigma(j - 1));
  for (int k = j - 2; k >= i; --k) w.push_back(Gen::tau(k));
  return w;
}

Word xi_word(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw Error("xi indices must satisfy 1 <= i != j <= n (got " + std::to_string(i) + "," +
                std::to_string(j) + ", n=" + std::to_string(n) + ")");
  }
  if (i > j) return xi_word_literal(j, i, n);
  // The reversed literal word: tau_i ... tau_{j-2} sigma_{j-1} tau_{j-1} ... tau_i.
  Word w = xi_word_literal(i, j, n);
  return Word(w.rbegin(), w.rend());
}

Word expand_xi(const Word& w, int n) {
  Word out;
  for (const auto& g : w) {
    Word piece;
    if (g.kind == GenKind::Xi) {
      piece = xi_word(g.i, g.j, n);
    } else if (g.kind == GenKind::FreeX) {
      piece = xi_word(n, g.i, n);
    } else {
      out.push_back(g);
      continue;
    }
    if (g.sign < 0) piece = inverse(piece);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

Word twin_to_welded(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& g : w) {
    if (g.kind == GenKind::Sigma) {
      out.push_back(g.inverse());
    } else if (g.kind == GenKind::Tau) {
      out.push_back(g);
    } else {
      throw Error("twin map is defined on sigma/tau letters only");
    }
  }
  return out;
}

Permutation permutation_of(const Word& w, int n) {
  Permutation p(n);
  for (const auto& g : expand_xi(w, n)) {
    if (g.i < 1 || g.i > n - 1) throw Error("generator index out of range: '" + format_gen(g) + "'");
    p = p * Permutation::transposition(n, g.i, g.i + 1);
  }
  return p;
}

}  // namespace braidrep
