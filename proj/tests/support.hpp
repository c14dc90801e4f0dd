#pragma once

#include <random>
#include <string>
#include <vector>

#include "braidrep/galgebra.hpp"
#include "braidrep/laurent.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/words.hpp"

namespace testsupport {

using namespace braidrep;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline FreeWord random_free_word(int n, int max_len) {
  FreeWord w;
  const int len = uniform(0, max_len);
  for (int p = 0; p < len; ++p) w.push_back(uniform(1, n) * (uniform(0, 1) ? 1 : -1));
  return w;
}

/// Random word in sigma/tau letters of VB_n / WB_n.
inline Word random_braid_word(int n, int max_len) {
  Word w;
  const int len = uniform(0, max_len);
  for (int p = 0; p < len; ++p) {
    const int i = uniform(1, n - 1);
    const int sign = uniform(0, 1) ? 1 : -1;
    w.push_back(uniform(0, 1) ? Gen::sigma(i, sign) : Gen::tau(i, sign));
  }
  return w;
}

/// Random word in the generators xi_{i,j} of PW_n.
inline Word random_pure_word(int n, int max_len, int min_len = 0) {
  Word w;
  const int len = uniform(min_len, max_len);
  for (int p = 0; p < len; ++p) {
    const int i = uniform(1, n);
    int j = uniform(1, n - 1);
    if (j >= i) ++j;
    w.push_back(Gen::xi(i, j, uniform(0, 1) ? 1 : -1));
  }
  return w;
}

inline LaurentPoly random_poly(int max_terms = 3) {
  static const std::vector<Param> params = {Param::alpha(), Param::beta(), Param::t(1, 1), Param::t(1, 2),
                                            Param::t(2, 1)};
  LaurentPoly p;
  const int terms = uniform(0, max_terms);
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    const int vars = uniform(0, 2);
    for (int v = 0; v < vars; ++v) {
      m = m * Monomial::of(params[uniform(0, static_cast<int>(params.size()) - 1)], uniform(-2, 2));
    }
    p += LaurentPoly::monomial(m, uniform(-3, 3));
  }
  return p;
}

inline LaurentPoly P(const std::string& s) { return parse_poly(s); }

/// Builds a Laurent matrix from rows of polynomial strings.
inline PolyMatrix poly_matrix(const std::vector<std::vector<std::string>>& rows, Basis basis = {}) {
  PolyMatrix m(static_cast<int>(rows.size()), LaurentPoly(), basis);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = parse_poly(rows[r][c]);
  }
  return m;
}

/// +-1 times a single monomial.
inline bool is_signed_monomial(const LaurentPoly& p) { return p.is_unit(); }

}  // namespace testsupport
