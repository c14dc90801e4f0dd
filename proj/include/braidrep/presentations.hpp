#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidrep/words.hpp"

namespace braidrep {

enum class Family { Braid, Symmetric, Virtual, Welded, TwinWelded, PureWelded };

struct GroupFamily {
  Family tag = Family::Virtual;
  int n = 2;
};

/// Short CLI names: braid, sym, vb, wb, twb, pwb.
Family parse_family(std::string_view name);
std::string family_name(Family f);

/// A defining relation lhs = rhs.  Labels look like `V7[2]` or `McCool3[1,2,3]`.
struct Relator {
  std::string label;
  Word lhs;
  Word rhs;

  /// lhs * rhs^{-1}
  Word as_word() const { return concat(lhs, inverse(rhs)); }
};

/// Defining relators of the family, grouped by rule and ordered by indices.
std::vector<Relator> relators(const GroupFamily& f);

/// tau_i tau_{i+1} sigma_i = sigma_{i+1} tau_i tau_{i+1}; a consequence of (V1)-(V7).
Relator mirror_relator(int i, int n);

/// A sigma/tau word whose Artin automorphism conjugates x_i by x_j:
/// x_i -> x_j x_i x_j^{-1}, every other generator fixed.
Word xi_word(int i, int j, int n);

/// tau_i tau_{i+1} ... tau_{j-1} sigma_{j-1} tau_{j-2} ... tau_i, taken literally (i < j).
/// Its Artin automorphism is that of xi_{j,i}; kept for the word oracle.
Word xi_word_literal(int i, int j, int n);

/// Replaces every xi letter (and free letter x_k = xi_{n+1,k} when `n` is the
/// ambient strand count) by its sigma/tau expansion at rank n.
Word expand_xi(const Word& w, int n);

/// sigma_i -> sigma_i^{-1}, tau_i -> tau_i.
Word twin_to_welded(const Word& w);

/// Product of the transpositions (i, i+1) of the letters, composed as functions
/// in word order (rightmost letter applied first).  Signs are ignored.
Permutation permutation_of(const Word& w, int n);

}  // namespace braidrep
