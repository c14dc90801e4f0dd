#include "braidrep/fox.hpp"

#include <cstdlib>

namespace braidrep {

AlgebraElement fox_derivative(const FreeWord& w, int k, int n) {
  if (k < 1 || k > n) throw Error("Fox derivative index out of range");
  const Ambient amb = Ambient::semidirect(n);
  AlgebraElement result(amb);
  // Left-to-right fold of the product rule; `prefix` is the word read so far.
  FreeWord prefix;
  for (int letter : reduce(w)) {
    if (std::abs(letter) > n) throw Error("free letter out of range for F_" + std::to_string(n));
    if (letter == k) {
      result += AlgebraElement(GroupElement::free(n, prefix));
    } else if (letter == -k) {
      result -= AlgebraElement(GroupElement::free(n, free_concat(prefix, {letter})));
    }
    prefix = free_concat(prefix, {letter});
  }
  return result;
}

AlgebraElement fox_derivative(const Word& w, int k, int n) { return fox_derivative(to_free(w), k, n); }

bool fundamental_check(const FreeWord& w, int n) {
  const Ambient amb = Ambient::semidirect(n);
  AlgebraElement lhs(amb);
  for (int k = 1; k <= n; ++k) {
    const AlgebraElement xk_minus_1 = AlgebraElement(GroupElement::free(n, {k})) - AlgebraElement::one(amb);
    lhs += fox_derivative(w, k, n) * xk_minus_1;
  }
  const AlgebraElement rhs = AlgebraElement(GroupElement::free(n, w)) - AlgebraElement::one(amb);
  return lhs == rhs;
}

AlgebraMatrix fox_action_matrix(const Word& g, int n) {
  const Ambient amb = Ambient::semidirect(n);
  const GroupElement elem = GroupElement::from_word(amb, g);
  const AlgebraElement left(elem);
  AlgebraMatrix m(n, AlgebraElement::zero(amb), Basis::aug_ideal());
  for (int l = 1; l <= n; ++l) {
    const FreeWord rewritten = elem.conjugation_action({l});
    for (int k = 1; k <= n; ++k) {
      const AlgebraElement d = fox_derivative(rewritten, k, n);
      if (!d.is_zero()) m(l - 1, k - 1) = left * d;
    }
  }
  return m;
}

}  // namespace braidrep
