#pragma once

#include <map>

#include "braidrep/galgebra.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/words.hpp"

namespace braidrep {

struct BurauParams {
  int n = 2;
  Param alpha = Param::alpha();
  Param beta = Param::beta();
};

enum class MatrixMode { Symbolic, Evaluated };

/// V(sigma_i), V(tau_i) over Z[alpha^{+-1}, beta^{+-1}][WB_{n+1}] in the delta basis.
/// Inverse letters give the exact block inverse.
AlgebraMatrix burau_symbolic(const Gen& g, const BurauParams& p);

/// The h-tilde image of burau_symbolic: every group element sent to 1.
PolyMatrix burau_evaluated(const Gen& g, const BurauParams& p);

/// Generator matrices (and inverses) built once; products are read-only.
class BurauRepresentation {
 public:
  explicit BurauRepresentation(BurauParams p);

  const BurauParams& params() const { return params_; }
  const AlgebraMatrix& symbolic(const Gen& g) const;
  const PolyMatrix& evaluated(const Gen& g) const;

  AlgebraMatrix word_symbolic(const Word& w) const;
  PolyMatrix word_evaluated(const Word& w) const;

 private:
  BurauParams params_;
  std::map<Gen, AlgebraMatrix> symbolic_;
  std::map<Gen, PolyMatrix> evaluated_;
};

}  // namespace braidrep
