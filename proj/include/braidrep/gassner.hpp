#pragma once

#include <map>
#include <utility>

#include "braidrep/galgebra.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/words.hpp"

namespace braidrep {

/// C(xi_{i,j}) over Z[F_n x| PW_n] in the basis (x_k - 1):
/// xi_{i,j} on the diagonal, except (i,i) = xi_{i,j} x_j and
/// (i,j) = xi_{i,j} (1 - x_j x_i x_j^{-1}).
AlgebraMatrix gassner_symbolic(int i, int j, int n);

/// a-map image: identity except (i,i) = t_j and (i,j) = 1 - t_i.
PolyMatrix gassner_evaluated(int i, int j, int n);

/// Depth-r iteration for the pure welded group on n+1-r strands, base n.
struct IterationSpec {
  int n = 2;
  int r = 1;

  /// n (n-1) ... (n-r+1)
  int matrix_size() const;
  /// n + 1 - r
  int group_rank() const { return n + 1 - r; }
};

/// xi^{(r)}_{i,j}: the Gassner block pattern of size n+1-r whose blocks are
/// level-(r-1) matrices.  Level-r parameters are T(r, k).  The free-generator
/// block xi^{(r-1)}_{n+1,k} is the level-(r-1) identity with its last diagonal
/// entry replaced by T(r-1, k) (the scalar 1 at level 0).
PolyMatrix iterate(const IterationSpec& spec, int i, int j);

/// Renames level-1 parameters t_k to level-`level` parameters.
PolyMatrix relevel(const PolyMatrix& m, int level);

/// Generator matrices (and inverses) of one of the pure-group representations.
class GassnerRepresentation {
 public:
  enum class Kind { Symbolic, Evaluated, Iterated };

  /// For Symbolic/Evaluated the represented group is PW_n; for Iterated it is
  /// PW_{n+1-r} with base n.
  GassnerRepresentation(Kind kind, int n, int r = 1);

  Kind kind() const { return kind_; }
  int group_rank() const { return kind_ == Kind::Iterated ? n_ + 1 - r_ : n_; }

  const AlgebraMatrix& symbolic(const Gen& g) const;
  const PolyMatrix& evaluated(const Gen& g) const;

  AlgebraMatrix word_symbolic(const Word& w) const;
  PolyMatrix word_evaluated(const Word& w) const;

 private:
  void check_letter(const Gen& g) const;

  Kind kind_;
  int n_;
  int r_;
  std::map<Gen, AlgebraMatrix> symbolic_;
  std::map<Gen, PolyMatrix> evaluated_;
};

}  // namespace braidrep
