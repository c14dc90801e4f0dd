#pragma once

#include "braidrep/galgebra.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/words.hpp"

namespace braidrep {

/// d w / d x_k in Z[F_n], as an element of the semidirect group algebra with
/// trivial PW parts.  Uses d(uv) = du + u dv, dx_k/dx_k = 1, dx_k^{-1}/dx_k = -x_k^{-1}.
AlgebraElement fox_derivative(const FreeWord& w, int k, int n);
AlgebraElement fox_derivative(const Word& w, int k, int n);

/// sum_k (dw/dx_k)(x_k - 1) == w - 1.
bool fundamental_check(const FreeWord& w, int n);

/// Matrix of the right action of g on the relative augmentation ideal, in the
/// basis (x_1 - 1, ..., x_n - 1): row l holds the coefficients of (x_l - 1) g,
/// computed as g * d(a_g(x_l))/dx_k with a_g(x) = g^{-1} x g.
/// `g` may use xi_{i,j} letters with i, j <= n and free letters x_k (or q(n+1).k).
AlgebraMatrix fox_action_matrix(const Word& g, int n);

}  // namespace braidrep
