#include "braidrep/burau.hpp"

namespace braidrep {

namespace {

void check_letter(const Gen& g, int n) {
  if (g.kind != GenKind::Sigma && g.kind != GenKind::Tau) {
    throw Error("Burau matrices are defined on sigma/tau letters, got '" + format_gen(g) + "'");
  }
  if (g.i < 1 || g.i > n - 1) {
    throw Error("generator index out of range: '" + format_gen(g) + "' for n=" + std::to_string(n));
  }
}

// Identity pattern scaled by `diag`, with the 2x2 block [[a, b], [c, 0]] at
// rows/columns (i, i+1).  For sign < 0 the exact inverse is produced:
// [[a, b], [c, 0]]^{-1} = [[0, c^{-1}], [b^{-1}, -b^{-1} a c^{-1}]].
template <typename T>
Matrix<T> block_generator(int n, int i, const T& diag, const T& a, const T& b, const T& c, int sign, Basis basis) {
  const T zero = zero_like(diag);
  Matrix<T> m(n, zero, basis);
  const int r = i - 1;
  if (sign > 0) {
    for (int k = 0; k < n; ++k) m(k, k) = diag;
    m(r, r) = a;
    m(r, r + 1) = b;
    m(r + 1, r) = c;
    m(r + 1, r + 1) = zero;
    return m;
  }
  const T diag_inv = diag.unit_inverse();
  const T b_inv = b.unit_inverse();
  const T c_inv = c.unit_inverse();
  for (int k = 0; k < n; ++k) m(k, k) = diag_inv;
  m(r, r) = zero;
  m(r, r + 1) = c_inv;
  m(r + 1, r) = b_inv;
  m(r + 1, r + 1) = -(b_inv * a * c_inv);
  return m;
}

}  // namespace

AlgebraMatrix burau_symbolic(const Gen& g, const BurauParams& p) {
  check_letter(g, p.n);
  const Ambient amb = Ambient::welded(p.n + 1);
  const int i = g.i;
  const LaurentPoly alpha = LaurentPoly::param(p.alpha);
  const LaurentPoly beta = LaurentPoly::param(p.beta);
  if (g.kind == GenKind::Sigma) {
    const AlgebraElement s(GroupElement::from_word(amb, {Gen::sigma(i)}));
    const AlgebraElement xi(GroupElement::from_word(amb, {Gen::x(i)}));
    const AlgebraElement conj(GroupElement::from_word(amb, {Gen::x(i), Gen::x(i + 1), Gen::x(i, -1)}));
    const AlgebraElement a = s - alpha * (s * conj);
    const AlgebraElement b = alpha * (s * xi);
    return block_generator(p.n, i, s, a, b, s, g.sign, Basis::delta());
  }
  const AlgebraElement t(GroupElement::from_word(amb, {Gen::tau(i)}));
  return block_generator(p.n, i, t, AlgebraElement::zero(amb), beta.unit_inverse() * t, beta * t, g.sign,
                         Basis::delta());
}

PolyMatrix burau_evaluated(const Gen& g, const BurauParams& p) {
  check_letter(g, p.n);
  const LaurentPoly alpha = LaurentPoly::param(p.alpha);
  const LaurentPoly beta = LaurentPoly::param(p.beta);
  if (g.kind == GenKind::Sigma) {
    return block_generator<LaurentPoly>(p.n, g.i, 1, LaurentPoly(1) - alpha, alpha, 1, g.sign, Basis::delta());
  }
  return block_generator<LaurentPoly>(p.n, g.i, 1, 0, beta.unit_inverse(), beta, g.sign, Basis::delta());
}

BurauRepresentation::BurauRepresentation(BurauParams p) : params_(p) {
  if (p.n < 2) throw Error("Burau representation needs n >= 2");
  for (int i = 1; i <= p.n - 1; ++i) {
    for (int sign : {1, -1}) {
      for (const Gen g : {Gen::sigma(i, sign), Gen::tau(i, sign)}) {
        symbolic_.emplace(g, burau_symbolic(g, p));
        evaluated_.emplace(g, burau_evaluated(g, p));
      }
    }
  }
}

const AlgebraMatrix& BurauRepresentation::symbolic(const Gen& g) const {
  check_letter(g, params_.n);
  return symbolic_.at(g);
}

const PolyMatrix& BurauRepresentation::evaluated(const Gen& g) const {
  check_letter(g, params_.n);
  return evaluated_.at(g);
}

AlgebraMatrix BurauRepresentation::word_symbolic(const Word& w) const {
  AlgebraMatrix m = algebra_identity(Ambient::welded(params_.n + 1), params_.n, Basis::delta());
  for (const auto& g : w) m = m * symbolic(g);
  return m;
}

PolyMatrix BurauRepresentation::word_evaluated(const Word& w) const {
  PolyMatrix m = poly_identity(params_.n, Basis::delta());
  for (const auto& g : w) m = m * evaluated(g);
  return m;
}

}  // namespace braidrep
