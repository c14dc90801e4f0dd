#include "braidrep/gassner.hpp"

namespace braidrep {

namespace {

void check_pair(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw Error("xi indices must satisfy 1 <= i != j <= " + std::to_string(n) + " (got " + std::to_string(i) + "," +
                std::to_string(j) + ")");
  }
}

LaurentPoly t_param(int level, int k) { return LaurentPoly::param(Param::t(level, k)); }

// Copies `block` into `out` at block position (br, bc), 0-based.
void place(PolyMatrix& out, const PolyMatrix& block, int br, int bc) {
  const int s = block.size();
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) out(br * s + r, bc * s + c) = block(r, c);
  }
}

PolyMatrix level_matrix(int n, int r, int i, int j) {
  const int outer = n + 1 - r;
  const PolyMatrix inner = r == 1 ? poly_identity(1) : level_matrix(n, r - 1, i, j);
  const int s = inner.size();
  PolyMatrix unit = poly_identity(s);
  auto free_block = [&](int k) {
    PolyMatrix f = poly_identity(s);
    if (r > 1) f(s - 1, s - 1) = t_param(r - 1, k);
    return f;
  };
  PolyMatrix inner_plain = inner;
  inner_plain.set_basis({});
  const PolyMatrix fj = free_block(j);
  const PolyMatrix fi = free_block(i);

  PolyMatrix out(outer * s, LaurentPoly(), Basis::iterated(r));
  for (int a = 0; a < outer; ++a) place(out, inner_plain, a, a);

  PolyMatrix diag_block = fj.map([&](const LaurentPoly& x) { return t_param(r, j) * x; });
  place(out, inner_plain * diag_block, i - 1, i - 1);

  PolyMatrix conj = fj * fi * inverse(fj);
  PolyMatrix off_block = unit;
  for (int p = 0; p < s; ++p) {
    for (int q = 0; q < s; ++q) off_block(p, q) -= t_param(r, i) * conj(p, q);
  }
  place(out, inner_plain * off_block, i - 1, j - 1);
  return out;
}

}  // namespace

AlgebraMatrix gassner_symbolic(int i, int j, int n) {
  check_pair(i, j, n);
  const Ambient amb = Ambient::semidirect(n);
  const AlgebraElement g(GroupElement::from_word(amb, {Gen::xi(i, j)}));
  const AlgebraElement gxj(GroupElement::from_word(amb, {Gen::xi(i, j), Gen::x(j)}));
  const AlgebraElement gconj(GroupElement::from_word(amb, {Gen::xi(i, j), Gen::x(j), Gen::x(i), Gen::x(j, -1)}));
  AlgebraMatrix m(n, AlgebraElement::zero(amb), Basis::aug_ideal());
  for (int k = 0; k < n; ++k) m(k, k) = g;
  m(i - 1, i - 1) = gxj;
  m(i - 1, j - 1) = g - gconj;
  return m;
}

PolyMatrix gassner_evaluated(int i, int j, int n) {
  check_pair(i, j, n);
  PolyMatrix m = poly_identity(n, Basis::aug_ideal());
  m(i - 1, i - 1) = t_param(1, j);
  m(i - 1, j - 1) = LaurentPoly(1) - t_param(1, i);
  return m;
}

int IterationSpec::matrix_size() const {
  int size = 1;
  for (int k = 0; k < r; ++k) size *= n - k;
  return size;
}

PolyMatrix iterate(const IterationSpec& spec, int i, int j) {
  if (spec.n < 2) throw Error("iteration base must be at least 2");
  if (spec.r < 1 || spec.r > spec.n) throw Error("iteration depth must satisfy 1 <= r <= n");
  check_pair(i, j, spec.group_rank());
  return level_matrix(spec.n, spec.r, i, j);
}

PolyMatrix relevel(const PolyMatrix& m, int level) {
  return m.map([level](const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [mono, c] : p.terms()) {
      Monomial renamed;
      for (const auto& [param, e] : mono.exponents()) {
        Param q = param;
        if (q.kind == Param::Kind::T && q.level == 1) q.level = level;
        renamed = renamed * Monomial::of(q, e);
      }
      out += LaurentPoly::monomial(renamed, c);
    }
    return out;
  });
}

// ---------------------------------------------------------------------------

GassnerRepresentation::GassnerRepresentation(Kind kind, int n, int r) : kind_(kind), n_(n), r_(r) {
  if (kind == Kind::Iterated) {
    if (r < 1 || r > n) throw Error("iteration depth must satisfy 1 <= r <= n");
  } else {
    r_ = 1;
  }
  const int m = group_rank();
  if (m < 2) throw Error("pure welded group needs at least 2 strands");
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      const Gen g = Gen::xi(i, j);
      if (kind == Kind::Symbolic) {
        auto mat = gassner_symbolic(i, j, n);
        symbolic_.emplace(g.inverse(), inverse(mat));
        symbolic_.emplace(g, std::move(mat));
      } else {
        auto mat = kind == Kind::Evaluated ? gassner_evaluated(i, j, n) : iterate({n, r_}, i, j);
        evaluated_.emplace(g.inverse(), inverse(mat));
        evaluated_.emplace(g, std::move(mat));
      }
    }
  }
}

void GassnerRepresentation::check_letter(const Gen& g) const {
  const int m = group_rank();
  if (g.kind != GenKind::Xi || g.i > m || g.j > m) {
    throw Error("letter '" + format_gen(g) + "' is not a generator of PW_" + std::to_string(m));
  }
}

const AlgebraMatrix& GassnerRepresentation::symbolic(const Gen& g) const {
  if (kind_ != Kind::Symbolic) throw Error("representation has no symbolic matrices");
  check_letter(g);
  return symbolic_.at(g);
}

const PolyMatrix& GassnerRepresentation::evaluated(const Gen& g) const {
  if (kind_ == Kind::Symbolic) throw Error("representation has no evaluated matrices");
  check_letter(g);
  return evaluated_.at(g);
}

AlgebraMatrix GassnerRepresentation::word_symbolic(const Word& w) const {
  AlgebraMatrix m = algebra_identity(Ambient::semidirect(n_), n_, Basis::aug_ideal());
  for (const auto& g : w) m = m * symbolic(g);
  return m;
}

PolyMatrix GassnerRepresentation::word_evaluated(const Word& w) const {
  const Basis basis = kind_ == Kind::Iterated ? Basis::iterated(r_) : Basis::aug_ideal();
  PolyMatrix m = poly_identity(kind_ == Kind::Iterated ? IterationSpec{n_, r_}.matrix_size() : n_, basis);
  for (const auto& g : w) m = m * evaluated(g);
  return m;
}

}  // namespace braidrep
