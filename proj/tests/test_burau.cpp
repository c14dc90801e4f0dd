#include <doctest.h>

#include "braidrep/burau.hpp"
#include "braidrep/presentations.hpp"
#include "support.hpp"

using namespace braidrep;
using namespace testsupport;

namespace {

PolyMatrix htilde(const AlgebraMatrix& m) {
  return m.map([](const AlgebraElement& x) { return augment(x, AugmentMode::Htilde); });
}

}  // namespace

TEST_CASE("evaluated generators for n = 2") {
  const BurauParams p{2};
  CHECK(burau_evaluated(Gen::sigma(1), p) == poly_matrix({{"1 - a", "a"}, {"1", "0"}}, Basis::delta()));
  CHECK(burau_evaluated(Gen::tau(1), p) == poly_matrix({{"0", "b^-1"}, {"b", "0"}}, Basis::delta()));
  CHECK(burau_evaluated(Gen::sigma(1, -1), p) == poly_matrix({{"0", "1"}, {"a^-1", "1 - a^-1"}}, Basis::delta()));
  CHECK(burau_evaluated(Gen::tau(1, -1), p) == burau_evaluated(Gen::tau(1), p));
}

TEST_CASE("symbolic sigma_1 at n = 3") {
  const BurauParams p{3};
  const Ambient amb = Ambient::welded(4);
  const auto m = burau_symbolic(Gen::sigma(1), p);
  const AlgebraElement s(GroupElement::from_word(amb, parse_word("s1")));
  const AlgebraElement conj(GroupElement::from_word(amb, parse_word("x1 x2 X1")));
  CHECK(m(0, 0) == s - P("a") * (s * conj));
  CHECK(m(0, 1) == P("a") * (s * AlgebraElement(GroupElement::from_word(amb, parse_word("x1")))));
  CHECK(m(1, 0) == s);
  CHECK(m(1, 1).is_zero());
  CHECK(m(2, 2) == s);
  CHECK(m(0, 2).is_zero());
  const auto t = burau_symbolic(Gen::tau(2), p);
  const AlgebraElement tt(GroupElement::from_word(amb, parse_word("t2")));
  CHECK(t(0, 0) == tt);
  CHECK(t(1, 2) == P("b^-1") * tt);
  CHECK(t(2, 1) == P("b") * tt);
}

TEST_CASE("generator inverses are exact") {
  for (int n = 2; n <= 4; ++n) {
    const BurauRepresentation rep(BurauParams{n});
    for (int i = 1; i < n; ++i) {
      for (const Gen g : {Gen::sigma(i), Gen::tau(i)}) {
        CHECK((rep.symbolic(g) * rep.symbolic(g.inverse())).is_identity());
        CHECK((rep.symbolic(g.inverse()) * rep.symbolic(g)).is_identity());
        CHECK((rep.evaluated(g) * rep.evaluated(g.inverse())).is_identity());
        CHECK(inverse(rep.evaluated(g)) == rep.evaluated(g.inverse()));
        CHECK(inverse(rep.symbolic(g)) == rep.symbolic(g.inverse()));
      }
    }
  }
}

TEST_CASE("random words times their inverses") {
  const BurauRepresentation rep(BurauParams{3});
  for (int trial = 0; trial < 60; ++trial) {
    const Word w = random_braid_word(3, 6);
    CHECK((rep.word_symbolic(w) * rep.word_symbolic(inverse(w))).is_identity());
    CHECK((rep.word_evaluated(w) * rep.word_evaluated(inverse(w))).is_identity());
  }
}

TEST_CASE("virtual relators hold") {
  for (int n = 3; n <= 4; ++n) {
    const BurauRepresentation rep(BurauParams{n});
    for (const auto& r : relators({Family::Virtual, n})) {
      CAPTURE(n);
      CAPTURE(r.label);
      CHECK(rep.word_symbolic(r.lhs) == rep.word_symbolic(r.rhs));
      CHECK(rep.word_evaluated(r.lhs) == rep.word_evaluated(r.rhs));
    }
  }
}

TEST_CASE("evaluation commutes with products") {
  const BurauRepresentation rep(BurauParams{3});
  for (const Family f : {Family::Welded, Family::TwinWelded}) {
    for (const auto& r : relators({f, 3})) {
      CHECK(htilde(rep.word_symbolic(r.lhs)) == rep.word_evaluated(r.lhs));
      CHECK(htilde(rep.word_symbolic(r.rhs)) == rep.word_evaluated(r.rhs));
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Word w = random_braid_word(3, 6);
    CHECK(htilde(rep.word_symbolic(w)) == rep.word_evaluated(w));
  }
}

TEST_CASE("forbidden relator needs beta = 1") {
  const BurauRepresentation rep(BurauParams{3});
  const Word lhs = parse_word("t1 s2 s1"), rhs = parse_word("s2 s1 t2");
  CHECK(rep.word_evaluated(lhs) != rep.word_evaluated(rhs));
  CHECK(rep.word_symbolic(lhs) != rep.word_symbolic(rhs));
  const Bindings b1{{Param::beta(), 1}};
  CHECK(substitute(rep.word_evaluated(lhs), b1) == substitute(rep.word_evaluated(rhs), b1));
  CHECK(substitute(rep.word_symbolic(lhs), b1) == substitute(rep.word_symbolic(rhs), b1));
}

TEST_CASE("twin relator under the candidate specializations") {
  const BurauRepresentation rep(BurauParams{3});
  const Word lhs = parse_word("t2 s1 s2"), rhs = parse_word("t1 s2 s1");
  CHECK(rep.word_evaluated(lhs) != rep.word_evaluated(rhs));
  // With the displayed matrices the two sides agree only at a = b = 1.
  const Bindings ba{{Param::beta(), P("a")}};
  CHECK(substitute(rep.word_evaluated(lhs), ba) != substitute(rep.word_evaluated(rhs), ba));
  const Bindings both{{Param::alpha(), 1}, {Param::beta(), 1}};
  CHECK(substitute(rep.word_evaluated(lhs), both) == substitute(rep.word_evaluated(rhs), both));
}

TEST_CASE("letters outside the group are rejected") {
  const BurauRepresentation rep(BurauParams{3});
  CHECK_THROWS_AS(rep.word_evaluated(parse_word("s3")), Error);
  CHECK_THROWS_AS(rep.word_evaluated(parse_word("q1.2")), Error);
}
