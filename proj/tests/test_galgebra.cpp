#include <doctest.h>

#include "braidrep/galgebra.hpp"
#include "braidrep/presentations.hpp"
#include "support.hpp"

using namespace braidrep;
using namespace testsupport;

namespace {

Word random_semidirect_word(int n, int max_len) {
  Word w;
  const int len = uniform(0, max_len);
  for (int p = 0; p < len; ++p) {
    const int sign = uniform(0, 1) ? 1 : -1;
    if (uniform(0, 2) == 0) {
      w.push_back(Gen::x(uniform(1, n), sign));
    } else {
      const int i = uniform(1, n);
      int j = uniform(1, n - 1);
      if (j >= i) ++j;
      w.push_back(Gen::xi(i, j, sign));
    }
  }
  return w;
}

AlgebraElement random_element(const Ambient& amb, const std::function<Word()>& word) {
  AlgebraElement x(amb);
  const int terms = uniform(0, 3);
  for (int k = 0; k < terms; ++k) x += AlgebraElement(GroupElement::from_word(amb, word()), random_poly(2));
  return x;
}

}  // namespace

TEST_CASE("welded elements are canonical") {
  const Ambient amb = Ambient::welded(4);
  CHECK(GroupElement::from_word(amb, parse_word("s1 s2 s1")) == GroupElement::from_word(amb, parse_word("s2 s1 s2")));
  CHECK(GroupElement::from_word(amb, parse_word("t1 s2 s1")) == GroupElement::from_word(amb, parse_word("s2 s1 t2")));
  CHECK(GroupElement::from_word(amb, parse_word("s1 S1")).is_identity());
  CHECK_FALSE(GroupElement::from_word(amb, parse_word("s1")) == GroupElement::from_word(amb, parse_word("S1")));
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = random_braid_word(4, 8), v = random_braid_word(4, 8);
    const auto gu = GroupElement::from_word(amb, u);
    const auto gv = GroupElement::from_word(amb, v);
    CHECK(gu * gv == GroupElement::from_word(amb, concat(u, v)));
    CHECK((gu * gu.inverse()).is_identity());
    CHECK((gu.inverse() * gu).is_identity());
  }
}

TEST_CASE("free letters in the welded ambient") {
  const Ambient amb = Ambient::welded(4);
  CHECK(GroupElement::from_word(amb, parse_word("x2")) == GroupElement::from_word(amb, xi_word(4, 2, 4)));
  CHECK(GroupElement::from_word(amb, parse_word("x2")) == GroupElement::from_word(amb, parse_word("q4.2")));
}

TEST_CASE("semidirect products and conjugation") {
  for (int n = 2; n <= 4; ++n) {
    const Ambient amb = Ambient::semidirect(n);
    for (int trial = 0; trial < 200; ++trial) {
      const Word u = random_semidirect_word(n, 6), v = random_semidirect_word(n, 6);
      const auto gu = GroupElement::from_word(amb, u);
      const auto gv = GroupElement::from_word(amb, v);
      CHECK(gu * gv == GroupElement::from_word(amb, concat(u, v)));
      CHECK((gu * gu.inverse()).is_identity());
      CHECK((gu.inverse() * gu).is_identity());
      // g^{-1} x g computed in the group agrees with the stated action on F_n.
      const FreeWord x = random_free_word(n, 4);
      const auto lhs = gu.inverse() * GroupElement::free(n, x) * gu;
      CHECK(lhs == GroupElement::free(n, gu.conjugation_action(x)));
    }
  }
}

TEST_CASE("semidirect relations") {
  const Ambient amb = Ambient::semidirect(3);
  // xi_{1,2} acts on x_1 by conjugation with x_2.
  const auto g = GroupElement::from_word(amb, parse_word("q1.2"));
  CHECK(g.conjugation_action({1}) == FreeWord{2, 1, -2});
  CHECK(g.conjugation_action({3}) == FreeWord{3});
  // q(n+1).k is the free letter x_k.
  CHECK(GroupElement::from_word(amb, parse_word("q4.2")) == GroupElement::free(3, {2}));
  CHECK_THROWS_AS(GroupElement::from_word(amb, parse_word("s1")), Error);
  CHECK_THROWS_AS(GroupElement::from_word(amb, parse_word("q5.1")), Error);
  CHECK(GroupElement::from_word(amb, parse_word("q1.2 x2")).to_string() == "q1.2 x2");
}

TEST_CASE("algebra ring laws") {
  const Ambient w = Ambient::welded(3);
  const Ambient s = Ambient::semidirect(3);
  const auto wb_word = [] { return random_braid_word(3, 4); };
  const auto sd_word = [] { return random_semidirect_word(3, 4); };
  for (const auto& [amb, gen] : {std::pair{w, std::function<Word()>(wb_word)}, std::pair{s, std::function<Word()>(sd_word)}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_element(amb, gen), y = random_element(amb, gen), z = random_element(amb, gen);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * AlgebraElement::one(amb) == x);
      CHECK((x - x).is_zero());
      CHECK(algebra_from_json(amb, to_json(x)) == x);
    }
  }
}

TEST_CASE("augmentations are multiplicative") {
  const Ambient w = Ambient::welded(3);
  const Ambient s = Ambient::semidirect(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_element(w, [] { return random_braid_word(3, 4); });
    const auto y = random_element(w, [] { return random_braid_word(3, 4); });
    CHECK(augment(x * y, AugmentMode::Htilde) == augment(x, AugmentMode::Htilde) * augment(y, AugmentMode::Htilde));
    const auto u = random_element(s, [] { return random_semidirect_word(3, 4); });
    const auto v = random_element(s, [] { return random_semidirect_word(3, 4); });
    CHECK(augment(u * v, AugmentMode::AMap) == augment(u, AugmentMode::AMap) * augment(v, AugmentMode::AMap));
    CHECK(augment(u + v, AugmentMode::AMap) == augment(u, AugmentMode::AMap) + augment(v, AugmentMode::AMap));
  }
  const AlgebraElement e(GroupElement::from_word(s, parse_word("q1.2 x2 x1 X2")), 3);
  CHECK(augment(e, AugmentMode::AMap) == P("3t1"));
}

TEST_CASE("units and rendering") {
  const Ambient amb = Ambient::welded(3);
  const AlgebraElement g(GroupElement::from_word(amb, parse_word("s1")), P("-a"));
  CHECK(g.is_unit());
  CHECK(g * g.unit_inverse() == AlgebraElement::one(amb));
  CHECK(g.to_string() == "-a*[s1]");
  CHECK_FALSE((AlgebraElement::one(amb) - g).is_unit());
  CHECK((AlgebraElement::one(amb) - g).to_string() == "1 + a*[s1]");
}
