#include <doctest.h>

#include "braidrep/presentations.hpp"
#include "braidrep/words.hpp"
#include "support.hpp"

using namespace braidrep;
using namespace testsupport;

namespace {

// Stack reduction kept separate from the library implementation.
FreeWord oracle_reduce(const FreeWord& w) {
  FreeWord st;
  for (int x : w) {
    if (!st.empty() && st.back() == -x) {
      st.pop_back();
    } else {
      st.push_back(x);
    }
  }
  return st;
}

// Letter images straight from the definitions of rho_i, rho_i^{-1} and theta_i.
std::vector<FreeWord> letter_images(const Gen& g, int n) {
  std::vector<FreeWord> img;
  for (int k = 1; k <= n; ++k) img.push_back({k});
  const int i = g.i;
  if (g.kind == GenKind::Tau) {
    img[i - 1] = {i + 1};
    img[i] = {i};
  } else if (g.sign > 0) {
    img[i - 1] = {i, i + 1, -i};
    img[i] = {i};
  } else {
    img[i - 1] = {i + 1};
    img[i] = {-(i + 1), i, i + 1};
  }
  return img;
}

std::vector<FreeWord> oracle_auto(const Word& w, int n) {
  std::vector<FreeWord> cur;
  for (int k = 1; k <= n; ++k) cur.push_back({k});
  for (const auto& g : w) {
    const auto li = letter_images(g, n);
    for (auto& image : cur) {
      FreeWord out;
      for (int x : image) {
        FreeWord piece = li[std::abs(x) - 1];
        if (x < 0) {
          FreeWord inv;
          for (auto it = piece.rbegin(); it != piece.rend(); ++it) inv.push_back(-*it);
          piece = inv;
        }
        out.insert(out.end(), piece.begin(), piece.end());
      }
      image = oracle_reduce(out);
    }
  }
  return cur;
}

}  // namespace

TEST_CASE("word grammar round trip") {
  const Word w = parse_word("s3 S3 t2 T2 q1.2 Q1.2 x4 X4");
  REQUIRE(w.size() == 8);
  CHECK(w[0] == Gen::sigma(3));
  CHECK(w[1] == Gen::sigma(3, -1));
  CHECK(w[4] == Gen::xi(1, 2));
  CHECK(w[7] == Gen::x(4, -1));
  CHECK(format_word(w) == "s3 S3 t2 T2 q1.2 Q1.2 x4 X4");
  CHECK(parse_word("").empty());
  CHECK(parse_word("   ").empty());
  CHECK_THROWS_AS(parse_word("s"), Error);
  CHECK_THROWS_AS(parse_word("y2"), Error);
  CHECK_THROWS_AS(parse_word("q1"), Error);
  CHECK_THROWS_AS(parse_word("s0"), Error);
}

TEST_CASE("free reduction") {
  CHECK(reduce(FreeWord{1, 2, -2, -1, 3}) == FreeWord{3});
  CHECK(reduce(FreeWord{1, -1}).empty());
  CHECK(format_free({1, 2, -1}) == "x1 x2 X1");
  CHECK(format_free({}) == "1");
  for (int trial = 0; trial < 500; ++trial) {
    const FreeWord w = random_free_word(4, 14);
    const FreeWord r = reduce(w);
    CHECK(reduce(r) == r);
    CHECK(r == oracle_reduce(w));
    for (std::size_t k = 1; k < r.size(); ++k) CHECK(r[k] != -r[k - 1]);
  }
}

TEST_CASE("artin generators") {
  CHECK(format_auto(word_to_auto(parse_word("s1"), 3)) == "x1 -> x1 x2 X1, x2 -> x1, x3 -> x3");
  CHECK(format_auto(word_to_auto(parse_word("S1"), 3)) == "x1 -> x2, x2 -> X2 x1 x2, x3 -> x3");
  CHECK(format_auto(word_to_auto(parse_word("t2"), 3)) == "x1 -> x1, x2 -> x3, x3 -> x2");
  CHECK(word_to_auto(parse_word("s2 S2"), 3).is_identity());
  CHECK(word_to_auto(parse_word("t1 t1"), 3).is_identity());
  CHECK_THROWS_AS(word_to_auto(parse_word("s3"), 3), Error);
}

TEST_CASE("artin action agrees with direct substitution") {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform(2, 5);
    const Word w = random_braid_word(n, 10);
    CHECK(word_to_auto(w, n).images() == oracle_auto(w, n));
  }
}

TEST_CASE("artin map respects concatenation") {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform(2, 5);
    const Word u = random_braid_word(n, 8);
    const Word v = random_braid_word(n, 8);
    CHECK(word_to_auto(concat(u, v), n) == compose(word_to_auto(u, n), word_to_auto(v, n)));
    CHECK(compose(word_to_auto(u, n), word_to_auto(inverse(u), n)).is_identity());
    const FreeWord x = random_free_word(n, 6);
    CHECK(word_to_auto(concat(u, v), n).apply(x) == word_to_auto(v, n).apply(word_to_auto(u, n).apply(x)));
  }
}

TEST_CASE("welded relators act trivially") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& r : relators({Family::Welded, n})) {
      CAPTURE(r.label);
      CHECK(word_to_auto(r.as_word(), n).is_identity());
    }
  }
}

TEST_CASE("twin relator is not welded") {
  const Word lhs = parse_word("t2 s1 s2");
  const Word rhs = parse_word("t1 s2 s1");
  CHECK(word_to_auto(lhs, 3) != word_to_auto(rhs, 3));
  CHECK_FALSE(auto_equal(word_to_auto(lhs, 3), word_to_auto(rhs, 3)));
}

TEST_CASE("permutation composition") {
  const Permutation a = Permutation::transposition(3, 1, 2);
  const Permutation b = Permutation::transposition(3, 2, 3);
  const Permutation ab = a * b;
  CHECK(ab(3) == 1);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 3);
  CHECK((a * a).is_identity());
}
