#include <doctest.h>

#include "braidrep/laurent.hpp"
#include "support.hpp"

using namespace braidrep;
using namespace testsupport;

TEST_CASE("parameter names") {
  CHECK(Param::alpha().name() == "a");
  CHECK(Param::beta().name() == "b");
  CHECK(Param::t(1, 3).name() == "t3");
  CHECK(Param::t(2, 1).name() == "s1");
  CHECK(Param::t(3, 4).name() == "t[3]4");
  for (const char* s : {"a", "b", "t1", "s2", "t[3]4", "t12"}) CHECK(Param::parse(s).name() == s);
  CHECK_THROWS_AS(Param::parse("u1"), Error);
  CHECK_THROWS_AS(Param::parse("t0"), Error);
}

TEST_CASE("rendering") {
  CHECK(P("1 - t1").to_string() == "1 - t1");
  CHECK(P("t2*s2").to_string() == "t2*s2");
  CHECK(P("b^-1").to_string() == "b^-1");
  CHECK(P("0").to_string() == "0");
  CHECK(P("-a*b^-1 + b^-1").to_string() == "-a*b^-1 + b^-1");
  CHECK(P("s2(1-t1)") == P("s2 - s2*t1"));
  CHECK(P("(1-t1)(1-s1)") == P("1 - t1 - s1 + t1*s1"));
  CHECK(P("(a+b)^2") == P("a^2 + 2a*b + b^2"));
  CHECK_THROWS_AS(P("1 +"), Error);
  CHECK_THROWS_AS(P("(a"), Error);
}

TEST_CASE("ring axioms on random triples") {
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly x = random_poly(), y = random_poly(), z = random_poly();
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == LaurentPoly());
    CHECK(x * LaurentPoly(1) == x);
    CHECK(x + LaurentPoly() == x);
    CHECK(P(x.to_string()) == x);
  }
}

TEST_CASE("canonical storage") {
  const LaurentPoly x = P("a*t1 - t1*a + 2");
  CHECK(x == LaurentPoly(2));
  CHECK(x.terms().size() == 1);
  CHECK((P("a") - P("a")).is_zero());
}

TEST_CASE("units") {
  CHECK(P("a^2*b^-1").is_unit());
  CHECK(P("-t1").is_unit());
  CHECK_FALSE(P("2a").is_unit());
  CHECK_FALSE(P("1 - a").is_unit());
  CHECK_FALSE(LaurentPoly().is_unit());
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly m = random_poly(1);
    if (!m.is_unit()) continue;
    CHECK(m * m.unit_inverse() == LaurentPoly(1));
  }
  CHECK_THROWS_AS(P("1 - a").unit_inverse(), Error);
  CHECK(P("a").pow(-2) == P("a^-2"));
}

TEST_CASE("substitution is a ring homomorphism") {
  const Bindings b1{{Param::beta(), 1}};
  const Bindings ba{{Param::beta(), P("a")}};
  CHECK(substitute(P("-a*b^-1 + b^-1"), b1) == P("1 - a"));
  CHECK(substitute(P("b^-2 + b"), ba) == P("a^-2 + a"));
  for (const Bindings* b : {&b1, &ba}) {
    for (int trial = 0; trial < 200; ++trial) {
      const LaurentPoly x = random_poly(), y = random_poly();
      CHECK(substitute(x * y, *b) == substitute(x, *b) * substitute(y, *b));
      CHECK(substitute(x + y, *b) == substitute(x, *b) + substitute(y, *b));
    }
  }
  CHECK_THROWS_AS(substitute(P("b^-1"), Bindings{{Param::beta(), P("1 - a")}}), Error);
}

TEST_CASE("bindings") {
  const auto [p, v] = parse_binding("b=a");
  CHECK(p == Param::beta());
  CHECK(v == P("a"));
  CHECK_THROWS_AS(parse_binding("b"), Error);
  CHECK_THROWS_AS(parse_binding("2=a"), Error);
}

TEST_CASE("json round trip") {
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly x = random_poly(4);
    CHECK(poly_from_json(to_json(x)) == x);
  }
}

TEST_CASE("overflow is reported") {
  LaurentPoly x(std::int64_t{1} << 62);
  CHECK_THROWS(x * LaurentPoly(4));
}
