#include <doctest.h>

#include "zfr/arith.hpp"

using namespace zfr;

TEST_SUITE("arith") {
  TEST_CASE("parse_rational accepts fractions, integers and decimals") {
    CHECK(parse_rational("999/2") == BigRational(999, 2));
    CHECK(parse_rational("-6/4") == BigRational(-3, 2));
    CHECK(parse_rational("17") == BigRational(17));
    CHECK(parse_rational("-0.25") == BigRational(-1, 4));
    CHECK(parse_rational("1e-3") == BigRational(1, 1000));
    CHECK(parse_rational("2.5E2") == BigRational(250));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(parse_rational("0")) == "0");
  }

  TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
  }

  TEST_CASE("log enclosure brackets ln and is tight") {
    // ln 2017 = 7.6093665379542...; reference from a 40-digit mpmath run.
    const BigRational reference = parse_rational("7.609366537954212");
    const auto e = rigorous::log(BigRational(2017));
    CHECK(e.lo <= e.hi);
    CHECK(e.hi - e.lo < BigRational(1, 1000000) * BigRational(1, 1000000) * BigRational(1, 1000000));
    CHECK(abs(e.lo - reference) < parse_rational("1e-15"));
    CHECK(rigorous::log(BigRational(1)).lo == 0);
    CHECK(rigorous::log(BigRational(1)).hi == 0);
    CHECK_THROWS(rigorous::log(BigRational(0)));
  }

  TEST_CASE("directed rounding goes the requested way") {
    const BigRational third(1, 3);
    const BigRational down = rigorous::round(third, rigorous::Round::Down);
    const BigRational up = rigorous::round(third, rigorous::Round::Up);
    CHECK(down < third);
    CHECK(third < up);
    CHECK(up - down <= BigRational(1, 1000000000) * BigRational(1, 1000000000) * BigRational(1, 1000000000));
    // Exactly representable values survive unchanged.
    CHECK(rigorous::round(BigRational(-3, 8), rigorous::Round::Up) == BigRational(-3, 8));
    CHECK(rigorous::round(BigRational(-3, 8), rigorous::Round::Down) == BigRational(-3, 8));
  }

  TEST_CASE("inverse_root and self_power_ratio enclose their values") {
    const auto r = rigorous::inverse_root(BigInt(10000), 2);
    CHECK(r.lo <= BigRational(1, 100));
    CHECK(r.hi >= BigRational(1, 100));
    const auto g = rigorous::self_power_ratio(2, 3);  // 4/27
    CHECK(g.lo <= BigRational(4, 27));
    CHECK(g.hi >= BigRational(4, 27));
    CHECK(g.hi - g.lo < parse_rational("1e-12"));
    const auto s = rigorous::self_power_ratio(0, 1);  // 0^0 / 1 = 1
    CHECK(s.lo <= 1);
    CHECK(s.hi >= 1);
  }
}
