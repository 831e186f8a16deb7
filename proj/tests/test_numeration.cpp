#include <doctest.h>

#include <string>

#include "wordcomp/numeration.hpp"

using namespace wordcomp;

TEST_CASE("scale values of the built-in systems") {
  PositionalSystem trib = PositionalSystem::tribonacci();
  CHECK(trib.u_values(6) == std::vector<Int>{1, 2, 4, 7, 13, 24});
  PositionalSystem b2 = PositionalSystem::base(2);
  CHECK(b2.u_values(4) == std::vector<Int>{1, 2, 4, 8});
  PositionalSystem fib = PositionalSystem::fibonacci();
  CHECK(fib.u_values(6) == std::vector<Int>{1, 2, 3, 5, 8, 13});
  CHECK_THROWS_AS(trib.u_values(0), OutOfRangeError);
}

TEST_CASE("greedy representations") {
  PositionalSystem trib = PositionalSystem::tribonacci();
  CHECK(trib.rep(0).empty());
  CHECK(format_digits(trib.rep(4)) == "100");
  PositionalSystem b3 = PositionalSystem::base(3);
  CHECK(format_digits(b3.rep(5)) == "12");
}

TEST_CASE("values of digit strings") {
  PositionalSystem trib = PositionalSystem::tribonacci();
  CHECK(trib.val(parse_digits("1101")) == 12);
  CHECK(trib.val(Digits{}) == 0);
  CHECK(trib.val(parse_digits("1101001100")) == 478);
  CHECK(trib.val(parse_digits("0000100")) == 4);  // leading zeros ignored
  CHECK_THROWS_AS(trib.val(parse_digits("2")), DigitOutOfRangeError);
}

TEST_CASE("greedy condition checks") {
  PositionalSystem trib = PositionalSystem::tribonacci();
  CHECK_FALSE(trib.is_greedy(parse_digits("111")));  // 1+2+4 = U(3)
  CHECK(trib.is_greedy(parse_digits("100")));
  PositionalSystem b2 = PositionalSystem::base(2);
  CHECK(b2.is_greedy(parse_digits("11")));
  CHECK(b2.is_greedy(parse_digits("100")));
}

TEST_CASE("val inverts rep exhaustively") {
  for (const char* name : {"trib", "fib", "base:2", "base:3"}) {
    PositionalSystem sys = PositionalSystem::parse(name);
    for (std::uint64_t n = 0; n <= 100'000; ++n) {
      Digits d = sys.rep(n);
      CHECK(sys.val(d) == Int(n));
      if (n > 0) CHECK(d[0] != 0);  // no leading zero
      if (!sys.is_greedy(d)) {
        FAIL("non-greedy representation of ", n, " in ", name);
      }
    }
  }
}

TEST_CASE("representations are radix ordered") {
  PositionalSystem trib = PositionalSystem::tribonacci();
  Digits prev = trib.rep(0);
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    Digits cur = trib.rep(n);
    bool less = prev.size() < cur.size() ||
                (prev.size() == cur.size() &&
                 std::lexicographical_compare(prev.begin(), prev.end(), cur.begin(), cur.end()));
    if (!less) FAIL("radix order broken at ", n);
    prev = std::move(cur);
  }
}

TEST_CASE("tribonacci representations avoid 111") {
  PositionalSystem trib = PositionalSystem::tribonacci();
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    Digits d = trib.rep(n);
    for (std::size_t i = 0; i + 2 < d.size(); ++i) {
      if (d[i] == 1 && d[i + 1] == 1 && d[i + 2] == 1) FAIL("111 in rep of ", n);
    }
  }
}

TEST_CASE("digit bounds are computed on demand") {
  CHECK(PositionalSystem::tribonacci().digit_bound() == 1);
  CHECK(PositionalSystem::fibonacci().digit_bound() == 1);
  CHECK(PositionalSystem::base(7).digit_bound() == 6);
  PositionalSystem r = PositionalSystem::recurrence({1, 3}, {2, 1});
  r.u_values(8);
  CHECK(r.digit_bound() == 2);
}

TEST_CASE("system spec strings parse and round trip") {
  CHECK(PositionalSystem::parse("trib").to_string() == "trib");
  CHECK(PositionalSystem::parse("fib").to_string() == "fib");
  CHECK(PositionalSystem::parse("base:5").to_string() == "base:5");
  PositionalSystem rec = PositionalSystem::parse("rec:1,3;2,1");
  CHECK(rec.to_string() == "rec:1,3;2,1");
  CHECK(rec.u_values(4) == std::vector<Int>{1, 3, 7, 17});
  for (std::uint64_t n = 0; n <= 5000; ++n) CHECK(rec.val(rec.rep(n)) == Int(n));
  CHECK_THROWS_AS(PositionalSystem::parse("nope"), ParseError);
  CHECK_THROWS_AS(PositionalSystem::parse("base:1"), ParseError);
  CHECK_THROWS_AS(PositionalSystem::recurrence({2, 3}, {1, 1}), ParseError);
}

TEST_CASE("explicit tables work within their range") {
  PositionalSystem table = PositionalSystem::from_table({1, 2, 4, 8, 16});
  CHECK(format_digits(table.rep(11)) == "1011");
  CHECK_THROWS_AS(table.rep(40), OutOfRangeError);
}

TEST_CASE("huge indices do not overflow") {
  PositionalSystem trib = PositionalSystem::tribonacci();
  Int big = Int("123456789012345678901234567890");
  CHECK(trib.val(trib.rep(big)) == big);
}
