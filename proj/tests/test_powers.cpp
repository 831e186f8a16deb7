#include <doctest.h>

#include <random>

#include "wordcomp/classics.hpp"
#include "wordcomp/complexity.hpp"
#include "wordcomp/powers.hpp"
#include "wordcomp/prefix_buffer.hpp"

using namespace wordcomp;

namespace {

// independent recount of a claimed power witness
void verify_witness(PrefixBuffer& src, const PowerWitness& w, const Valuation& v) {
  auto s = src.ensure(w.position + static_cast<std::size_t>(w.k) * w.order);
  REQUIRE(s.size() >= w.position + static_cast<std::size_t>(w.k) * w.order);
  auto block = [&](unsigned t) {
    return s.subspan(w.position + t * w.order, w.order);
  };
  for (unsigned t = 1; t < w.k; ++t) {
    if (w.kind == ComplexityKind::abelian) {
      REQUIRE(parikh(block(t), src.alphabet()) == parikh(block(0), src.alphabet()));
    } else {
      REQUIRE(weighted_sum(block(t), v) == weighted_sum(block(0), v));
    }
  }
}

}  // namespace

TEST_CASE("abelian square search on the Fibonacci word") {
  PrefixBuffer fib = PrefixBuffer::morphic(classics::fibonacci(), 0);
  // order-1 square = the first 00, at position 2 of 010010100...
  auto witness = find_power(fib, ComplexityKind::abelian, 2, 1, 1000);
  REQUIRE(witness.has_value());
  CHECK(witness->position == 2);
  verify_witness(fib, *witness, fib.identity_valuation());
}

TEST_CASE("tribonacci has abelian squares of small orders") {
  PrefixBuffer trib = PrefixBuffer::morphic(classics::tribonacci(), 0);
  Valuation id = trib.identity_valuation();
  for (std::size_t order = 1; order <= 50; ++order) {
    auto witness = find_power(trib, ComplexityKind::abelian, 2, order, 50'000);
    REQUIRE(witness.has_value());
    verify_witness(trib, *witness, id);
    // abelian equivalence refines additive equivalence
    auto additive = find_power(trib, ComplexityKind::additive, 2, order, 50'000, &id);
    REQUIRE(additive.has_value());
    CHECK(additive->position <= witness->position);
  }
}

TEST_CASE("ccss avoids small additive cubes") {
  PrefixBuffer w = PrefixBuffer::morphic(classics::ccss(), 0);
  Valuation id = w.identity_valuation();
  for (std::size_t order = 1; order <= 10; ++order) {
    CHECK_FALSE(find_power(w, ComplexityKind::additive, 3, order, 10'000, &id).has_value());
  }
}

TEST_CASE("bounded additive complexity forces additive powers") {
  for (Morphism m : {classics::vtm(), classics::ternary_thue_morse()}) {
    PrefixBuffer w = PrefixBuffer::morphic(m, 0);
    Valuation id = w.identity_valuation();
    for (unsigned k = 2; k <= 5; ++k) {
      bool found = false;
      for (std::size_t order = 1; order <= 64 && !found; ++order) {
        auto witness = find_power(w, ComplexityKind::additive, k, order, 100'000, &id);
        if (witness) {
          verify_witness(w, *witness, id);
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("window validation") {
  PrefixBuffer fib = PrefixBuffer::morphic(classics::fibonacci(), 0);
  CHECK_THROWS_AS(find_power(fib, ComplexityKind::abelian, 3, 10, 29), WindowTooSmallError);
  CHECK_THROWS_AS(abelian_square_class_count(fib, 10, 19), WindowTooSmallError);
}

TEST_CASE("abelian square classes of the tribonacci word") {
  PrefixBuffer trib = PrefixBuffer::morphic(classics::tribonacci(), 0);
  bool saw_one = false, saw_two = false;
  for (std::size_t order = 1; order <= 60; ++order) {
    std::uint64_t classes = abelian_square_class_count(trib, order, 50'000);
    CHECK(classes >= 1);
    CHECK(classes <= 2);
    saw_one |= classes == 1;
    saw_two |= classes == 2;
  }
  CHECK(saw_one);
  CHECK(saw_two);

  PrefixBuffer constant = PrefixBuffer::periodic({}, parse_word("0"));
  CHECK(abelian_square_class_count(constant, 7, 1000) == 1);
}

TEST_CASE("fibonacci criterion against brute-force search") {
  CHECK(fibonacci_abelian_criterion(1, 1));
  CHECK(fibonacci_abelian_criterion(1, 999));
  PrefixBuffer fib = PrefixBuffer::morphic(classics::fibonacci(), 0);
  for (std::uint64_t k = 2; k <= 3; ++k) {
    for (std::uint64_t n = 1; n <= 15; ++n) {
      bool found = find_power(fib, ComplexityKind::abelian, static_cast<unsigned>(k),
                              static_cast<std::size_t>(n), 30'000)
                       .has_value();
      CHECK(fibonacci_abelian_criterion(k, n) == found);
    }
  }
  CHECK_THROWS_AS(fibonacci_abelian_criterion(0, 1), OutOfRangeError);
}

TEST_CASE("balance reports") {
  PrefixBuffer trib = PrefixBuffer::morphic(classics::tribonacci(), 0);
  BalanceReport r = balance_report(trib, 200, 100'000);
  CHECK(r.c_observed == 2);
  REQUIRE(r.witness.has_value());
  // recount the witness gap
  auto s = trib.view();
  auto count = [&](std::size_t pos, std::size_t len, Letter a) {
    std::uint64_t c = 0;
    for (std::size_t i = pos; i < pos + len; ++i) c += s[i] == a;
    return c;
  };
  std::uint64_t ca = count(r.witness->pos_a, r.witness->length, r.witness->letter);
  std::uint64_t cb = count(r.witness->pos_b, r.witness->length, r.witness->letter);
  CHECK(ca - cb == r.c_observed);

  PrefixBuffer constant = PrefixBuffer::periodic({}, parse_word("1"));
  CHECK(balance_report(constant, 50, 1000).c_observed == 0);

  // vtm is unbalanced; the observed constant grows with the scanned lengths
  PrefixBuffer v = PrefixBuffer::morphic(classics::vtm(), 0);
  BalanceReport small = balance_report(v, 100, 50'000);
  CHECK(small.c_observed >= 3);
  BalanceReport large = balance_report(v, 2000, 200'000);
  CHECK(large.c_observed > small.c_observed);
}

TEST_CASE("additive bound for balanced words") {
  CHECK(balanced_additive_bound(std::vector<Letter>{0, 1, 2}, 1) == 3);
  CHECK(balanced_additive_bound(std::vector<Letter>{0, 1}, 1) == 2);
  CHECK(balanced_additive_bound(std::vector<Letter>{0, 1, 2}, 0) == 1);

  // the Fibonacci word is 1-balanced on {0,1}: abelian = additive <= 2
  PrefixBuffer fib = PrefixBuffer::morphic(classics::fibonacci(), 0);
  Valuation fib_id = fib.identity_valuation();
  for (std::size_t n = 1; n <= 60; ++n) {
    CHECK(additive_complexity(fib, n, fib_id) <= 2);
  }
  // the tribonacci word is 2-balanced on {0,1,2}: additive <= 2*2+1 = 5
  PrefixBuffer trib = PrefixBuffer::morphic(classics::tribonacci(), 0);
  Valuation trib_id = trib.identity_valuation();
  std::uint64_t bound = balanced_additive_bound(std::vector<Letter>{0, 1, 2}, 2);
  CHECK(bound == 5);
  for (std::size_t n = 1; n <= 60; ++n) {
    CHECK(additive_complexity(trib, n, trib_id) <= bound);
  }
}

TEST_CASE("equalizing valuations") {
  CHECK(equalizing_valuation(3, 2) == std::vector<Letter>{0, 1, 3});
  CHECK(equalizing_valuation(2, 1) == std::vector<Letter>{0, 1});
  CHECK(equalizing_valuation(2, 9) == std::vector<Letter>{0, 1});
  CHECK(equalizing_valuation(4, 1) == std::vector<Letter>{0, 1, 2, 4});
  CHECK(equalizing_valuation(1, 3) == std::vector<Letter>{0});
  CHECK_THROWS_AS(equalizing_valuation(0, 1), OutOfRangeError);

  // the defining strict inequalities hold
  for (std::size_t k = 2; k <= 6; ++k) {
    for (std::uint64_t c = 1; c <= 4; ++c) {
      std::vector<Letter> a = equalizing_valuation(k, c);
      std::uint64_t sum = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (j >= 1) CHECK(sum * c < a[j]);
        sum += a[j];
      }
    }
  }
}

TEST_CASE("first additive/abelian mismatch indices") {
  PrefixBuffer v3 = PrefixBuffer::morphic(classics::vtm_variant(3), 0);
  auto m3 = first_add_ab_mismatch(v3, v3.identity_valuation(), 20);
  REQUIRE(m3.has_value());
  CHECK(*m3 == 11);

  PrefixBuffer ccss = PrefixBuffer::morphic(classics::ccss(), 0);
  auto mc = first_add_ab_mismatch(ccss, ccss.identity_valuation(), 30);
  REQUIRE(mc.has_value());
  CHECK(*mc == 23);

  // binary words: additive and abelian always coincide
  PrefixBuffer fib = PrefixBuffer::morphic(classics::fibonacci(), 0);
  CHECK_FALSE(first_add_ab_mismatch(fib, fib.identity_valuation(), 80).has_value());
}
