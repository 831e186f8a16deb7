#include <doctest.h>

#include <random>

#include "wordcomp/classics.hpp"
#include "wordcomp/morphism.hpp"
#include "wordcomp/prefix_buffer.hpp"
#include "wordcomp/word.hpp"

using namespace wordcomp;

namespace {

Word random_word(std::mt19937& rng, std::size_t max_len, Letter max_letter) {
  Word w(rng() % (max_len + 1));
  for (Letter& a : w) a = rng() % (max_letter + 1);
  return w;
}

}  // namespace

TEST_CASE("apply concatenates rule images in order") {
  Morphism tm = classics::ternary_thue_morse();
  CHECK(tm.apply(parse_word("0")) == parse_word("012"));
  CHECK(tm.apply(Word{}) == Word{});
  Morphism v = classics::vtm();
  CHECK(v.apply(parse_word("012")) == parse_word("012021"));
}

TEST_CASE("apply rejects letters without a rule") {
  Morphism tm = classics::ternary_thue_morse();
  CHECK_THROWS_AS(tm.apply(parse_word("03")), UnknownLetterError);
}

TEST_CASE("morphism construction rejects images outside the alphabet") {
  CHECK_THROWS_AS(Morphism({{0, parse_word("01")}}), UnknownLetterError);
}

TEST_CASE("morphism law on random words") {
  std::mt19937 rng(7);
  Morphism m = classics::vtm();
  for (int trial = 0; trial < 50; ++trial) {
    Word u = random_word(rng, 12, 2), v = random_word(rng, 12, 2);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    Word lhs = m.apply(uv);
    Word rhs = m.apply(u);
    Word rv = m.apply(v);
    rhs.insert(rhs.end(), rv.begin(), rv.end());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("prolongability detects erasing and growing letters") {
  CHECK(classics::parikh_collinear_example().is_prolongable(0));
  CHECK_FALSE(Morphism::parse("0->1 1->0").is_prolongable(0));
  CHECK(classics::fibonacci().is_prolongable(0));
  // m(a) = a alone is a finite fixed point
  CHECK_FALSE(Morphism::parse("0->0 1->01").is_prolongable(0));
  // mortal tail: fixed point is the finite word 01
  CHECK_FALSE(Morphism::parse("0->01 1->").is_prolongable(0));
  // non-growing but immortal tail still gives an infinite fixed point
  CHECK(Morphism::parse("0->01 1->1").is_prolongable(0));
}

TEST_CASE("fixed point prefixes") {
  CHECK(format_word(classics::ternary_thue_morse().fixed_point_prefix(0, 9)) == "012120201");
  CHECK(format_word(classics::vtm().fixed_point_prefix(0, 6)) == "012021");
  CHECK(classics::vtm().fixed_point_prefix(0, 0) == Word{});
  CHECK_THROWS_AS(Morphism::parse("0->1 1->0").fixed_point_prefix(0, 4), NotProlongableError);
  CHECK_THROWS_AS(Morphism::parse("0->01 1->").fixed_point_prefix(0, 5), NonExpandingError);
}

TEST_CASE("fixed point prefixes are monotone under extension") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint32_t sigma = 2 + rng() % 3;
    std::vector<std::pair<Letter, Word>> rules;
    for (Letter a = 0; a < sigma; ++a) {
      Word img;
      if (a == 0) img.push_back(0);
      std::size_t len = (a == 0 ? 2 : 1) + rng() % 3;
      while (img.size() < len) img.push_back(rng() % sigma);
      rules.emplace_back(a, std::move(img));
    }
    Morphism m(std::move(rules));
    if (!m.is_prolongable(0)) continue;
    Word longer = m.fixed_point_prefix(0, 400);
    Word shorter = m.fixed_point_prefix(0, 123);
    CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
  }
}

TEST_CASE("uniform morphisms materialize exact powers") {
  Morphism tm = classics::ternary_thue_morse();
  Word power{0};
  for (int j = 0; j < 5; ++j) power = tm.apply(power);
  CHECK(tm.fixed_point_prefix(0, power.size()) == power);
}

TEST_CASE("coded fixed point matches the erasing fixed point") {
  // 3-uniform presentation of the fixed point of 0->012 1->112002 2->[]
  Morphism h = Morphism::parse("0->012 1->134 2->506 3->506 4->134 5->506 6->012");
  Coding tau = Coding::parse("0->0 1->1 2->2 3->1 4->2 5->0 6->2");
  CHECK(format_word(coded_fixed_point_prefix(h, tau, 0, 4)) == "0121");
  Word coded = coded_fixed_point_prefix(h, tau, 0, 729);
  Word direct = classics::parikh_collinear_example().fixed_point_prefix(0, 729);
  CHECK(coded == direct);
  CHECK(format_word(Word(direct.begin(), direct.begin() + 15)) == "012112002112002");

  Coding ident = Coding::identity(h.alphabet());
  CHECK(coded_fixed_point_prefix(h, ident, 0, 100) == h.fixed_point_prefix(0, 100));
}

TEST_CASE("parikh vectors count letters in alphabet order") {
  // "sleeveless" over e < l < s < v encoded as 0 < 1 < 2 < 3
  Word sleeveless = {2, 1, 0, 0, 3, 0, 1, 0, 2, 2};
  Alphabet sigma({0, 1, 2, 3});
  CHECK(parikh(sleeveless, sigma) == ParikhVector{4, 2, 3, 1});
  CHECK(parikh(Word{}, sigma) == ParikhVector{0, 0, 0, 0});
  CHECK(parikh(parse_word("012021"), Alphabet({0, 1, 2})) == ParikhVector{2, 2, 2});
  CHECK_THROWS_AS(parikh(parse_word("7"), sigma), UnknownLetterError);
}

TEST_CASE("parikh is additive under concatenation") {
  std::mt19937 rng(13);
  Alphabet sigma({0, 1, 2});
  Valuation id = Valuation::identity(sigma);
  for (int trial = 0; trial < 50; ++trial) {
    Word u = random_word(rng, 16, 2), v = random_word(rng, 16, 2);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    ParikhVector pu = parikh(u, sigma), pv = parikh(v, sigma), puv = parikh(uv, sigma);
    for (std::size_t i = 0; i < pu.size(); ++i) CHECK(puv[i] == pu[i] + pv[i]);
    CHECK(weighted_sum(uv, id) == weighted_sum(u, id) + weighted_sum(v, id));
    // identity valuation = dot product of letter values with counts
    std::uint64_t dot = 0;
    for (std::size_t i = 0; i < pu.size(); ++i) dot += sigma.letter(i) * puv[i];
    CHECK(weighted_sum(uv, id) == dot);
  }
}

TEST_CASE("weighted sums under the identity valuation") {
  Alphabet sigma({0, 1, 2});
  Valuation id = Valuation::identity(sigma);
  CHECK(weighted_sum(parse_word("020"), id) == 2);
  CHECK(weighted_sum(parse_word("101"), id) == 2);  // 020 and 101 are additively equivalent
  CHECK(weighted_sum(Word{}, id) == 0);
  CHECK(weighted_sum(parse_word("012"), id) == 3);
}

TEST_CASE("weighted parikh totals") {
  Alphabet sigma({0, 1, 3});
  Valuation id = Valuation::identity(sigma);
  WeightedParikh wp = weighted_parikh(parse_word("0133"), id);
  CHECK(wp.entries == std::vector<std::uint64_t>{0, 1, 6});
  CHECK(wp.total == 7);
}

TEST_CASE("adjacency matrices and Parikh collinearity") {
  auto cols = classics::parikh_collinear_example().adjacency_matrix();
  CHECK(cols == std::vector<std::vector<std::int64_t>>{{1, 2, 0}, {1, 2, 0}, {1, 2, 0}});
  CHECK(classics::parikh_collinear_example().is_parikh_collinear());

  Morphism ident = Morphism::parse("0->0 1->1");
  CHECK(ident.adjacency_matrix() ==
        std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});
  CHECK_FALSE(ident.is_parikh_collinear());

  auto trib = classics::tribonacci().adjacency_matrix();
  CHECK(trib == std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}});
  CHECK_FALSE(classics::tribonacci().is_parikh_collinear());

  CHECK(Morphism::parse("0-> 1->").is_parikh_collinear());  // zero matrix, rank 0
  CHECK(classics::ternary_thue_morse().is_parikh_collinear());
}

TEST_CASE("morphism text round trips") {
  for (const char* text : {"0->012 1->120 2->201", "0->012 1->112002 2->[]"}) {
    Morphism m = Morphism::parse(text);
    CHECK(Morphism::parse(m.to_string()).to_string() == m.to_string());
  }
  Morphism wide = Morphism::parse("0->[0,10] 10->[0]");
  CHECK(wide.image(0) == Word{0, 10});
  CHECK(Morphism::parse(wide.to_string()).to_string() == wide.to_string());
  CHECK(Morphism::parse("2-> 0->0012 1->1").image(2).empty());
  CHECK_THROWS_AS(Morphism::parse("0=01"), ParseError);
  CHECK_THROWS_AS(Morphism::parse("0->01 0->0"), ParseError);
}

TEST_CASE("prefix buffer sources agree with direct generation") {
  PrefixBuffer morphic = PrefixBuffer::morphic(classics::tribonacci(), 0);
  auto v = morphic.ensure(12);
  CHECK(format_word(v.first(12)) == "010201001020");

  PrefixBuffer lit = PrefixBuffer::literal(parse_word("0110"));
  CHECK(lit.ensure(10).size() == 4);
  CHECK(lit.exhausted());
  CHECK_THROWS_AS(lit.require(10), Error);

  PrefixBuffer per = PrefixBuffer::periodic(parse_word("01"), parse_word("20"));
  CHECK(format_word(per.ensure(8).first(8)) == "01202020");
  CHECK_FALSE(per.exhausted());
}

TEST_CASE("prefix buffer honors its cap") {
  PrefixBuffer buf = PrefixBuffer::morphic(classics::tribonacci(), 0, std::nullopt, 100);
  CHECK(buf.ensure(1000).size() == 100);
  CHECK_THROWS_AS(buf.require(1000), CapExceededError);
}
