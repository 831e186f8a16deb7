#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "wordcomp/classics.hpp"
#include "wordcomp/complexity.hpp"
#include "wordcomp/dfao.hpp"
#include "wordcomp/prefix_buffer.hpp"
#include "wordcomp/verify.hpp"

using namespace wordcomp;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Dfao fixture(const char* name) { return Dfao::parse(slurp(default_data_dir() / name)); }

}  // namespace

TEST_CASE("running fixture automata on digit strings") {
  Dfao tm = fixture("ternary_tm_additive.dfao");
  CHECK(tm.run(parse_digits("2")) == 5);
  CHECK(tm.run(Digits{}) == 1);  // empty input reports the initial state's output
  Dfao rs = fixture("rudin_shapiro.dfao");
  CHECK(rs.run(parse_digits("11")) == 1);
  CHECK_THROWS_AS(rs.run(parse_digits("2")), DigitOutOfRangeError);
}

TEST_CASE("sequence terms through a numeration system") {
  Dfao pc = fixture("pc_fixed_point_additive.dfao");
  PositionalSystem b3 = PositionalSystem::base(3);
  CHECK(sequence_term(pc, b3, 2) == 4);
  CHECK(sequence_term(pc, b3, 0) == 1);
  Dfao rs = fixture("rudin_shapiro.dfao");
  CHECK(sequence_term(rs, PositionalSystem::base(2), 3) == 1);
}

TEST_CASE("fixture automata agree with brute-force complexity") {
  PositionalSystem b3 = PositionalSystem::base(3);

  Dfao tm_dfao = fixture("ternary_tm_additive.dfao");
  PrefixBuffer tm = PrefixBuffer::morphic(classics::ternary_thue_morse(), 0);
  Valuation tm_id = tm.identity_valuation();
  auto tm_oracle = [&](std::uint64_t n) {
    return static_cast<long long>(additive_complexity(tm, n, tm_id));
  };
  CHECK_FALSE(compare_with_oracle(tm_dfao, b3, tm_oracle, 200).has_value());

  Dfao pc_dfao = fixture("pc_fixed_point_additive.dfao");
  PrefixBuffer pc = PrefixBuffer::morphic(classics::parikh_collinear_example(), 0);
  Valuation pc_id = pc.identity_valuation();
  auto pc_oracle = [&](std::uint64_t n) {
    return static_cast<long long>(additive_complexity(pc, n, pc_id));
  };
  CHECK_FALSE(compare_with_oracle(pc_dfao, b3, pc_oracle, 200).has_value());

  // corrupting one output is caught at the first index reaching that state
  Dfao corrupted = tm_dfao;
  corrupted.outputs[2] = 9;
  auto mismatch = compare_with_oracle(corrupted, b3, tm_oracle, 200);
  REQUIRE(mismatch.has_value());
  CHECK(*mismatch == 2);
}

TEST_CASE("leading zero invariance") {
  CHECK(leading_zero_invariant(fixture("pc_fixed_point_additive.dfao")));
  CHECK(leading_zero_invariant(fixture("ternary_tm_additive.dfao")));
  CHECK(leading_zero_invariant(fixture("rudin_shapiro.dfao")));

  Dfao twisted = fixture("ternary_tm_additive.dfao");
  twisted.next[twisted.initial][0] = 1;
  CHECK_FALSE(leading_zero_invariant(twisted));
}

TEST_CASE("zero padding does not change outputs of padding-invariant automata") {
  std::mt19937 rng(23);
  for (const char* name :
       {"pc_fixed_point_additive.dfao", "ternary_tm_additive.dfao", "rudin_shapiro.dfao"}) {
    Dfao d = fixture(name);
    for (int trial = 0; trial < 40; ++trial) {
      Digits digits(rng() % 10);
      for (unsigned& x : digits) x = rng() % (d.digit_bound + 1);
      long long expected = d.run(digits);
      for (unsigned pad = 1; pad <= 8; ++pad) {
        Digits padded(pad, 0);
        padded.insert(padded.end(), digits.begin(), digits.end());
        CHECK(d.run(padded) == expected);
      }
    }
  }
}

TEST_CASE("automaton text round trips byte for byte") {
  std::string canonical = slurp(default_data_dir() / "rudin_shapiro.dfao");
  Dfao parsed = Dfao::parse(canonical);
  CHECK(parsed.serialize() == canonical);

  // comment-bearing fixtures reserialize stably
  Dfao pc = fixture("pc_fixed_point_additive.dfao");
  CHECK(Dfao::parse(pc.serialize()).serialize() == pc.serialize());
}

TEST_CASE("parser rejects malformed automata") {
  CHECK_THROWS_AS(Dfao::parse("initial: q0\nq0 1\nq0 --0--> q0\n"), ParseError);
  CHECK_THROWS_AS(Dfao::parse("digits: 0..1\nq0 1\nq0 --0--> q0\nq0 --1--> q0\n"),
                  ParseError);
  // missing transition
  CHECK_THROWS_AS(Dfao::parse("digits: 0..1\ninitial: q0\nq0 1\nq0 --0--> q0\n"), ParseError);
  // undeclared target state
  CHECK_THROWS_AS(
      Dfao::parse("digits: 0..0\ninitial: q0\nq0 1\nq0 --0--> q9\n"), ParseError);
}
