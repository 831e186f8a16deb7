#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "wordcomp/linrep.hpp"
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

LinearRep rudin_shapiro_rep() {
  return LinearRep::parse(slurp(default_data_dir() / "rudin_shapiro.linrep"));
}

// base-2 position sequence n -> n; its reachable vectors (n, 1) never close
LinearRep position_rep() {
  LinearRep r;
  r.dim = 2;
  r.lambda = {0, 1};
  r.mu = {IntMat{{2, 0}, {0, 1}}, IntMat{{2, 0}, {1, 1}}};
  r.gamma = {1, 0};
  return r;
}

LinearRep constant_zero_rep() {
  LinearRep r;
  r.dim = 1;
  r.lambda = {1};
  r.mu = {IntMat{{1}}, IntMat{{1}}};
  r.gamma = {0};
  return r;
}

Digits bits_of(std::uint64_t value, std::size_t len) {
  Digits d(len);
  for (std::size_t i = 0; i < len; ++i) d[i] = (value >> (len - 1 - i)) & 1;
  return d;
}

}  // namespace

TEST_CASE("evaluation of the shipped representation") {
  LinearRep r = rudin_shapiro_rep();
  CHECK(evaluate(r, parse_digits("11")) == 1);
  CHECK(evaluate(r, Digits{}) == 0);  // lambda . gamma
  CHECK(evaluate(r, parse_digits("110")) == 1);
  CHECK_THROWS_AS(evaluate(r, parse_digits("2")), DigitOutOfRangeError);
}

TEST_CASE("minimization preserves the computed function") {
  LinearRep r = rudin_shapiro_rep();
  LinearRep m = minimize(r);
  CHECK(m.dim <= 4);
  CHECK(m.dim == rank(r));
  for (std::size_t len = 0; len <= 10; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      Digits d = bits_of(v, len);
      REQUIRE(evaluate(m, d) == evaluate(r, d));
    }
  }
  // long random strings
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10'000; ++trial) {
    std::size_t len = 13 + rng() % 28;
    Digits d(len);
    for (unsigned& x : d) x = rng() & 1;
    REQUIRE(evaluate(m, d) == evaluate(r, d));
  }
  CHECK(minimize(m).dim == m.dim);
}

TEST_CASE("minimization collapses the zero function") {
  LinearRep z = rudin_shapiro_rep();
  z.gamma = {0, 0, 0, 0};
  LinearRep m = minimize(z);
  CHECK(m.dim == 0);
  CHECK(rank(z) == 0);
  CHECK(evaluate(m, parse_digits("1011")) == 0);
}

TEST_CASE("rank is bounded by the dimension") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t dim = 1 + rng() % 3;
    LinearRep r;
    r.dim = dim;
    auto rand_entry = [&]() { return Int(static_cast<int>(rng() % 5) - 2); };
    r.lambda.resize(dim);
    r.gamma.resize(dim);
    for (auto& x : r.lambda) x = rand_entry();
    for (auto& x : r.gamma) x = rand_entry();
    for (int d = 0; d < 2; ++d) {
      IntMat m(dim, IntVec(dim));
      for (auto& row : m) {
        for (auto& x : row) x = rand_entry();
      }
      r.mu.push_back(std::move(m));
    }
    LinearRep min = minimize(r);
    CHECK(min.dim <= r.dim);
    for (std::size_t len = 0; len <= 7; ++len) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
        Digits d = bits_of(v, len);
        REQUIRE(evaluate(min, d) == evaluate(r, d));
      }
    }
    CHECK(minimize(min).dim == min.dim);
  }
}

TEST_CASE("semigroup trick closes the shipped representation") {
  LinearRep r = rudin_shapiro_rep();
  SemigroupResult direct = semigroup_trick(r, 100);
  REQUIRE(direct.dfao.has_value());
  CHECK(direct.dfao->size() == 4);
  CHECK(direct.dfao->outputs == std::vector<long long>{0, 0, 1, 1});

  SemigroupResult via_min = semigroup_trick(minimize(r), 100);
  REQUIRE(via_min.dfao.has_value());
  CHECK(via_min.dfao->serialize() == direct.dfao->serialize());
  CHECK(via_min.dfao->serialize() == slurp(default_data_dir() / "rudin_shapiro.dfao"));

  // halted automaton computes the same sequence as the representation
  PositionalSystem b2 = PositionalSystem::base(2);
  for (std::uint64_t n = 0; n <= 10'000; ++n) {
    Digits d = b2.rep(n);
    REQUIRE(sequence_term(*direct.dfao, b2, n) == evaluate(r, d).convert_to<long long>());
  }
}

TEST_CASE("semigroup trick on the constant zero sequence") {
  SemigroupResult result = semigroup_trick(constant_zero_rep(), 10);
  REQUIRE(result.dfao.has_value());
  CHECK(result.dfao->size() == 1);
  CHECK(result.dfao->outputs == std::vector<long long>{0});
}

TEST_CASE("semigroup trick reports divergence on unbounded sequences") {
  LinearRep pos = position_rep();
  PositionalSystem b2 = PositionalSystem::base(2);
  for (std::uint64_t n = 0; n <= 100; ++n) {
    REQUIRE(evaluate(pos, b2.rep(n)) == Int(n));
  }
  SemigroupResult result = semigroup_trick(pos, 100);
  CHECK_FALSE(result.dfao.has_value());
  CHECK(result.states_generated > 100);
  // still unbounded after minimization, with a larger budget
  CHECK_FALSE(semigroup_trick(minimize(pos), 2000).dfao.has_value());
}

TEST_CASE("representation text round trips") {
  LinearRep r = rudin_shapiro_rep();
  LinearRep again = LinearRep::parse(r.serialize());
  CHECK(again.serialize() == r.serialize());
  CHECK(again.dim == 4);
  CHECK(again.mu[1][2][2] == -1);
  CHECK_THROWS_AS(LinearRep::parse("lambda: 1\n"), ParseError);
  CHECK_THROWS_AS(LinearRep::parse("dim: 2\nlambda: 1 0\ngamma: 0 1\n"), ParseError);
  CHECK_THROWS_AS(LinearRep::parse("dim: 1\nlambda: 1\nmu 0:\n1 2\ngamma: 1\n"), ParseError);
}
