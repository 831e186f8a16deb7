#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordcomp/numeration.hpp"

namespace wordcomp {

// Deterministic finite automaton with output, read over msd-first digit
// strings. Text format:
//
//   # optional comments
//   digits: 0..2
//   initial: q0
//   q0 1            state declarations: "name output"
//   q0 --0--> q0    transitions
//
// Serialization is canonical (declarations in state order, transitions in
// (state, digit) order) and round-trips byte for byte.
struct Dfao {
  unsigned digit_bound = 1;  // digit alphabet 0..digit_bound
  std::vector<std::string> names;
  std::vector<long long> outputs;
  std::vector<std::vector<int>> next;  // [state][digit]
  int initial = 0;

  std::size_t size() const { return names.size(); }

  static Dfao parse(std::string_view text);
  std::string serialize() const;

  long long run(std::span<const unsigned> digits) const;
};

long long sequence_term(const Dfao& d, const PositionalSystem& sys, std::uint64_t n);

// Smallest n in [0, n_max] where the automaton and the oracle disagree.
std::optional<std::uint64_t> compare_with_oracle(
    const Dfao& d, const PositionalSystem& sys,
    const std::function<long long(std::uint64_t)>& oracle, std::uint64_t n_max);

// Outputs unchanged under prepended zeros, i.e. the initial state loops on 0.
bool leading_zero_invariant(const Dfao& d);

}  // namespace wordcomp
