#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wordcomp/errors.hpp"

namespace wordcomp {

using Int = boost::multiprecision::cpp_int;

// Digits of a representation, most significant first.
using Digits = std::vector<unsigned>;

// A positional numeration system: an increasing scale U with U(0) = 1 and
// greedy digit expansions. Built-in scales are base-k and linear recurrences
// (Fibonacci and Tribonacci included); explicit tables are supported for
// experiments.
class PositionalSystem {
 public:
  static PositionalSystem base(unsigned k);
  static PositionalSystem fibonacci();   // U: 1, 2, 3, 5, 8, ...
  static PositionalSystem tribonacci();  // U: 1, 2, 4, 7, 13, ...
  static PositionalSystem recurrence(std::vector<Int> initial, std::vector<Int> coeffs);
  static PositionalSystem from_table(std::vector<Int> table);

  // "base:K" | "fib" | "trib" | "rec:a0,a1,...;c1,c2,..."
  static PositionalSystem parse(std::string_view text);
  std::string to_string() const;

  // First `count` scale values.
  std::vector<Int> u_values(std::size_t count) const;
  const Int& u(std::size_t i) const;

  // Largest digit usable in greedy representations seen so far:
  // max over materialized i of ceil(U(i+1)/U(i)) - 1.
  unsigned digit_bound() const;

  Digits rep(const Int& n) const;  // greedy; rep(0) is empty
  Digits rep(std::uint64_t n) const { return rep(Int(n)); }

  Int val(std::span<const unsigned> digits) const;  // leading zeros allowed
  bool is_greedy(std::span<const unsigned> digits) const;

 private:
  PositionalSystem() = default;
  void extend_while(const Int& bound) const;  // grow table while back <= bound
  void extend_count(std::size_t count) const;

  enum class Kind { base, recurrence, table };
  Kind kind_ = Kind::base;
  unsigned base_k_ = 2;
  std::vector<Int> initial_;
  std::vector<Int> coeffs_;
  mutable std::vector<Int> u_;
  mutable unsigned digit_bound_ = 0;
};

// Digit-string helpers for CLI and file formats. Single characters when the
// digit bound is below ten, otherwise comma-separated.
Digits parse_digits(std::string_view text);
std::string format_digits(std::span<const unsigned> digits);

}  // namespace wordcomp
