#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wordcomp/complexity.hpp"
#include "wordcomp/prefix_buffer.hpp"

namespace wordcomp {

// k consecutive blocks of the given order starting at `position`, pairwise
// equivalent under the stated kind.
struct PowerWitness {
  std::size_t position = 0;
  std::size_t order = 0;
  unsigned k = 0;
  ComplexityKind kind = ComplexityKind::abelian;
};

// Smallest starting position of an abelian/additive k-power of the given
// order within the first `window` letters. Absence in the window says
// nothing about the infinite word; callers report "not found up to window".
std::optional<PowerWitness> find_power(PrefixBuffer& src, ComplexityKind kind, unsigned k,
                                       std::size_t order, std::size_t window,
                                       const Valuation* v = nullptr);

// Number of abelian-equivalence classes (by the first half) among abelian
// squares of the given order found within the window.
std::uint64_t abelian_square_class_count(PrefixBuffer& src, std::size_t order,
                                         std::size_t window);

// Whether the Fibonacci word (fixed point of 0->01, 1->0) has an abelian
// k-power of order n: floor(k*phi*n) mod k must be 0 or k-1, evaluated with
// exact rational bounds on sqrt(5) refined until the floor is pinned.
bool fibonacci_abelian_criterion(std::uint64_t k, std::uint64_t n);

struct BalanceWitness {
  Letter letter = 0;
  std::size_t pos_a = 0;  // window position with the larger count
  std::size_t pos_b = 0;  // window position with the smaller count
  std::size_t length = 0;
};

struct BalanceReport {
  std::uint64_t c_observed = 0;
  std::size_t n_scanned = 0;
  std::optional<BalanceWitness> witness;
};

// Exhaustive per-letter count-gap scan over all window lengths up to n_max
// within the first `window` letters.
BalanceReport balance_report(PrefixBuffer& src, std::size_t n_max, std::size_t window);

// C * sum_{i=1..ceil(k/2)} (a_{k+1-i} - a_i) + 1 over a sorted alphabet: an
// upper bound for the additive complexity of any C-balanced word on it.
std::uint64_t balanced_additive_bound(std::span<const Letter> alphabet, std::uint64_t C);

// The minimal alphabet 0 = a_1 < a_2 = 1 < ... with (a_1+...+a_{j-1})*C < a_j,
// on which every C-balanced word has equal additive and abelian complexity.
std::vector<Letter> equalizing_valuation(std::size_t k, std::uint64_t C);

// Smallest n <= n_max where additive (under v) and abelian complexity differ.
std::optional<std::size_t> first_add_ab_mismatch(PrefixBuffer& src, const Valuation& v,
                                                 std::size_t n_max);

}  // namespace wordcomp
