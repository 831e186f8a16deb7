#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordcomp/dfao.hpp"
#include "wordcomp/numeration.hpp"

namespace wordcomp {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major

// Linear representation of a regular sequence: a row vector, one square
// integer matrix per digit, and a column vector. The term at index n is
// lambda * mu(d_1) * ... * mu(d_t) * gamma over the digits of n, msd first.
//
// Text format ('#' comments allowed):
//   dim: 4
//   lambda: 1 0 0 0
//   mu 0:
//   1 0 0 0
//   ...
//   mu 1:
//   ...
//   gamma: 0 0 0 1
struct LinearRep {
  std::size_t dim = 0;
  IntVec lambda;
  std::vector<IntMat> mu;  // indexed by digit 0..mu.size()-1
  IntVec gamma;

  unsigned digit_bound() const { return static_cast<unsigned>(mu.size()) - 1; }

  static LinearRep parse(std::string_view text);
  std::string serialize() const;
  void validate() const;
};

Int evaluate(const LinearRep& r, std::span<const unsigned> digits);

// Minimal-dimension representation computing the same function on every
// digit string. Reachability and observability modules are reduced over the
// integers (Hermite form bases), so the result is again integral.
LinearRep minimize(const LinearRep& r);

// Dimension of minimize(r).
std::size_t rank(const LinearRep& r);

struct SemigroupResult {
  // Empty when the state budget was exhausted before closure, which is the
  // expected signal for a sequence with infinite range.
  std::optional<Dfao> dfao;
  std::size_t states_generated = 0;
};

// Breadth-first closure of the reachable row vectors lambda*mu(x). When it
// halts, states are the distinct vectors, transitions follow the mu action,
// and each state outputs vector*gamma.
SemigroupResult semigroup_trick(const LinearRep& r, std::size_t max_states);

}  // namespace wordcomp
