#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordcomp/errors.hpp"

namespace wordcomp {

// Letters are plain non-negative integers. Their face value doubles as the
// letter weight unless a Valuation overrides it.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// An ordered set of distinct letters. Ordering is by value.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Letter> letters);

  // Alphabet of all distinct letters occurring in `w`.
  static Alphabet of_word(std::span<const Letter> w);

  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter letter(std::size_t i) const { return letters_[i]; }
  bool contains(Letter a) const;
  std::size_t index_of(Letter a) const;  // throws UnknownLetterError

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<Letter> letters_;       // sorted, distinct
  std::vector<std::int32_t> dense_;   // letter -> index, -1 = absent
};

// Total weight assignment on an alphabet.
class Valuation {
 public:
  Valuation() = default;
  Valuation(const Alphabet& alphabet, std::vector<std::uint64_t> weights);

  // weight(a) = a, the letter's face value.
  static Valuation identity(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint64_t weight(Letter a) const;  // throws UnknownLetterError
  std::uint64_t weight_by_index(std::size_t i) const { return weights_[i]; }
  const std::vector<std::uint64_t>& weights() const { return weights_; }

  // Same weights multiplied by c.
  Valuation scaled(std::uint64_t c) const;

 private:
  Alphabet alphabet_;
  std::vector<std::uint64_t> weights_;  // by alphabet index
};

// Per-letter occurrence counts in alphabet order.
using ParikhVector = std::vector<std::uint64_t>;

struct WeightedParikh {
  std::vector<std::uint64_t> entries;  // weight(a_i) * |w|_{a_i}
  std::uint64_t total = 0;
};

ParikhVector parikh(std::span<const Letter> w, const Alphabet& alphabet);
WeightedParikh weighted_parikh(std::span<const Letter> w, const Valuation& v);
std::uint64_t weighted_sum(std::span<const Letter> w, const Valuation& v);

// Word text form: a bare digit string when every letter is a single decimal
// digit, otherwise a bracketed list "[l1,l2,...]".
Word parse_word(std::string_view text);
std::string format_word(std::span<const Letter> w);

}  // namespace wordcomp
