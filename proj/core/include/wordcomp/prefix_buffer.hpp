#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wordcomp/morphism.hpp"
#include "wordcomp/word.hpp"

namespace wordcomp {

// Materialized prefix of an infinite (or finite) word. Positions once
// materialized are immutable; extension appends only. Readers may scan the
// current view while a single writer extends, because storage capacity is
// reserved up front (no reallocation up to the cap).
class PrefixBuffer {
 public:
  struct MorphicSource {
    Morphism morphism;
    Letter seed;
    std::optional<Coding> coding;
  };
  struct LiteralSource {
    Word word;
  };
  // preperiod . period^omega
  struct PeriodicSource {
    Word preperiod;
    Word period;
  };
  using Source = std::variant<MorphicSource, LiteralSource, PeriodicSource>;

  // Cap from WORDCOMP_PREFIX_CAP when set, otherwise 10^7 letters.
  static std::size_t default_cap();

  explicit PrefixBuffer(Source source, std::size_t cap = default_cap());

  static PrefixBuffer morphic(Morphism m, Letter seed,
                              std::optional<Coding> coding = std::nullopt,
                              std::size_t cap = default_cap());
  static PrefixBuffer literal(Word w, std::size_t cap = default_cap());
  static PrefixBuffer periodic(Word preperiod, Word period,
                               std::size_t cap = default_cap());

  // Extends to min(len, cap, end of a finite source) and returns the
  // materialized view. Callers that need exactly `len` letters use require().
  std::span<const Letter> ensure(std::size_t len);

  // Like ensure() but throws CapExceededError when `len` is unreachable.
  std::span<const Letter> require(std::size_t len);

  std::span<const Letter> view() const { return {letters_.data(), letters_.size()}; }
  std::size_t size() const { return letters_.size(); }
  std::size_t cap() const { return cap_; }

  // True when the source is finite and fully materialized: the view is the
  // entire word, not just a prefix.
  bool exhausted() const { return exhausted_; }

  const Alphabet& alphabet() const { return alphabet_; }
  Valuation identity_valuation() const { return Valuation::identity(alphabet_); }

 private:
  void extend_to(std::size_t len);

  Source source_;
  std::size_t cap_;
  Alphabet alphabet_;
  Word letters_;        // coded letters, what callers see
  Word uncoded_;        // morphic source only: fixed point before coding
  std::size_t expanded_ = 0;  // morphic: letters of the fixed point already imaged
  bool exhausted_ = false;
};

}  // namespace wordcomp
