#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordcomp/word.hpp"

namespace wordcomp {

// A morphism over an integer alphabet: every alphabet letter has exactly one
// image word (possibly empty), and every image letter is again in the
// alphabet. Determined by the letter images, extended by concatenation.
class Morphism {
 public:
  Morphism(std::vector<std::pair<Letter, Word>> rules);

  // Text form: whitespace-separated rules "L->IMAGE". IMAGE is a digit
  // string when all letters are single digits, "[l1,l2,...]" in general,
  // and empty ("L->" or "L->[]") for an erasing rule.
  static Morphism parse(std::string_view text);
  std::string to_string() const;

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& image(Letter a) const;
  const Word& image_by_index(std::size_t i) const { return images_[i]; }

  Word apply(std::span<const Letter> w) const;
  bool is_erasing() const;

  // True when m(a) starts with a and |m^n(a)| grows without bound, i.e. the
  // tail of m(a) contains a letter whose iterated images never die out.
  bool is_prolongable(Letter a) const;

  // Length-`len` prefix of the infinite fixed point m^omega(a).
  Word fixed_point_prefix(Letter a, std::size_t len) const;

  // Column j holds the Parikh vector of the image of the j-th alphabet
  // letter.
  std::vector<std::vector<std::int64_t>> adjacency_matrix() const;

  // Adjacency matrix has rank <= 1 (exact integer rank).
  bool is_parikh_collinear() const;

  // Letters whose iterated images eventually vanish.
  std::vector<bool> mortal_letters() const;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;  // by alphabet index
};

// A letterwise recoding, total on its domain alphabet. Parsed from the same
// rule syntax as morphisms, with every image of length one.
class Coding {
 public:
  Coding() = default;
  Coding(std::vector<std::pair<Letter, Letter>> rules);
  static Coding parse(std::string_view text);

  static Coding identity(const Alphabet& alphabet);

  const Alphabet& domain() const { return domain_; }
  Letter map(Letter a) const;  // throws UnknownLetterError
  Word apply(std::span<const Letter> w) const;

 private:
  Alphabet domain_;
  std::vector<Letter> targets_;  // by domain index
};

// Prefix of the coded fixed point code(m^omega(a)).
Word coded_fixed_point_prefix(const Morphism& m, const Coding& code, Letter a,
                              std::size_t len);

// Exact rank of a small integer matrix (fraction-free elimination).
std::size_t integer_rank(std::vector<std::vector<std::int64_t>> mat);

}  // namespace wordcomp
