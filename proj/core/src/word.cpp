#include "wordcomp/word.hpp"

#include <algorithm>
#include <charconv>

namespace wordcomp {

namespace {

constexpr std::size_t kDenseIndexLimit = 1 << 16;

Letter parse_letter(std::string_view tok) {
  Letter value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("bad letter '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end());
  auto dup = std::adjacent_find(letters_.begin(), letters_.end());
  if (dup != letters_.end()) {
    throw ParseError("duplicate letter " + std::to_string(*dup) + " in alphabet");
  }
  if (!letters_.empty() && letters_.back() < kDenseIndexLimit) {
    dense_.assign(letters_.back() + 1, -1);
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      dense_[letters_[i]] = static_cast<std::int32_t>(i);
    }
  }
}

Alphabet Alphabet::of_word(std::span<const Letter> w) {
  std::vector<Letter> ls(w.begin(), w.end());
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  return Alphabet(std::move(ls));
}

bool Alphabet::contains(Letter a) const {
  if (!dense_.empty()) {
    return a < dense_.size() && dense_[a] >= 0;
  }
  return std::binary_search(letters_.begin(), letters_.end(), a);
}

std::size_t Alphabet::index_of(Letter a) const {
  if (!dense_.empty()) {
    if (a < dense_.size() && dense_[a] >= 0) return static_cast<std::size_t>(dense_[a]);
    throw UnknownLetterError(a);
  }
  auto it = std::lower_bound(letters_.begin(), letters_.end(), a);
  if (it == letters_.end() || *it != a) throw UnknownLetterError(a);
  return static_cast<std::size_t>(it - letters_.begin());
}

Valuation::Valuation(const Alphabet& alphabet, std::vector<std::uint64_t> weights)
    : alphabet_(alphabet), weights_(std::move(weights)) {
  if (weights_.size() != alphabet_.size()) {
    throw ParseError("valuation must assign a weight to every alphabet letter");
  }
}

Valuation Valuation::identity(const Alphabet& alphabet) {
  std::vector<std::uint64_t> w(alphabet.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) w[i] = alphabet.letter(i);
  return Valuation(alphabet, std::move(w));
}

std::uint64_t Valuation::weight(Letter a) const {
  return weights_[alphabet_.index_of(a)];
}

Valuation Valuation::scaled(std::uint64_t c) const {
  std::vector<std::uint64_t> w(weights_);
  for (auto& x : w) x *= c;
  return Valuation(alphabet_, std::move(w));
}

ParikhVector parikh(std::span<const Letter> w, const Alphabet& alphabet) {
  ParikhVector counts(alphabet.size(), 0);
  for (Letter a : w) ++counts[alphabet.index_of(a)];
  return counts;
}

WeightedParikh weighted_parikh(std::span<const Letter> w, const Valuation& v) {
  WeightedParikh out;
  ParikhVector counts = parikh(w, v.alphabet());
  out.entries.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out.entries[i] = counts[i] * v.weight_by_index(i);
    out.total += out.entries[i];
  }
  return out;
}

std::uint64_t weighted_sum(std::span<const Letter> w, const Valuation& v) {
  std::uint64_t total = 0;
  for (Letter a : w) total += v.weight(a);
  return total;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty()) return w;
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated '[' in word");
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      std::size_t comma = body.find(',');
      std::string_view tok = body.substr(0, comma);
      if (tok.empty()) throw ParseError("empty letter in word list");
      w.push_back(parse_letter(tok));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return w;
  }
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError(std::string("bad digit '") + c + "' in word");
    w.push_back(static_cast<Letter>(c - '0'));
  }
  return w;
}

std::string format_word(std::span<const Letter> w) {
  bool digits = std::all_of(w.begin(), w.end(), [](Letter a) { return a <= 9; });
  std::string out;
  if (digits) {
    out.reserve(w.size());
    for (Letter a : w) out.push_back(static_cast<char>('0' + a));
    return out;
  }
  out.push_back('[');
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  out.push_back(']');
  return out;
}

}  // namespace wordcomp
