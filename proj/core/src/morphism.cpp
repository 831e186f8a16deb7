#include "wordcomp/morphism.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace wordcomp {

namespace {

std::vector<std::pair<std::string_view, std::string_view>> split_rules(
    std::string_view text) {
  std::vector<std::pair<std::string_view, std::string_view>> rules;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    std::size_t arrow = tok.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("rule '" + std::string(tok) + "' lacks '->'");
    }
    rules.emplace_back(tok.substr(0, arrow), tok.substr(arrow + 2));
    pos = end;
  }
  if (rules.empty()) throw ParseError("no rules in morphism text");
  return rules;
}

Letter parse_letter_token(std::string_view tok) {
  Letter value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("bad letter '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Morphism::Morphism(std::vector<std::pair<Letter, Word>> rules) {
  std::vector<Letter> letters;
  letters.reserve(rules.size());
  for (const auto& [a, _] : rules) letters.push_back(a);
  alphabet_ = Alphabet(std::move(letters));
  images_.resize(alphabet_.size());
  for (auto& [a, img] : rules) images_[alphabet_.index_of(a)] = std::move(img);
  for (const Word& img : images_) {
    for (Letter b : img) {
      if (!alphabet_.contains(b)) throw UnknownLetterError(b);
    }
  }
}

Morphism Morphism::parse(std::string_view text) {
  std::vector<std::pair<Letter, Word>> rules;
  for (auto [lhs, rhs] : split_rules(text)) {
    rules.emplace_back(parse_letter_token(lhs), parse_word(rhs));
  }
  return Morphism(std::move(rules));
}

std::string Morphism::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(alphabet_.letter(i));
    out += "->";
    const Word& img = images_[i];
    if (img.empty()) {
      out += "[]";
    } else {
      out += format_word(img);
    }
  }
  return out;
}

const Word& Morphism::image(Letter a) const { return images_[alphabet_.index_of(a)]; }

Word Morphism::apply(std::span<const Letter> w) const {
  Word out;
  std::size_t total = 0;
  for (Letter a : w) total += image(a).size();
  out.reserve(total);
  for (Letter a : w) {
    const Word& img = image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

bool Morphism::is_erasing() const {
  return std::any_of(images_.begin(), images_.end(),
                     [](const Word& img) { return img.empty(); });
}

std::vector<bool> Morphism::mortal_letters() const {
  // A letter is mortal when its iterated images hit the empty word; the set
  // is the closure of the erasing letters under "all image letters mortal".
  std::size_t k = alphabet_.size();
  std::vector<bool> mortal(k, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (mortal[i]) continue;
      bool all = true;
      for (Letter b : images_[i]) {
        if (!mortal[alphabet_.index_of(b)]) {
          all = false;
          break;
        }
      }
      if (all) {
        mortal[i] = true;
        changed = true;
      }
    }
  }
  return mortal;
}

bool Morphism::is_prolongable(Letter a) const {
  const Word& img = image(a);
  if (img.empty() || img[0] != a || img.size() < 2) return false;
  std::vector<bool> mortal = mortal_letters();
  for (std::size_t i = 1; i < img.size(); ++i) {
    if (!mortal[alphabet_.index_of(img[i])]) return true;
  }
  return false;
}

Word Morphism::fixed_point_prefix(Letter a, std::size_t len) const {
  if (!alphabet_.contains(a) || image(a).empty() || image(a)[0] != a) {
    throw NotProlongableError("morphism image of " + std::to_string(a) +
                              " does not start with " + std::to_string(a));
  }
  Word buf = image(a);
  if (len == 0) return {};
  if (buf.size() < 2 && buf.size() < len) {
    throw NonExpandingError("fixed point of seed " + std::to_string(a) + " is finite");
  }
  // buf is m(x[0..expanded)) and stays a prefix of the fixed point.
  std::size_t expanded = 1;
  while (buf.size() < len) {
    if (expanded >= buf.size()) {
      throw NonExpandingError("fixed point of seed " + std::to_string(a) + " is finite");
    }
    const Word& img = image(buf[expanded]);
    buf.insert(buf.end(), img.begin(), img.end());
    ++expanded;
  }
  buf.resize(len);
  return buf;
}

std::vector<std::vector<std::int64_t>> Morphism::adjacency_matrix() const {
  std::size_t k = alphabet_.size();
  std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    ParikhVector counts = parikh(images_[j], alphabet_);
    for (std::size_t i = 0; i < k; ++i) m[i][j] = static_cast<std::int64_t>(counts[i]);
  }
  return m;
}

bool Morphism::is_parikh_collinear() const { return integer_rank(adjacency_matrix()) <= 1; }

std::size_t integer_rank(std::vector<std::vector<std::int64_t>> mat) {
  using boost::multiprecision::cpp_int;
  if (mat.empty()) return 0;
  std::size_t rows = mat.size(), cols = mat[0].size();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = mat[i][j];

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      cpp_int f1 = a[rank][col], f2 = a[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        a[i][j] = a[i][j] * f1 - a[rank][j] * f2;
      }
    }
    ++rank;
  }
  return rank;
}

Coding::Coding(std::vector<std::pair<Letter, Letter>> rules) {
  std::vector<Letter> letters;
  letters.reserve(rules.size());
  for (const auto& [a, _] : rules) letters.push_back(a);
  domain_ = Alphabet(std::move(letters));
  targets_.resize(domain_.size());
  for (const auto& [a, b] : rules) targets_[domain_.index_of(a)] = b;
}

Coding Coding::parse(std::string_view text) {
  std::vector<std::pair<Letter, Letter>> rules;
  for (auto [lhs, rhs] : split_rules(text)) {
    Word img = parse_word(rhs);
    if (img.size() != 1) {
      throw ParseError("coding image of '" + std::string(lhs) + "' must be a single letter");
    }
    rules.emplace_back(parse_letter_token(lhs), img[0]);
  }
  return Coding(std::move(rules));
}

Coding Coding::identity(const Alphabet& alphabet) {
  std::vector<std::pair<Letter, Letter>> rules;
  for (Letter a : alphabet.letters()) rules.emplace_back(a, a);
  return Coding(std::move(rules));
}

Letter Coding::map(Letter a) const { return targets_[domain_.index_of(a)]; }

Word Coding::apply(std::span<const Letter> w) const {
  Word out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(map(a));
  return out;
}

Word coded_fixed_point_prefix(const Morphism& m, const Coding& code, Letter a,
                              std::size_t len) {
  return code.apply(m.fixed_point_prefix(a, len));
}

}  // namespace wordcomp
