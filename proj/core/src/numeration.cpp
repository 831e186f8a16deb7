#include "wordcomp/numeration.hpp"

#include <algorithm>
#include <charconv>

namespace wordcomp {

namespace {

Int parse_int(std::string_view tok) {
  if (tok.empty()) throw ParseError("empty integer");
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError("bad integer '" + std::string(tok) + "'");
  }
  return Int(std::string(tok));
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  while (!text.empty()) {
    std::size_t comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

PositionalSystem PositionalSystem::base(unsigned k) {
  if (k < 2) throw ParseError("base must be at least 2");
  PositionalSystem s;
  s.kind_ = Kind::base;
  s.base_k_ = k;
  s.u_.push_back(1);
  s.digit_bound_ = k - 1;
  return s;
}

PositionalSystem PositionalSystem::fibonacci() { return recurrence({1, 2}, {1, 1}); }

PositionalSystem PositionalSystem::tribonacci() { return recurrence({1, 2, 4}, {1, 1, 1}); }

PositionalSystem PositionalSystem::recurrence(std::vector<Int> initial,
                                              std::vector<Int> coeffs) {
  if (initial.empty() || coeffs.empty()) {
    throw ParseError("recurrence needs initial terms and coefficients");
  }
  if (initial[0] != 1) throw ParseError("U(0) must be 1");
  for (std::size_t i = 1; i < initial.size(); ++i) {
    if (initial[i] <= initial[i - 1]) throw ParseError("U must be strictly increasing");
  }
  PositionalSystem s;
  s.kind_ = Kind::recurrence;
  s.initial_ = std::move(initial);
  s.coeffs_ = std::move(coeffs);
  s.u_ = s.initial_;
  for (std::size_t i = 1; i < s.u_.size(); ++i) {
    Int q = (s.u_[i] + s.u_[i - 1] - 1) / s.u_[i - 1];
    s.digit_bound_ = std::max<unsigned>(s.digit_bound_, static_cast<unsigned>(q - 1));
  }
  return s;
}

PositionalSystem PositionalSystem::from_table(std::vector<Int> table) {
  if (table.empty() || table[0] != 1) throw ParseError("table must start with U(0)=1");
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i] <= table[i - 1]) throw ParseError("U must be strictly increasing");
  }
  PositionalSystem s;
  s.kind_ = Kind::table;
  s.u_ = std::move(table);
  for (std::size_t i = 1; i < s.u_.size(); ++i) {
    Int q = (s.u_[i] + s.u_[i - 1] - 1) / s.u_[i - 1];
    s.digit_bound_ = std::max<unsigned>(s.digit_bound_, static_cast<unsigned>(q - 1));
  }
  return s;
}

PositionalSystem PositionalSystem::parse(std::string_view text) {
  if (text == "fib") return fibonacci();
  if (text == "trib") return tribonacci();
  if (text.starts_with("base:")) {
    unsigned k = 0;
    auto body = text.substr(5);
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
    if (ec != std::errc{} || p != body.data() + body.size()) {
      throw ParseError("bad base in '" + std::string(text) + "'");
    }
    return base(k);
  }
  if (text.starts_with("rec:")) {
    auto body = text.substr(4);
    std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) {
      throw ParseError("recurrence spec needs 'a0,a1,...;c1,c2,...'");
    }
    return recurrence(parse_int_list(body.substr(0, semi)),
                      parse_int_list(body.substr(semi + 1)));
  }
  throw ParseError("unknown numeration system '" + std::string(text) + "'");
}

std::string PositionalSystem::to_string() const {
  switch (kind_) {
    case Kind::base:
      return "base:" + std::to_string(base_k_);
    case Kind::recurrence: {
      if (initial_ == std::vector<Int>{1, 2} && coeffs_ == std::vector<Int>{1, 1}) {
        return "fib";
      }
      if (initial_ == std::vector<Int>{1, 2, 4} && coeffs_ == std::vector<Int>{1, 1, 1}) {
        return "trib";
      }
      std::string out = "rec:";
      for (std::size_t i = 0; i < initial_.size(); ++i) {
        if (i) out += ",";
        out += initial_[i].str();
      }
      out += ";";
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += coeffs_[i].str();
      }
      return out;
    }
    case Kind::table:
      return "table[" + std::to_string(u_.size()) + "]";
  }
  return "?";
}

void PositionalSystem::extend_count(std::size_t count) const {
  while (u_.size() < count) {
    switch (kind_) {
      case Kind::base:
        u_.push_back(u_.back() * base_k_);
        break;
      case Kind::recurrence: {
        Int next = 0;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
          if (j + 1 > u_.size()) break;
          next += coeffs_[j] * u_[u_.size() - 1 - j];
        }
        if (next <= u_.back()) {
          throw ParseError("recurrence is not increasing at index " +
                           std::to_string(u_.size()));
        }
        u_.push_back(next);
        break;
      }
      case Kind::table:
        throw OutOfRangeError("explicit table exhausted at " + std::to_string(u_.size()) +
                              " terms");
    }
    Int q = (u_.back() + u_[u_.size() - 2] - 1) / u_[u_.size() - 2];
    digit_bound_ = std::max<unsigned>(digit_bound_, static_cast<unsigned>(q - 1));
  }
}

void PositionalSystem::extend_while(const Int& bound) const {
  while (u_.back() <= bound) {
    if (kind_ == Kind::table) {
      throw OutOfRangeError("explicit table too short for value " + bound.str());
    }
    extend_count(u_.size() + 1);
  }
}

std::vector<Int> PositionalSystem::u_values(std::size_t count) const {
  if (count == 0) throw OutOfRangeError("u_values needs count >= 1");
  extend_count(count);
  return {u_.begin(), u_.begin() + count};
}

const Int& PositionalSystem::u(std::size_t i) const {
  extend_count(i + 1);
  return u_[i];
}

unsigned PositionalSystem::digit_bound() const { return digit_bound_; }

Digits PositionalSystem::rep(const Int& n) const {
  if (n < 0) throw OutOfRangeError("rep of negative value");
  Digits out;
  if (n == 0) return out;
  extend_while(n);
  std::size_t t = u_.size();
  while (t > 0 && u_[t - 1] > n) --t;
  // u_[t-1] <= n < u_[t]
  Int rest = n;
  out.reserve(t);
  for (std::size_t i = t; i-- > 0;) {
    Int d = rest / u_[i];
    out.push_back(static_cast<unsigned>(d));
    rest -= d * u_[i];
  }
  return out;
}

Int PositionalSystem::val(std::span<const unsigned> digits) const {
  if (!digits.empty()) extend_count(digits.size());
  Int total = 0;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    unsigned d = digits[j];
    if (d > digit_bound_) {
      throw DigitOutOfRangeError("digit " + std::to_string(d) + " exceeds bound " +
                                 std::to_string(digit_bound_));
    }
    total += Int(d) * u_[digits.size() - 1 - j];
  }
  return total;
}

bool PositionalSystem::is_greedy(std::span<const unsigned> digits) const {
  extend_count(digits.size() + 1);
  Int partial = 0;
  // digits are msd-first; check sum_{i<=j} c(i) U(i) < U(j+1) from the bottom
  for (std::size_t j = 0; j < digits.size(); ++j) {
    unsigned d = digits[digits.size() - 1 - j];
    if (d > digit_bound_) {
      throw DigitOutOfRangeError("digit " + std::to_string(d) + " exceeds bound " +
                                 std::to_string(digit_bound_));
    }
    partial += Int(d) * u_[j];
    if (partial >= u_[j + 1]) return false;
  }
  return true;
}

Digits parse_digits(std::string_view text) {
  Digits out;
  if (text.find(',') != std::string_view::npos) {
    for (const Int& v : parse_int_list(text)) out.push_back(static_cast<unsigned>(v));
    return out;
  }
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError(std::string("bad digit '") + c + "'");
    out.push_back(static_cast<unsigned>(c - '0'));
  }
  return out;
}

std::string format_digits(std::span<const unsigned> digits) {
  bool small = std::all_of(digits.begin(), digits.end(), [](unsigned d) { return d <= 9; });
  std::string out;
  if (small) {
    for (unsigned d : digits) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(digits[i]);
  }
  return out;
}

}  // namespace wordcomp
