#include "wordcomp/powers.hpp"

#include <algorithm>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "wordcomp/numeration.hpp"

namespace wordcomp {

namespace {

// per-letter running counts: counts[a][i] = occurrences of letter index a in s[0..i)
std::vector<std::vector<std::uint32_t>> prefix_counts(std::span<const Letter> s,
                                                      const Alphabet& alphabet) {
  std::size_t k = alphabet.size();
  std::vector<std::vector<std::uint32_t>> counts(
      k, std::vector<std::uint32_t>(s.size() + 1, 0));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) counts[a][i + 1] = counts[a][i];
    ++counts[alphabet.index_of(s[i])][i + 1];
  }
  return counts;
}

std::vector<std::uint64_t> prefix_weights(std::span<const Letter> s, const Valuation& v) {
  std::vector<std::uint64_t> w(s.size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) w[i + 1] = w[i] + v.weight(s[i]);
  return w;
}

}  // namespace

std::optional<PowerWitness> find_power(PrefixBuffer& src, ComplexityKind kind, unsigned k,
                                       std::size_t order, std::size_t window,
                                       const Valuation* v) {
  if (kind == ComplexityKind::factor) {
    throw OutOfRangeError("find_power expects abelian or additive kind");
  }
  if (k < 2) throw OutOfRangeError("power exponent k must be at least 2");
  if (order < 1) throw OutOfRangeError("order must be at least 1");
  if (window < static_cast<std::size_t>(k) * order) {
    throw WindowTooSmallError("window " + std::to_string(window) +
                              " cannot hold a power of total length " +
                              std::to_string(static_cast<std::size_t>(k) * order));
  }
  auto s = src.ensure(window);
  if (s.size() > window) s = s.first(window);
  if (s.size() < static_cast<std::size_t>(k) * order) return std::nullopt;
  std::size_t total = static_cast<std::size_t>(k) * order;

  if (kind == ComplexityKind::additive) {
    Valuation ident = src.identity_valuation();
    const Valuation& val = v ? *v : ident;
    auto w = prefix_weights(s, val);
    for (std::size_t i = 0; i + total <= s.size(); ++i) {
      std::uint64_t first = w[i + order] - w[i];
      bool ok = true;
      for (unsigned t = 1; t < k && ok; ++t) {
        std::uint64_t block = w[i + (t + 1) * order] - w[i + t * order];
        ok = block == first;
      }
      if (ok) return PowerWitness{i, order, k, kind};
    }
    return std::nullopt;
  }

  auto counts = prefix_counts(s, src.alphabet());
  std::size_t letters = counts.size();
  for (std::size_t i = 0; i + total <= s.size(); ++i) {
    bool ok = true;
    for (unsigned t = 1; t < k && ok; ++t) {
      std::size_t lo = i + t * order;
      for (std::size_t a = 0; a < letters; ++a) {
        if (counts[a][i + order] - counts[a][i] != counts[a][lo + order] - counts[a][lo]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return PowerWitness{i, order, k, kind};
  }
  return std::nullopt;
}

std::uint64_t abelian_square_class_count(PrefixBuffer& src, std::size_t order,
                                         std::size_t window) {
  if (order < 1) throw OutOfRangeError("order must be at least 1");
  if (window < 2 * order) {
    throw WindowTooSmallError("window " + std::to_string(window) +
                              " cannot hold a square of order " + std::to_string(order));
  }
  auto s = src.ensure(window);
  if (s.size() > window) s = s.first(window);
  if (s.size() < 2 * order) return 0;

  auto counts = prefix_counts(s, src.alphabet());
  std::size_t letters = counts.size();
  std::unordered_set<std::string> classes;
  for (std::size_t i = 0; i + 2 * order <= s.size(); ++i) {
    bool square = true;
    for (std::size_t a = 0; a < letters && square; ++a) {
      square = counts[a][i + order] - counts[a][i] ==
               counts[a][i + 2 * order] - counts[a][i + order];
    }
    if (!square) continue;
    std::string key;
    key.reserve(letters * 4);
    for (std::size_t a = 0; a < letters; ++a) {
      std::uint32_t c = counts[a][i + order] - counts[a][i];
      key.append(reinterpret_cast<const char*>(&c), sizeof(c));
    }
    classes.insert(std::move(key));
  }
  return classes.size();
}

bool fibonacci_abelian_criterion(std::uint64_t k, std::uint64_t n) {
  if (k < 1 || n < 1) throw OutOfRangeError("fibonacci criterion needs k, n >= 1");
  if (k == 1) return true;
  using boost::multiprecision::sqrt;
  Int kn = Int(k) * n;
  // floor(kn * (1+sqrt5)/2): bracket sqrt5 by s/2^p <= sqrt5 < (s+1)/2^p and
  // refine until the two bounds share a floor.
  for (unsigned p = 16;; p *= 2) {
    Int scale = Int(1) << p;
    Int s = sqrt(Int(5) * scale * scale);
    Int denom = scale << 1;
    Int lo_num = kn * (scale + s);
    Int hi_num = kn * (scale + s + 1);
    Int floor_lo = lo_num / denom;
    if (hi_num <= (floor_lo + 1) * denom) {
      Int residue = floor_lo % k;
      return residue == 0 || residue == Int(k) - 1;
    }
    if (p > 1 << 20) throw Error("sqrt(5) interval refinement did not converge");
  }
}

BalanceReport balance_report(PrefixBuffer& src, std::size_t n_max, std::size_t window) {
  BalanceReport out;
  out.n_scanned = n_max;
  auto s = src.ensure(window);
  if (s.size() > window) s = s.first(window);
  if (s.empty()) return out;

  auto counts = prefix_counts(s, src.alphabet());
  std::size_t letters = counts.size();
  for (std::size_t n = 1; n <= n_max && n <= s.size(); ++n) {
    for (std::size_t a = 0; a < letters; ++a) {
      const auto& pc = counts[a];
      std::uint32_t lo = pc[n], hi = pc[n];
      std::size_t lo_at = 0, hi_at = 0;
      for (std::size_t i = 1; i + n <= s.size(); ++i) {
        std::uint32_t c = pc[i + n] - pc[i];
        if (c < lo) {
          lo = c;
          lo_at = i;
        } else if (c > hi) {
          hi = c;
          hi_at = i;
        }
      }
      if (hi - lo > out.c_observed) {
        out.c_observed = hi - lo;
        out.witness = BalanceWitness{src.alphabet().letter(a), hi_at, lo_at, n};
      }
    }
  }
  return out;
}

std::uint64_t balanced_additive_bound(std::span<const Letter> alphabet, std::uint64_t C) {
  if (alphabet.empty()) throw OutOfRangeError("alphabet must be nonempty");
  if (!std::is_sorted(alphabet.begin(), alphabet.end())) {
    throw OutOfRangeError("alphabet must be sorted ascending");
  }
  std::size_t k = alphabet.size();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < (k + 1) / 2; ++i) {
    sum += alphabet[k - 1 - i] - alphabet[i];
  }
  return C * sum + 1;
}

std::vector<Letter> equalizing_valuation(std::size_t k, std::uint64_t C) {
  if (k < 1) throw OutOfRangeError("alphabet size must be at least 1");
  if (C < 1) throw OutOfRangeError("balance constant must be at least 1");
  std::vector<Letter> out;
  out.reserve(k);
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::uint64_t a;
    if (j == 0) {
      a = 0;
    } else if (j == 1) {
      a = 1;
    } else {
      a = sum * C + 1;
    }
    out.push_back(static_cast<Letter>(a));
    sum += a;
  }
  return out;
}

std::optional<std::size_t> first_add_ab_mismatch(PrefixBuffer& src, const Valuation& v,
                                                 std::size_t n_max) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::uint64_t add = scan_complexity(src, n, ComplexityKind::additive, &v).count;
    std::uint64_t ab = scan_complexity(src, n, ComplexityKind::abelian).count;
    if (add != ab) return n;
  }
  return std::nullopt;
}

}  // namespace wordcomp
