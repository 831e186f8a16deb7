#include "wordcomp/complexity.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace wordcomp {

namespace {

constexpr std::size_t kScanFloor = 4096;

// letter -> value lookup over a small dense range
template <typename T>
std::vector<T> dense_table(const Alphabet& alphabet, const std::vector<T>& by_index) {
  Letter max_letter = alphabet.letters().empty() ? 0 : alphabet.letters().back();
  std::vector<T> table(static_cast<std::size_t>(max_letter) + 1, T{});
  for (std::size_t i = 0; i < alphabet.size(); ++i) table[alphabet.letter(i)] = by_index[i];
  return table;
}

struct AdditiveScan {
  std::uint64_t count = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
};

AdditiveScan scan_additive(std::span<const Letter> s, std::size_t n,
                           const std::vector<std::uint64_t>& weight_of) {
  AdditiveScan out;
  if (s.size() < n || n == 0) return out;
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < n; ++j) sum += weight_of[s[j]];
  std::unordered_set<std::uint64_t> sums;
  sums.reserve(64);
  std::uint64_t lo = sum, hi = sum;
  sums.insert(sum);
  for (std::size_t i = 0; i + n < s.size(); ++i) {
    sum -= weight_of[s[i]];
    sum += weight_of[s[i + n]];
    lo = std::min(lo, sum);
    hi = std::max(hi, sum);
    sums.insert(sum);
  }
  out.count = sums.size();
  out.min = static_cast<std::int64_t>(lo);
  out.max = static_cast<std::int64_t>(hi);
  return out;
}

std::uint64_t scan_abelian(std::span<const Letter> s, std::size_t n,
                           const std::vector<std::uint32_t>& index_of, std::size_t k) {
  if (s.size() < n || n == 0) return 0;
  std::vector<std::uint32_t> counts(k, 0);
  for (std::size_t j = 0; j < n; ++j) ++counts[index_of[s[j]]];

  // Pack the count vector into one word when it fits; fall back to a byte
  // string key otherwise.
  unsigned bits = 1;
  while ((std::size_t{1} << bits) <= n) ++bits;
  if (k * bits <= 64) {
    auto pack = [&]() {
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < k; ++j) key = (key << bits) | counts[j];
      return key;
    };
    std::unordered_set<std::uint64_t> keys;
    keys.reserve(64);
    keys.insert(pack());
    for (std::size_t i = 0; i + n < s.size(); ++i) {
      Letter out_l = s[i], in_l = s[i + n];
      if (out_l == in_l) continue;  // window class unchanged, key already present
      --counts[index_of[out_l]];
      ++counts[index_of[in_l]];
      keys.insert(pack());
    }
    return keys.size();
  }

  std::unordered_set<std::string> keys;
  auto pack = [&]() {
    return std::string(reinterpret_cast<const char*>(counts.data()),
                       counts.size() * sizeof(std::uint32_t));
  };
  keys.insert(pack());
  for (std::size_t i = 0; i + n < s.size(); ++i) {
    Letter out_l = s[i], in_l = s[i + n];
    if (out_l == in_l) continue;
    --counts[index_of[out_l]];
    ++counts[index_of[in_l]];
    keys.insert(pack());
  }
  return keys.size();
}

constexpr std::uint64_t kHashBase = 0x9E3779B97F4A7C15ULL | 1ULL;

// Distinct length-n windows by rolling hash, verifying real content on every
// hash-bucket hit.
std::uint64_t scan_factor(std::span<const Letter> s, std::size_t n,
                          std::vector<std::size_t>* first_positions) {
  if (s.size() < n || n == 0) return 0;
  std::uint64_t pow = 1;
  for (std::size_t j = 0; j + 1 < n; ++j) pow *= kHashBase;
  std::uint64_t h = 0;
  for (std::size_t j = 0; j < n; ++j) h = h * kHashBase + s[j];

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  buckets.reserve(256);
  std::uint64_t distinct = 0;
  auto visit = [&](std::size_t i, std::uint64_t hash) {
    auto& bucket = buckets[hash];
    for (std::size_t p : bucket) {
      if (std::memcmp(s.data() + p, s.data() + i, n * sizeof(Letter)) == 0) return;
    }
    bucket.push_back(i);
    ++distinct;
    if (first_positions) first_positions->push_back(i);
  };
  visit(0, h);
  for (std::size_t i = 0; i + n < s.size(); ++i) {
    h = (h - s[i] * pow) * kHashBase + s[i + n];
    visit(i + 1, h);
  }
  return distinct;
}

struct StabilizedScan {
  std::uint64_t count = 0;
  AdditiveScan additive;
  bool stabilized = false;
  std::size_t prefix_used = 0;
};

// Core stabilization protocol: scan at L = max(4n, 4096), then keep doubling
// the prefix until the count is unchanged across two consecutive doublings.
// A finite source scanned to its end is exact; hitting the cap is not.
template <typename CountFn>
StabilizedScan stabilize(PrefixBuffer& src, std::size_t n, CountFn&& count_at) {
  StabilizedScan out;
  std::size_t target = std::max(4 * n, kScanFloor);
  auto scan_once = [&](std::size_t len) {
    auto s = src.ensure(len);
    out.prefix_used = std::min(len, s.size());
    return count_at(s.first(out.prefix_used));
  };

  out.count = scan_once(target);
  if (src.exhausted() && src.size() <= target) {
    out.stabilized = true;
    return out;
  }
  int unchanged = 0;
  while (true) {
    if (target >= src.cap()) {
      out.stabilized = false;
      return out;
    }
    std::size_t next = std::min(target * 2, src.cap());
    std::uint64_t c = scan_once(next);
    unchanged = (c == out.count) ? unchanged + 1 : 0;
    out.count = c;
    target = next;
    if (src.exhausted() && src.size() <= target) {
      out.stabilized = true;
      return out;
    }
    if (unchanged >= 2) {
      out.stabilized = true;
      return out;
    }
  }
}

StabilizedScan stabilized_scan(PrefixBuffer& src, std::size_t n, ComplexityKind kind,
                               const Valuation* v) {
  StabilizedScan out;
  if (n == 0) {
    // one class: the empty word
    out.count = 1;
    out.stabilized = true;
    return out;
  }
  switch (kind) {
    case ComplexityKind::factor:
      return stabilize(src, n, [&](std::span<const Letter> s) {
        return scan_factor(s, n, nullptr);
      });
    case ComplexityKind::abelian: {
      std::vector<std::uint32_t> idx(src.alphabet().size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
      auto index_of = dense_table(src.alphabet(), idx);
      std::size_t k = src.alphabet().size();
      return stabilize(src, n, [&](std::span<const Letter> s) {
        return scan_abelian(s, n, index_of, k);
      });
    }
    case ComplexityKind::additive: {
      Valuation ident = src.identity_valuation();
      const Valuation& val = v ? *v : ident;
      std::vector<std::uint64_t> weights(src.alphabet().size());
      for (std::size_t i = 0; i < weights.size(); ++i) {
        weights[i] = val.weight(src.alphabet().letter(i));
      }
      auto weight_of = dense_table(src.alphabet(), weights);
      AdditiveScan last;
      StabilizedScan result = stabilize(src, n, [&](std::span<const Letter> s) {
        last = scan_additive(s, n, weight_of);
        return last.count;
      });
      result.additive = last;
      return result;
    }
  }
  return out;
}

}  // namespace

std::string to_string(ComplexityKind kind) {
  switch (kind) {
    case ComplexityKind::factor: return "factor";
    case ComplexityKind::abelian: return "abelian";
    case ComplexityKind::additive: return "additive";
  }
  return "?";
}

ComplexityKind parse_complexity_kind(std::string_view name) {
  if (name == "factor") return ComplexityKind::factor;
  if (name == "abelian") return ComplexityKind::abelian;
  if (name == "additive") return ComplexityKind::additive;
  throw ParseError("unknown complexity kind '" + std::string(name) + "'");
}

ScanResult scan_complexity(PrefixBuffer& src, std::size_t n, ComplexityKind kind,
                           const Valuation* v) {
  StabilizedScan s = stabilized_scan(src, n, kind, v);
  return {s.count, s.stabilized, s.prefix_used};
}

std::uint64_t count_at_prefix(PrefixBuffer& src, std::size_t n, ComplexityKind kind,
                              const Valuation* v, std::size_t prefix_len) {
  if (n == 0) return 1;
  auto s = src.ensure(prefix_len);
  if (s.size() > prefix_len) s = s.first(prefix_len);
  switch (kind) {
    case ComplexityKind::factor:
      return scan_factor(s, n, nullptr);
    case ComplexityKind::abelian: {
      std::vector<std::uint32_t> idx(src.alphabet().size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
      auto index_of = dense_table(src.alphabet(), idx);
      return scan_abelian(s, n, index_of, src.alphabet().size());
    }
    case ComplexityKind::additive: {
      Valuation ident = src.identity_valuation();
      const Valuation& val = v ? *v : ident;
      std::vector<std::uint64_t> weights(src.alphabet().size());
      for (std::size_t i = 0; i < weights.size(); ++i) {
        weights[i] = val.weight(src.alphabet().letter(i));
      }
      auto weight_of = dense_table(src.alphabet(), weights);
      return scan_additive(s, n, weight_of).count;
    }
  }
  return 0;
}

FactorSet factor_set(PrefixBuffer& src, std::size_t n) {
  FactorSet out;
  out.length = n;
  if (n == 0) {
    out.factors.push_back({});
    out.stabilized = true;
    return out;
  }
  StabilizedScan s = stabilized_scan(src, n, ComplexityKind::factor, nullptr);
  out.stabilized = s.stabilized;
  std::vector<std::size_t> positions;
  auto view = src.view().first(std::min(s.prefix_used, src.size()));
  scan_factor(view, n, &positions);
  out.factors.reserve(positions.size());
  for (std::size_t p : positions) {
    out.factors.emplace_back(view.begin() + p, view.begin() + p + n);
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

std::uint64_t factor_complexity(PrefixBuffer& src, std::size_t n) {
  return scan_complexity(src, n, ComplexityKind::factor).count;
}
std::uint64_t abelian_complexity(PrefixBuffer& src, std::size_t n) {
  return scan_complexity(src, n, ComplexityKind::abelian).count;
}
std::uint64_t additive_complexity(PrefixBuffer& src, std::size_t n, const Valuation& v) {
  return scan_complexity(src, n, ComplexityKind::additive, &v).count;
}

std::int64_t weighted_delta(PrefixBuffer& src, std::size_t i, std::size_t n,
                            const Valuation& v) {
  auto s = src.ensure(i + n);
  if (s.size() < i + n) {
    throw OutOfRangeError("prefix of length " + std::to_string(i + n) +
                          " is not materializable");
  }
  std::uint64_t at_i = weighted_sum(s.subspan(i, n), v);
  std::uint64_t at_0 = weighted_sum(s.first(n), v);
  return static_cast<std::int64_t>(at_i) - static_cast<std::int64_t>(at_0);
}

ComplexityProfile complexity_profile(PrefixBuffer& src, std::size_t n_max,
                                     ComplexityKind kind, std::optional<Valuation> v) {
  ComplexityProfile out;
  out.kind = kind;
  out.valuation = std::move(v);
  out.values.resize(n_max + 1);
  out.stabilized_upto = std::numeric_limits<std::size_t>::max();
  const Valuation* vp = out.valuation ? &*out.valuation : nullptr;
  bool all_stable = true;
  for (std::size_t n = 0; n <= n_max; ++n) {
    StabilizedScan s = stabilized_scan(src, n, kind, vp);
    out.values[n] = s.count;
    if (all_stable && !s.stabilized) {
      all_stable = false;
      out.stabilized_upto = n == 0 ? std::numeric_limits<std::size_t>::max() : n - 1;
    }
  }
  if (all_stable) out.stabilized_upto = n_max;
  return out;
}

std::string EventualPeriod::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < preperiod.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(preperiod[i]);
  }
  if (!preperiod.empty()) out.push_back(' ');
  out.push_back('(');
  for (std::size_t i = 0; i < period.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(period[i]);
  }
  out += ")^\xCF\x89";  // omega
  return out;
}

std::optional<EventualPeriod> detect_eventual_period(const ComplexityProfile& p,
                                                     std::size_t max_preperiod,
                                                     std::size_t max_period) {
  if (p.stabilized_upto == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  std::size_t count = p.stabilized_upto + 1;
  const auto& v = p.values;
  for (std::size_t pre = 0; pre <= max_preperiod; ++pre) {
    for (std::size_t per = 1; per <= max_period; ++per) {
      if (count < pre + 3 * per) continue;
      bool ok = true;
      for (std::size_t i = pre + per; i < count && ok; ++i) ok = v[i] == v[i - per];
      if (!ok) continue;
      EventualPeriod ep;
      ep.preperiod.assign(v.begin(), v.begin() + pre);
      ep.period.assign(v.begin() + pre, v.begin() + pre + per);
      return ep;
    }
  }
  return std::nullopt;
}

WeightRange weight_range(PrefixBuffer& src, std::size_t n, const Valuation& v) {
  WeightRange out;
  if (n == 0) {
    out.stabilized = true;
    return out;
  }
  StabilizedScan s = stabilized_scan(src, n, ComplexityKind::additive, &v);
  out.min = s.additive.min;
  out.max = s.additive.max;
  out.contiguous =
      s.additive.count == static_cast<std::uint64_t>(s.additive.max - s.additive.min) + 1;
  out.stabilized = s.stabilized;
  return out;
}

}  // namespace wordcomp
