#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordcomp/prefix_buffer.hpp"
#include "wordcomp/word.hpp"

namespace wordcomp {

enum class ComplexityKind { factor, abelian, additive };

std::string to_string(ComplexityKind kind);
ComplexityKind parse_complexity_kind(std::string_view name);

// Count of equivalence classes of length-n factors, with the prefix length
// the scan settled on. `stabilized` is true when the count was unchanged
// under two successive prefix doublings, or the source is finite and was
// scanned entirely; it is false when the prefix cap cut the scan short.
struct ScanResult {
  std::uint64_t count = 0;
  bool stabilized = false;
  std::size_t prefix_used = 0;
};

struct FactorSet {
  std::size_t length = 0;
  std::vector<Word> factors;  // sorted, distinct
  bool stabilized = false;
};

struct ComplexityProfile {
  ComplexityKind kind = ComplexityKind::factor;
  std::optional<Valuation> valuation;  // additive only
  std::vector<std::uint64_t> values;   // values[n], n = 0..n_max
  // Largest m such that values[0..m] all stabilized; -1 (as npos) if none.
  std::size_t stabilized_upto = 0;
};

struct EventualPeriod {
  std::vector<std::uint64_t> preperiod;
  std::vector<std::uint64_t> period;
  // "1 3 (5)^ω" style rendering.
  std::string to_string() const;
};

struct WeightRange {
  std::int64_t min = 0;
  std::int64_t max = 0;
  bool contiguous = true;
  bool stabilized = false;
};

ScanResult scan_complexity(PrefixBuffer& src, std::size_t n, ComplexityKind kind,
                           const Valuation* v = nullptr);

// Class count over exactly the first prefix_len letters, no stabilization.
std::uint64_t count_at_prefix(PrefixBuffer& src, std::size_t n, ComplexityKind kind,
                              const Valuation* v, std::size_t prefix_len);

FactorSet factor_set(PrefixBuffer& src, std::size_t n);

std::uint64_t factor_complexity(PrefixBuffer& src, std::size_t n);
std::uint64_t abelian_complexity(PrefixBuffer& src, std::size_t n);
std::uint64_t additive_complexity(PrefixBuffer& src, std::size_t n, const Valuation& v);

// Weighted sum of the window of length n at position i minus that of the
// window at position 0.
std::int64_t weighted_delta(PrefixBuffer& src, std::size_t i, std::size_t n,
                            const Valuation& v);

ComplexityProfile complexity_profile(PrefixBuffer& src, std::size_t n_max,
                                     ComplexityKind kind,
                                     std::optional<Valuation> v = std::nullopt);

// Smallest (preperiod length, period length) writing the profile's
// stabilized range as u.w^omega, with at least three full repetitions of w
// as evidence. None when no such pair exists within the bounds.
std::optional<EventualPeriod> detect_eventual_period(const ComplexityProfile& p,
                                                     std::size_t max_preperiod,
                                                     std::size_t max_period);

WeightRange weight_range(PrefixBuffer& src, std::size_t n, const Valuation& v);

}  // namespace wordcomp
