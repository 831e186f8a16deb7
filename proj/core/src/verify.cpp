#include "wordcomp/verify.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "wordcomp/classics.hpp"
#include "wordcomp/complexity.hpp"
#include "wordcomp/dfao.hpp"
#include "wordcomp/linrep.hpp"
#include "wordcomp/powers.hpp"
#include "wordcomp/prefix_buffer.hpp"

#ifndef WORDCOMP_DEFAULT_DATA_DIR
#define WORDCOMP_DEFAULT_DATA_DIR "data"
#endif

namespace wordcomp {

namespace {

// Collects the first failure only; later asserts are skipped.
struct Checker {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (ok && !cond) {
      ok = false;
      detail = what;
    }
  }
  template <typename A, typename B>
  void equals(const A& actual, const B& expected, const std::string& what) {
    if (!ok) return;
    if (!(actual == static_cast<A>(expected))) {
      std::ostringstream os;
      os << what << ": expected " << expected << ", got " << actual;
      ok = false;
      detail = os.str();
    }
  }
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open fixture " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Int out = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    out *= Int(n - i);
    out /= Int(i + 1);
  }
  return out;
}

Int int_pow(std::uint64_t base, std::uint64_t exp) {
  Int out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// ---- criterion bodies ------------------------------------------------------

void check_ternary_tm(Checker& c, const VerifyOptions&) {
  PrefixBuffer w = PrefixBuffer::morphic(classics::ternary_thue_morse(), 0);
  Valuation id = w.identity_valuation();
  ComplexityProfile add = complexity_profile(w, 200, ComplexityKind::additive, id);
  ComplexityProfile ab = complexity_profile(w, 200, ComplexityKind::abelian);
  c.require(add.stabilized_upto >= 200, "additive profile did not stabilize to n=200");
  c.require(ab.stabilized_upto >= 200, "abelian profile did not stabilize to n=200");
  for (std::size_t n = 0; n <= 200 && c.ok; ++n) {
    std::uint64_t want_add = n == 0 ? 1 : (n == 1 ? 3 : 5);
    std::uint64_t want_ab = n == 0 ? 1 : (n == 1 ? 3 : (n % 3 == 0 ? 7 : 6));
    c.equals(add.values[n], want_add, "additive(" + std::to_string(n) + ")");
    c.equals(ab.values[n], want_ab, "abelian(" + std::to_string(n) + ")");
  }
}

void check_lm_tm(Checker& c, const VerifyOptions&) {
  const std::pair<Letter, Letter> unequal[] = {{1, 3}, {2, 3}, {1, 4}};
  for (auto [l, m] : unequal) {
    PrefixBuffer w = PrefixBuffer::morphic(classics::generalized_thue_morse(l, m), 0);
    Valuation id = w.identity_valuation();
    ComplexityProfile add = complexity_profile(w, 100, ComplexityKind::additive, id);
    ComplexityProfile ab = complexity_profile(w, 100, ComplexityKind::abelian);
    std::string tag = "(" + std::to_string(l) + "," + std::to_string(m) + ")";
    c.require(add.stabilized_upto >= 100 && ab.stabilized_upto >= 100,
              tag + " profiles did not stabilize to n=100");
    for (std::size_t n = 0; n <= 100 && c.ok; ++n) {
      std::uint64_t want = n == 0 ? 1 : (n == 1 ? 3 : (n == 2 ? 6 : (n % 3 == 0 ? 7 : 6)));
      c.equals(ab.values[n], want, tag + " abelian(" + std::to_string(n) + ")");
      c.equals(add.values[n], ab.values[n],
               tag + " additive(" + std::to_string(n) + ") != abelian");
    }
  }
  const std::pair<Letter, Letter> doubled[] = {{1, 2}, {2, 4}};
  for (auto [l, m] : doubled) {
    PrefixBuffer w = PrefixBuffer::morphic(classics::generalized_thue_morse(l, m), 0);
    Valuation id = w.identity_valuation();
    ComplexityProfile add = complexity_profile(w, 100, ComplexityKind::additive, id);
    std::string tag = "(" + std::to_string(l) + "," + std::to_string(m) + ")";
    c.require(add.stabilized_upto >= 100, tag + " profile did not stabilize to n=100");
    for (std::size_t n = 0; n <= 100 && c.ok; ++n) {
      std::uint64_t want = n == 0 ? 1 : (n == 1 ? 3 : 5);
      c.equals(add.values[n], want, tag + " additive(" + std::to_string(n) + ")");
    }
  }
}

void check_vtm(Checker& c, const VerifyOptions&) {
  PrefixBuffer w = PrefixBuffer::morphic(classics::vtm(), 0);
  Valuation id = w.identity_valuation();
  ComplexityProfile add = complexity_profile(w, 500, ComplexityKind::additive, id);
  c.require(add.stabilized_upto >= 500, "additive profile did not stabilize to n=500");
  for (std::size_t n = 1; n <= 500 && c.ok; ++n) {
    c.equals(add.values[n], 3, "additive(" + std::to_string(n) + ")");
  }

  ComplexityProfile ab = complexity_profile(w, 2000, ComplexityKind::abelian);
  c.require(ab.stabilized_upto >= 2000, "abelian profile did not stabilize to n=2000");
  std::uint64_t prev_max = 0;
  std::uint64_t max_at_2000 = 0;
  for (std::size_t scale : {250u, 500u, 1000u, 2000u}) {
    std::uint64_t mx = 0;
    for (std::size_t n = 1; n <= scale; ++n) mx = std::max(mx, ab.values[n]);
    c.require(mx >= prev_max, "abelian max dropped at scale " + std::to_string(scale));
    prev_max = mx;
    max_at_2000 = mx;
  }
  c.require(max_at_2000 >= 5,
            "abelian max over n<=2000 is " + std::to_string(max_at_2000) + " < 5");
}

void check_pc_word(Checker& c, const VerifyOptions& opt) {
  Morphism f = classics::parikh_collinear_example();
  c.require(f.is_parikh_collinear(), "morphism is not Parikh-collinear");

  PrefixBuffer w = PrefixBuffer::morphic(f, 0);
  Valuation id = w.identity_valuation();
  ComplexityProfile add = complexity_profile(w, 243, ComplexityKind::additive, id);
  ComplexityProfile ab = complexity_profile(w, 243, ComplexityKind::abelian);
  c.require(add.stabilized_upto >= 243 && ab.stabilized_upto >= 243,
            "profiles did not stabilize to n=243");

  Dfao dfao = Dfao::parse(read_file(opt.data_dir / "pc_fixed_point_additive.dfao"));
  PositionalSystem base3 = PositionalSystem::base(3);
  for (std::size_t n = 0; n <= 243 && c.ok; ++n) {
    std::uint64_t want_add = n == 0 ? 1 : (n == 1 ? 3 : (n == 2 ? 4 : (n % 3 == 0 ? 3 : 5)));
    std::uint64_t want_ab = n == 0 ? 1 : (n == 1 ? 3 : (n == 2 ? 5 : (n % 3 == 0 ? 3 : 7)));
    c.equals(add.values[n], want_add, "additive(" + std::to_string(n) + ")");
    c.equals(ab.values[n], want_ab, "abelian(" + std::to_string(n) + ")");
    c.equals(add.values[n],
             static_cast<std::uint64_t>(sequence_term(dfao, base3, n)),
             "additive(" + std::to_string(n) + ") vs automaton output");
  }
}

void check_tribonacci(Checker& c, const VerifyOptions&) {
  PrefixBuffer w = PrefixBuffer::morphic(classics::tribonacci(), 0, std::nullopt, 1'000'000);
  Valuation id = w.identity_valuation();
  ComplexityProfile add = complexity_profile(w, 300, ComplexityKind::additive, id);
  c.require(add.stabilized_upto >= 300, "additive profile did not stabilize to n=300");
  for (std::size_t n = 1; n <= 300 && c.ok; ++n) {
    c.require(add.values[n] >= 3 && add.values[n] <= 5,
              "additive(" + std::to_string(n) + ") = " + std::to_string(add.values[n]) +
                  " outside {3,4,5}");
  }

  PositionalSystem trib = PositionalSystem::tribonacci();
  auto at_rep = [&](std::string_view digit_text) {
    Digits d = parse_digits(digit_text);
    return static_cast<std::uint64_t>(trib.val(d).convert_to<std::uint64_t>());
  };
  std::uint64_t n3 = at_rep("100"), n4 = at_rep("1101"), n5 = at_rep("1101001100");
  c.equals(n3, 4, "value of tribonacci digits 100");
  c.equals(n4, 12, "value of tribonacci digits 1101");
  c.equals(n5, 478, "value of tribonacci digits 1101001100");
  c.equals(additive_complexity(w, n3, id), 3, "additive(4)");
  c.equals(additive_complexity(w, n4, id), 4, "additive(12)");
  c.equals(additive_complexity(w, n5, id), 5, "additive(478)");

  for (std::size_t n = 0; n <= 300 && c.ok; ++n) {
    WeightRange range = weight_range(w, n, id);
    c.require(range.stabilized, "weight range at n=" + std::to_string(n) +
                                    " did not stabilize");
    c.require(range.contiguous, "weight range at n=" + std::to_string(n) +
                                    " has gaps");
  }
}

void check_cww(Checker& c, const VerifyOptions&) {
  PrefixBuffer w = PrefixBuffer::morphic(classics::cww(), 0);
  Valuation id = w.identity_valuation();
  ComplexityProfile add = complexity_profile(w, 256, ComplexityKind::additive, id);
  c.require(add.stabilized_upto >= 256, "additive profile did not stabilize to n=256");
  for (std::size_t n = 1; n <= 256 && c.ok; ++n) {
    std::uint64_t lg = std::bit_width(n) - 1;  // floor(log2 n)
    c.equals(add.values[n], 2 * lg + 3, "additive(" + std::to_string(n) + ")");
  }
}

void check_ccss(Checker& c, const VerifyOptions&) {
  PrefixBuffer w = PrefixBuffer::morphic(classics::ccss(), 0);
  Valuation id = w.identity_valuation();
  for (std::size_t order = 1; order <= 30 && c.ok; ++order) {
    auto hit = find_power(w, ComplexityKind::additive, 3, order, 10'000, &id);
    c.require(!hit, "additive cube of order " + std::to_string(order) + " at position " +
                        std::to_string(hit ? hit->position : 0));
  }

  auto mismatch = first_add_ab_mismatch(w, id, 30);
  c.require(mismatch.has_value(), "no additive/abelian mismatch up to n=30");
  if (mismatch) c.equals(*mismatch, 23, "first additive/abelian mismatch");

  Word u = parse_word("11011031430110343430314");
  Word v = parse_word("30310110110314303434303");
  c.equals(u.size(), std::size_t{23}, "length of first factor");
  c.equals(v.size(), std::size_t{23}, "length of second factor");
  c.equals(weighted_sum(u, id), weighted_sum(v, id), "weighted sums of the length-23 pair");
  c.require(parikh(u, w.alphabet()) != parikh(v, w.alphabet()),
            "length-23 pair should not be abelian equivalent");
}

void check_semigroup(Checker& c, const VerifyOptions& opt) {
  LinearRep rep = LinearRep::parse(read_file(opt.data_dir / "rudin_shapiro.linrep"));
  c.equals(rep.dim, std::size_t{4}, "fixture dimension");

  LinearRep min = minimize(rep);
  c.require(min.dim <= 4, "minimized dimension " + std::to_string(min.dim) + " > 4");
  // exhaustive agreement on all binary digit strings of length <= 12
  for (std::size_t len = 0; len <= 12 && c.ok; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len) && c.ok; ++bits) {
      Digits d(len);
      for (std::size_t i = 0; i < len; ++i) d[i] = (bits >> (len - 1 - i)) & 1;
      c.require(evaluate(rep, d) == evaluate(min, d),
                "minimize changed the value on digits " + format_digits(d));
    }
  }

  SemigroupResult sg = semigroup_trick(min, 100);
  c.require(sg.dfao.has_value(), "semigroup trick did not halt");
  if (!sg.dfao) return;
  c.equals(sg.dfao->size(), std::size_t{4}, "automaton state count");
  std::string serialized = sg.dfao->serialize();
  std::string fixture = read_file(opt.data_dir / "rudin_shapiro.dfao");
  c.require(serialized == fixture, "emitted automaton differs from fixture bytes");

  const long long expect[16] = {0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1};
  PositionalSystem base2 = PositionalSystem::base(2);
  for (std::uint64_t n = 0; n < 16 && c.ok; ++n) {
    c.equals(sequence_term(*sg.dfao, base2, n), expect[n],
             "term " + std::to_string(n) + " of the automaton sequence");
  }
}

void check_fib_powers(Checker& c, const VerifyOptions&) {
  PrefixBuffer w = PrefixBuffer::morphic(classics::fibonacci(), 0);
  for (std::uint64_t k = 2; k <= 3 && c.ok; ++k) {
    for (std::uint64_t n = 1; n <= 40 && c.ok; ++n) {
      bool predicted = fibonacci_abelian_criterion(k, n);
      bool found = find_power(w, ComplexityKind::abelian, static_cast<unsigned>(k),
                              static_cast<std::size_t>(n), 30'000)
                       .has_value();
      c.require(predicted == found,
                "criterion and search disagree at k=" + std::to_string(k) +
                    ", order " + std::to_string(n) + " (criterion says " +
                    (predicted ? "power" : "no power") + ")");
    }
  }
}

void check_trib_squares(Checker& c, const VerifyOptions&) {
  PrefixBuffer w = PrefixBuffer::morphic(classics::tribonacci(), 0);
  bool saw_one = false, saw_two = false;
  for (std::size_t order = 1; order <= 200 && c.ok; ++order) {
    auto hit = find_power(w, ComplexityKind::abelian, 2, order, 50'000);
    c.require(hit.has_value(), "no abelian square of order " + std::to_string(order));
    std::uint64_t classes = abelian_square_class_count(w, order, 50'000);
    c.require(classes == 1 || classes == 2,
              "order " + std::to_string(order) + " has " + std::to_string(classes) +
                  " square classes");
    saw_one |= classes == 1;
    saw_two |= classes == 2;
  }
  c.require(saw_one, "no order with exactly one square class");
  c.require(saw_two, "no order with exactly two square classes");
}

void check_valuations(Checker& c, const VerifyOptions&) {
  const std::pair<Letter, std::optional<std::size_t>> cases[] = {
      {3, std::optional<std::size_t>{11}},
      {4, std::optional<std::size_t>{43}},
      {5, std::nullopt},
  };
  for (const auto& [heavy, expect] : cases) {
    PrefixBuffer w = PrefixBuffer::morphic(classics::vtm_variant(heavy), 0);
    Valuation id = w.identity_valuation();
    std::size_t n_max = expect ? 100 : 2000;
    auto got = first_add_ab_mismatch(w, id, n_max);
    std::string tag = "vtm variant with heavy letter " + std::to_string(heavy);
    if (expect) {
      c.require(got.has_value(), tag + ": no mismatch up to n=" + std::to_string(n_max));
      if (got) c.equals(*got, *expect, tag + ": first mismatch");
    } else {
      c.require(!got.has_value(),
                tag + ": unexpected mismatch at n=" + std::to_string(got ? *got : 0));
    }
  }

  std::vector<Letter> sigma = equalizing_valuation(3, 2);
  c.require(sigma == std::vector<Letter>{0, 1, 3},
            "equalizing alphabet for (k=3, C=2) is not {0,1,3}");

  PrefixBuffer trib = PrefixBuffer::morphic(classics::tribonacci(), 0);
  Valuation reweighted(trib.alphabet(), {0, 1, 3});
  auto mismatch = first_add_ab_mismatch(trib, reweighted, 300);
  c.require(!mismatch.has_value(),
            "tribonacci over {0,1,3}: additive != abelian at n=" +
                std::to_string(mismatch ? *mismatch : 0));
}

void check_random_properties(Checker& c, const VerifyOptions&) {
  std::mt19937 rng(0x5eed5u);
  auto rand_below = [&](std::uint32_t n) { return rng() % n; };

  // 20 random prolongable morphisms, alphabet <= 4, image lengths <= 4
  int built = 0;
  while (built < 20 && c.ok) {
    std::uint32_t sigma = 2 + rand_below(3);
    std::vector<std::pair<Letter, Word>> rules;
    for (Letter a = 0; a < sigma; ++a) {
      std::size_t len = a == 0 ? 2 + rand_below(3) : rand_below(5);
      Word img;
      if (a == 0) img.push_back(0);
      while (img.size() < len) img.push_back(rand_below(sigma));
      rules.emplace_back(a, std::move(img));
    }
    Morphism m(std::move(rules));
    if (!m.is_prolongable(0)) continue;
    ++built;

    PrefixBuffer w = PrefixBuffer::morphic(m, 0);
    Valuation id = w.identity_valuation();
    std::size_t k = w.alphabet().size();
    for (std::size_t n = 0; n <= 40 && c.ok; ++n) {
      ScanResult fac = scan_complexity(w, n, ComplexityKind::factor);
      ScanResult ab = scan_complexity(w, n, ComplexityKind::abelian);
      ScanResult add = scan_complexity(w, n, ComplexityKind::additive, &id);
      // compare on a common prefix so the chain is exact
      std::size_t common = std::max({fac.prefix_used, ab.prefix_used, add.prefix_used,
                                     std::size_t{4} * n + 1});
      std::uint64_t f = count_at_prefix(w, n, ComplexityKind::factor, nullptr, common);
      std::uint64_t a = count_at_prefix(w, n, ComplexityKind::abelian, nullptr, common);
      std::uint64_t d = count_at_prefix(w, n, ComplexityKind::additive, &id, common);
      std::string tag = "word " + std::to_string(built) + ", n=" + std::to_string(n);
      c.require(1 <= d && d <= a && a <= f, tag + ": chain 1<=add<=ab<=fac broken");
      c.require(Int(f) <= int_pow(sigma, n), tag + ": factor count exceeds sigma^n");
      c.require(Int(d) <= binomial(n + k - 1, k - 1),
                tag + ": additive count exceeds binom(n+k-1,k-1)");
    }
  }

  // ultimately periodic words: additive <= preperiod + period
  for (int trial = 0; trial < 20 && c.ok; ++trial) {
    std::size_t pre_len = rand_below(6);
    std::size_t per_len = 1 + rand_below(6);
    Word pre, per;
    for (std::size_t i = 0; i < pre_len; ++i) pre.push_back(rand_below(4));
    for (std::size_t i = 0; i < per_len; ++i) per.push_back(rand_below(4));
    PrefixBuffer w = PrefixBuffer::periodic(pre, per);
    Valuation id = w.identity_valuation();
    for (std::size_t n = 1; n <= 40 && c.ok; ++n) {
      std::uint64_t d = additive_complexity(w, n, id);
      c.require(d <= pre_len + per_len,
                "periodic trial " + std::to_string(trial) + ", n=" + std::to_string(n) +
                    ": additive " + std::to_string(d) + " > preperiod+period " +
                    std::to_string(pre_len + per_len));
    }
  }
}

struct CheckSpec {
  const char* name;
  double budget_seconds;
  void (*fn)(Checker&, const VerifyOptions&);
};

const CheckSpec kChecks[] = {
    {"ternary-tm", 5.0, check_ternary_tm},
    {"lm-tm", 10.0, check_lm_tm},
    {"vtm", 5.0, check_vtm},
    {"pc-word", 5.0, check_pc_word},
    {"tribonacci", 30.0, check_tribonacci},
    {"cww", 10.0, check_cww},
    {"ccss", 20.0, check_ccss},
    {"semigroup", 2.0, check_semigroup},
    {"fib-powers", 20.0, check_fib_powers},
    {"trib-squares", 30.0, check_trib_squares},
    {"valuations", 30.0, check_valuations},
    {"random-properties", 30.0, check_random_properties},
};

}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("WORDCOMP_DATA_DIR")) return env;
  return WORDCOMP_DEFAULT_DATA_DIR;
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& spec : kChecks) out.emplace_back(spec.name);
    return out;
  }();
  return names;
}

CheckResult run_verify_check(const std::string& name, const VerifyOptions& opt) {
  for (const auto& spec : kChecks) {
    if (name != spec.name) continue;
    CheckResult result;
    result.name = spec.name;
    result.budget_seconds = spec.budget_seconds;
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    try {
      spec.fn(checker, opt);
    } catch (const std::exception& e) {
      checker.ok = false;
      checker.detail = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (checker.ok && result.seconds > spec.budget_seconds) {
      checker.ok = false;
      checker.detail = "runtime " + std::to_string(result.seconds) + "s exceeds budget " +
                       std::to_string(spec.budget_seconds) + "s";
    }
    result.pass = checker.ok;
    result.detail = checker.ok ? "ok" : checker.detail;
    return result;
  }
  throw Error("unknown verify check '" + name + "'");
}

std::vector<CheckResult> run_verify(const std::vector<std::string>& names,
                                    const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    for (const auto& spec : kChecks) out.push_back(run_verify_check(spec.name, opt));
    return out;
  }
  for (const std::string& name : names) out.push_back(run_verify_check(name, opt));
  return out;
}

}  // namespace wordcomp
