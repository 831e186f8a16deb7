#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordcomp/classics.hpp"
#include "wordcomp/complexity.hpp"
#include "wordcomp/dfao.hpp"
#include "wordcomp/linrep.hpp"
#include "wordcomp/plot.hpp"
#include "wordcomp/powers.hpp"
#include "wordcomp/prefix_buffer.hpp"
#include "wordcomp/verify.hpp"

namespace wc = wordcomp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

struct WordOptions {
  std::string morphism;
  std::string coding;
  wc::Letter seed = 0;
  std::size_t cap = 0;  // 0 = default
};

void add_word_options(CLI::App* cmd, WordOptions& wo) {
  cmd->add_option("-m,--morphism", wo.morphism,
                  "morphism rules, e.g. \"0->012 1->120 2->201\"")
      ->required();
  cmd->add_option("-c,--coding", wo.coding, "optional coding applied letterwise");
  cmd->add_option("-a,--seed", wo.seed, "seed letter of the fixed point")
      ->default_val(0);
  cmd->add_option("--cap", wo.cap, "prefix cap in letters (default: WORDCOMP_PREFIX_CAP)");
}

wc::PrefixBuffer make_buffer(const WordOptions& wo) {
  wc::Morphism m = wc::Morphism::parse(wo.morphism);
  std::optional<wc::Coding> coding;
  if (!wo.coding.empty()) coding = wc::Coding::parse(wo.coding);
  std::size_t cap = wo.cap ? wo.cap : wc::PrefixBuffer::default_cap();
  return wc::PrefixBuffer::morphic(std::move(m), wo.seed, std::move(coding), cap);
}

// "0:0 1:1 2:3" (or comma separated); empty = identity on letter values
wc::Valuation make_valuation(const std::string& spec, const wc::PrefixBuffer& buf) {
  if (spec.empty()) return wc::Valuation::identity(buf.alphabet());
  std::vector<std::uint64_t> weights(buf.alphabet().size());
  std::vector<bool> seen(buf.alphabet().size(), false);
  std::string body = spec;
  for (char& ch : body) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    std::size_t colon = tok.find(':');
    if (colon == std::string::npos) {
      throw wc::ParseError("valuation entry '" + tok + "' must be LETTER:WEIGHT");
    }
    wc::Letter letter = static_cast<wc::Letter>(std::stoul(tok.substr(0, colon)));
    std::uint64_t weight = std::stoull(tok.substr(colon + 1));
    std::size_t idx = buf.alphabet().index_of(letter);
    weights[idx] = weight;
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw wc::ParseError("valuation lacks a weight for letter " +
                           std::to_string(buf.alphabet().letter(i)));
    }
  }
  return wc::Valuation(buf.alphabet(), std::move(weights));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wc::ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw wc::ParseError("cannot write '" + path + "'");
  out << content;
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
  WordOptions word;
  std::size_t length = 0;
  std::string out_path;
};

int cmd_generate(const GenerateArgs& args) {
  wc::PrefixBuffer buf = make_buffer(args.word);
  auto view = buf.require(args.length);
  std::string text = wc::format_word(view.first(args.length));
  if (args.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_file(args.out_path, text + "\n");
  }
  return kExitOk;
}

// ---- profile ---------------------------------------------------------------

struct ProfileArgs {
  WordOptions word;
  std::size_t n_max = 50;
  std::vector<std::string> kinds{"additive", "abelian"};
  std::string valuation;
  std::string csv_prefix;
  std::string svg_path;
  bool diff = false;
  std::size_t max_preperiod = 8;
  std::size_t max_period = 8;
};

int cmd_profile(const ProfileArgs& args) {
  wc::PrefixBuffer buf = make_buffer(args.word);
  wc::Valuation val = make_valuation(args.valuation, buf);

  std::vector<wc::ComplexityProfile> profiles;
  for (const std::string& kind_name : args.kinds) {
    wc::ComplexityKind kind = wc::parse_complexity_kind(kind_name);
    std::optional<wc::Valuation> v;
    if (kind == wc::ComplexityKind::additive) v = val;
    profiles.push_back(wc::complexity_profile(buf, args.n_max, kind, v));
  }

  std::vector<wc::PlotSeries> series;
  for (const auto& p : profiles) {
    std::ostringstream line;
    line << wc::to_string(p.kind) << ":";
    for (std::uint64_t v : p.values) line << " " << v;
    std::cout << line.str() << "\n";
    if (auto ep = wc::detect_eventual_period(p, args.max_preperiod, args.max_period)) {
      std::cout << wc::to_string(p.kind) << " ~ " << ep->to_string() << "\n";
    } else {
      std::cout << wc::to_string(p.kind) << " ~ no eventual period detected\n";
    }
    if (!args.csv_prefix.empty()) {
      write_file(args.csv_prefix + "_" + wc::to_string(p.kind) + ".csv", wc::profile_csv(p));
    }
    wc::PlotSeries s;
    s.name = wc::to_string(p.kind);
    s.values.assign(p.values.begin(), p.values.end());
    series.push_back(std::move(s));
  }

  const wc::ComplexityProfile* ab = nullptr;
  const wc::ComplexityProfile* add = nullptr;
  for (const auto& p : profiles) {
    if (p.kind == wc::ComplexityKind::abelian) ab = &p;
    if (p.kind == wc::ComplexityKind::additive) add = &p;
  }
  if (args.diff) {
    if (!ab || !add) throw wc::ParseError("--diff needs both abelian and additive kinds");
    wc::PlotSeries d;
    d.name = "abelian - additive";
    std::ostringstream line;
    line << "difference:";
    for (std::size_t n = 0; n < ab->values.size(); ++n) {
      std::int64_t v = static_cast<std::int64_t>(ab->values[n]) -
                       static_cast<std::int64_t>(add->values[n]);
      d.values.push_back(v);
      line << " " << v;
    }
    std::cout << line.str() << "\n";
    if (!args.csv_prefix.empty()) {
      std::string csv = "n,value\n";
      for (std::size_t n = 0; n < d.values.size(); ++n) {
        csv += std::to_string(n) + "," + std::to_string(d.values[n]) + "\n";
      }
      write_file(args.csv_prefix + "_difference.csv", csv);
    }
    series.push_back(std::move(d));
  }

  if (!args.svg_path.empty()) {
    write_file(args.svg_path, wc::step_plot_svg("complexity profile", series));
  }
  return kExitOk;
}

// ---- dfao ------------------------------------------------------------------

int cmd_dfao_run(const std::string& path, const std::string& digit_text,
                 const std::string& numsys, std::int64_t n) {
  wc::Dfao dfao = wc::Dfao::parse(read_file(path));
  if (!digit_text.empty()) {
    wc::Digits digits = wc::parse_digits(digit_text);
    std::cout << dfao.run(digits) << "\n";
    return kExitOk;
  }
  if (n < 0) throw wc::ParseError("dfao run needs --digits or a nonnegative -n");
  wc::PositionalSystem sys = wc::PositionalSystem::parse(numsys);
  std::cout << wc::sequence_term(dfao, sys, static_cast<std::uint64_t>(n)) << "\n";
  return kExitOk;
}

struct DfaoCompareArgs {
  std::string path;
  std::string numsys = "base:3";
  WordOptions word;
  std::string kind = "additive";
  std::string valuation;
  std::uint64_t n_max = 100;
};

int cmd_dfao_compare(const DfaoCompareArgs& args) {
  wc::Dfao dfao = wc::Dfao::parse(read_file(args.path));
  wc::PositionalSystem sys = wc::PositionalSystem::parse(args.numsys);
  wc::PrefixBuffer buf = make_buffer(args.word);
  wc::Valuation val = make_valuation(args.valuation, buf);
  wc::ComplexityKind kind = wc::parse_complexity_kind(args.kind);
  const wc::Valuation* vp = kind == wc::ComplexityKind::additive ? &val : nullptr;
  auto oracle = [&](std::uint64_t n) {
    return static_cast<long long>(
        wc::scan_complexity(buf, static_cast<std::size_t>(n), kind, vp).count);
  };
  auto mismatch = wc::compare_with_oracle(dfao, sys, oracle, args.n_max);
  if (mismatch) {
    std::cout << "mismatch at n=" << *mismatch << ": automaton "
              << wc::sequence_term(dfao, sys, *mismatch) << ", word " << oracle(*mismatch)
              << "\n";
    return kExitVerifyFailure;
  }
  std::cout << "agree for all n <= " << args.n_max << "\n";
  return kExitOk;
}

// ---- linrep ----------------------------------------------------------------

int cmd_linrep_eval(const std::string& path, const std::string& digit_text,
                    const std::string& numsys, std::int64_t n) {
  wc::LinearRep rep = wc::LinearRep::parse(read_file(path));
  if (!digit_text.empty()) {
    wc::Digits digits = wc::parse_digits(digit_text);
    std::cout << wc::evaluate(rep, digits).str() << "\n";
    return kExitOk;
  }
  if (n < 0) throw wc::ParseError("linrep eval needs --digits or a nonnegative -n");
  wc::PositionalSystem sys = wc::PositionalSystem::parse(numsys);
  wc::Digits digits = sys.rep(static_cast<std::uint64_t>(n));
  std::cout << wc::evaluate(rep, digits).str() << "\n";
  return kExitOk;
}

int cmd_linrep_minimize(const std::string& path, const std::string& out_path) {
  wc::LinearRep rep = wc::LinearRep::parse(read_file(path));
  wc::LinearRep min = wc::minimize(rep);
  std::cout << "dimension " << rep.dim << " -> " << min.dim << "\n";
  if (!out_path.empty()) write_file(out_path, min.serialize());
  return kExitOk;
}

int cmd_linrep_semigroup(const std::string& path, std::size_t max_states, bool no_minimize,
                         const std::string& out_path) {
  wc::LinearRep rep = wc::LinearRep::parse(read_file(path));
  if (!no_minimize) rep = wc::minimize(rep);
  wc::SemigroupResult result = wc::semigroup_trick(rep, max_states);
  if (!result.dfao) {
    std::cout << "did not halt within " << max_states << " states\n";
    return kExitOk;
  }
  std::cout << "halted with " << result.dfao->size() << " states\n";
  if (!out_path.empty()) write_file(out_path, result.dfao->serialize());
  return kExitOk;
}

// ---- powers / balance / valuation -----------------------------------------

struct PowersFindArgs {
  WordOptions word;
  std::string kind = "additive";
  unsigned k = 2;
  std::size_t order = 1;
  std::size_t window = 100'000;
  std::string valuation;
};

int cmd_powers_find(const PowersFindArgs& args) {
  wc::PrefixBuffer buf = make_buffer(args.word);
  wc::Valuation val = make_valuation(args.valuation, buf);
  wc::ComplexityKind kind = wc::parse_complexity_kind(args.kind);
  auto witness = wc::find_power(buf, kind, args.k, args.order, args.window, &val);
  if (witness) {
    std::cout << "found " << args.kind << " " << args.k << "-power of order " << args.order
              << " at position " << witness->position << "\n";
  } else {
    std::cout << "not found up to window " << args.window << "\n";
  }
  return kExitOk;
}

struct PowersOrdersArgs {
  WordOptions word;
  std::string kind = "abelian";
  unsigned k = 2;
  std::size_t order_min = 1;
  std::size_t order_max = 100;
  std::size_t window = 100'000;
  std::string valuation;
  std::string csv_path;
};

int cmd_powers_orders(const PowersOrdersArgs& args) {
  wc::PrefixBuffer buf = make_buffer(args.word);
  wc::Valuation val = make_valuation(args.valuation, buf);
  wc::ComplexityKind kind = wc::parse_complexity_kind(args.kind);
  std::string csv = "order,found,position\n";
  for (std::size_t order = args.order_min; order <= args.order_max; ++order) {
    auto witness = wc::find_power(buf, kind, args.k, order, args.window, &val);
    std::cout << "order " << order << ": "
              << (witness ? "found at " + std::to_string(witness->position)
                          : "not found up to window " + std::to_string(args.window))
              << "\n";
    csv += std::to_string(order) + "," + (witness ? "1" : "0") + "," +
           (witness ? std::to_string(witness->position) : "") + "\n";
  }
  if (!args.csv_path.empty()) write_file(args.csv_path, csv);
  return kExitOk;
}

int cmd_powers_fib(std::uint64_t k, std::uint64_t n_max) {
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    std::cout << "order " << n << ": "
              << (wc::fibonacci_abelian_criterion(k, n) ? "abelian power" : "none") << "\n";
  }
  return kExitOk;
}

struct BalanceArgs {
  WordOptions word;
  std::size_t n_max = 200;
  std::size_t window = 100'000;
};

int cmd_balance(const BalanceArgs& args) {
  wc::PrefixBuffer buf = make_buffer(args.word);
  wc::BalanceReport report = wc::balance_report(buf, args.n_max, args.window);
  std::cout << "C = " << report.c_observed << " over window lengths up to "
            << report.n_scanned << "\n";
  if (report.witness) {
    std::cout << "witness: letter " << report.witness->letter << ", length "
              << report.witness->length << ", positions " << report.witness->pos_a
              << " and " << report.witness->pos_b << "\n";
  }
  return kExitOk;
}

int cmd_valuation(std::size_t k, std::uint64_t balance) {
  std::vector<wc::Letter> alphabet = wc::equalizing_valuation(k, balance);
  std::cout << wc::format_word(alphabet) << "\n";
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> checks;
  std::string data_dir;
  std::string json_path;
  bool list = false;
};

int cmd_verify(const VerifyArgs& args) {
  if (args.list) {
    for (const std::string& name : wc::verify_check_names()) std::cout << name << "\n";
    return kExitOk;
  }
  wc::VerifyOptions opt;
  opt.data_dir = args.data_dir.empty() ? wc::default_data_dir()
                                       : std::filesystem::path(args.data_dir);
  std::vector<wc::CheckResult> results = wc::run_verify(args.checks, opt);

  std::string json_lines;
  bool all_pass = true;
  for (const auto& r : results) {
    std::ostringstream line;
    line << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << std::fixed
         << std::setprecision(2) << r.seconds << "s, budget " << r.budget_seconds << "s)";
    if (!r.pass) line << " " << r.detail;
    std::cout << line.str() << "\n";
    all_pass &= r.pass;
    nlohmann::json j{{"name", r.name},
                     {"pass", r.pass},
                     {"seconds", r.seconds},
                     {"budget_seconds", r.budget_seconds},
                     {"detail", r.detail}};
    json_lines += j.dump() + "\n";
  }
  if (!args.json_path.empty()) write_file(args.json_path, json_lines);
  return all_pass ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complexity of morphic and automatic words"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "emit a prefix of a morphic word");
  add_word_options(generate, gen.word);
  generate->add_option("-n,--length", gen.length, "prefix length")->required();
  generate->add_option("-o,--out", gen.out_path, "output file (default: stdout)");

  ProfileArgs prof;
  CLI::App* profile = app.add_subcommand("profile", "complexity profiles of a morphic word");
  add_word_options(profile, prof.word);
  profile->add_option("-n,--nmax", prof.n_max, "largest factor length")->required();
  profile->add_option("--kinds", prof.kinds,
                      "comma separated kinds: factor, abelian, additive")
      ->delimiter(',');
  profile->add_option("--valuation", prof.valuation, "letter weights, e.g. \"0:0 1:1 2:3\"");
  profile->add_option("--csv", prof.csv_prefix, "write <prefix>_<kind>.csv files");
  profile->add_option("--svg", prof.svg_path, "write a step plot");
  profile->add_flag("--diff", prof.diff, "also emit the abelian - additive difference");
  profile->add_option("--max-preperiod", prof.max_preperiod, "period detection bound");
  profile->add_option("--max-period", prof.max_period, "period detection bound");

  CLI::App* dfao = app.add_subcommand("dfao", "evaluate and compare automata");
  dfao->require_subcommand(1);
  std::string dfao_path, dfao_digits, dfao_numsys = "base:2";
  std::int64_t dfao_n = -1;
  CLI::App* dfao_run = dfao->add_subcommand("run", "run an automaton");
  dfao_run->add_option("-f,--file", dfao_path, "automaton file")->required();
  dfao_run->add_option("--digits", dfao_digits, "explicit digit string, msd first");
  dfao_run->add_option("-n", dfao_n, "index, represented in --numsys");
  dfao_run->add_option("--numsys", dfao_numsys, "base:K | fib | trib | rec:...");
  DfaoCompareArgs dfc;
  CLI::App* dfao_cmp = dfao->add_subcommand("compare", "compare against a brute-force oracle");
  dfao_cmp->add_option("-f,--file", dfc.path, "automaton file")->required();
  dfao_cmp->add_option("--numsys", dfc.numsys, "numeration system");
  add_word_options(dfao_cmp, dfc.word);
  dfao_cmp->add_option("--kind", dfc.kind, "factor | abelian | additive");
  dfao_cmp->add_option("--valuation", dfc.valuation, "letter weights");
  dfao_cmp->add_option("--nmax", dfc.n_max, "compare indices 0..nmax");

  CLI::App* linrep = app.add_subcommand("linrep", "linear representations");
  linrep->require_subcommand(1);
  std::string lr_path, lr_digits, lr_numsys = "base:2", lr_out;
  std::int64_t lr_n = -1;
  std::size_t lr_max_states = 10'000;
  bool lr_no_minimize = false;
  CLI::App* lr_eval = linrep->add_subcommand("eval", "evaluate at one index");
  lr_eval->add_option("-f,--file", lr_path, "linear representation file")->required();
  lr_eval->add_option("--digits", lr_digits, "explicit digit string, msd first");
  lr_eval->add_option("-n", lr_n, "index, represented in --numsys");
  lr_eval->add_option("--numsys", lr_numsys, "numeration system");
  CLI::App* lr_min = linrep->add_subcommand("minimize", "exact minimization");
  lr_min->add_option("-f,--file", lr_path, "linear representation file")->required();
  lr_min->add_option("-o,--out", lr_out, "write the minimized representation");
  CLI::App* lr_semi = linrep->add_subcommand("semigroup", "breadth-first vector closure");
  lr_semi->add_option("-f,--file", lr_path, "linear representation file")->required();
  lr_semi->add_option("--max-states", lr_max_states, "state budget");
  lr_semi->add_flag("--no-minimize", lr_no_minimize, "skip minimization first");
  lr_semi->add_option("-o,--out", lr_out, "write the automaton");

  CLI::App* powers = app.add_subcommand("powers", "abelian and additive power search");
  powers->require_subcommand(1);
  PowersFindArgs pf;
  CLI::App* p_find = powers->add_subcommand("find", "search one order");
  add_word_options(p_find, pf.word);
  p_find->add_option("--kind", pf.kind, "abelian | additive");
  p_find->add_option("-k", pf.k, "power exponent")->required();
  p_find->add_option("--order", pf.order, "block length")->required();
  p_find->add_option("--window", pf.window, "prefix length searched");
  p_find->add_option("--valuation", pf.valuation, "letter weights");
  PowersOrdersArgs po;
  CLI::App* p_orders = powers->add_subcommand("orders", "scan a range of orders");
  add_word_options(p_orders, po.word);
  p_orders->add_option("--kind", po.kind, "abelian | additive");
  p_orders->add_option("-k", po.k, "power exponent")->required();
  p_orders->add_option("--from", po.order_min, "first order");
  p_orders->add_option("--to", po.order_max, "last order")->required();
  p_orders->add_option("--window", po.window, "prefix length searched");
  p_orders->add_option("--valuation", po.valuation, "letter weights");
  p_orders->add_option("--csv", po.csv_path, "write order,found,position rows");
  std::uint64_t fib_k = 2, fib_nmax = 40;
  CLI::App* p_fib = powers->add_subcommand("fib-criterion",
                                           "abelian power orders of the Fibonacci word");
  p_fib->add_option("-k", fib_k, "power exponent")->required();
  p_fib->add_option("--nmax", fib_nmax, "largest order");

  BalanceArgs bal;
  CLI::App* balance = app.add_subcommand("balance", "letter-count balance of a word");
  add_word_options(balance, bal.word);
  balance->add_option("--nmax", bal.n_max, "largest window length");
  balance->add_option("--window", bal.window, "prefix length scanned");

  std::size_t val_k = 3;
  std::uint64_t val_c = 1;
  CLI::App* valuation = app.add_subcommand(
      "valuation", "alphabet equalizing additive and abelian complexity");
  valuation->add_option("-k", val_k, "alphabet size")->required();
  valuation->add_option("-C", val_c, "balance constant")->required();

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "run the reproduction suite");
  verify->add_option("checks", ver.checks, "check names (default: all)");
  verify->add_option("--data", ver.data_dir, "fixture directory");
  verify->add_option("--json", ver.json_path, "write a JSON-lines report");
  verify->add_flag("--list", ver.list, "list available checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*profile) return cmd_profile(prof);
    if (*dfao_run) return cmd_dfao_run(dfao_path, dfao_digits, dfao_numsys, dfao_n);
    if (*dfao_cmp) return cmd_dfao_compare(dfc);
    if (*lr_eval) return cmd_linrep_eval(lr_path, lr_digits, lr_numsys, lr_n);
    if (*lr_min) return cmd_linrep_minimize(lr_path, lr_out);
    if (*lr_semi) return cmd_linrep_semigroup(lr_path, lr_max_states, lr_no_minimize, lr_out);
    if (*p_find) return cmd_powers_find(pf);
    if (*p_orders) return cmd_powers_orders(po);
    if (*p_fib) return cmd_powers_fib(fib_k, fib_nmax);
    if (*balance) return cmd_balance(bal);
    if (*valuation) return cmd_valuation(val_k, val_c);
    if (*verify) return cmd_verify(ver);
  } catch (const wc::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const wc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
