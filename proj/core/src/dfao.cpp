#include "wordcomp/dfao.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace wordcomp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_ll(std::string_view tok, const char* what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Dfao Dfao::parse(std::string_view text) {
  Dfao d;
  d.digit_bound = 0;
  bool saw_digits = false;
  std::string initial_name;
  std::map<std::string, int, std::less<>> index;
  struct Edge {
    std::string from, to;
    unsigned digit;
  };
  std::vector<Edge> edges;

  auto state_index = [&](std::string_view name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(d.names.size());
    index.emplace(std::string(name), id);
    d.names.emplace_back(name);
    d.outputs.push_back(0);
    return id;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::vector<bool> has_output;
  while (std::getline(in, raw)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("digits:")) {
      std::string_view body = trim(line.substr(7));
      std::size_t dots = body.find("..");
      if (!body.starts_with("0") || dots == std::string_view::npos) {
        throw ParseError("digits line must read 'digits: 0..D'");
      }
      d.digit_bound = static_cast<unsigned>(parse_ll(trim(body.substr(dots + 2)), "digit bound"));
      saw_digits = true;
      continue;
    }
    if (line.starts_with("initial:")) {
      initial_name = std::string(trim(line.substr(8)));
      continue;
    }
    std::size_t arrow = line.find("--");
    if (arrow != std::string_view::npos) {
      std::size_t arrow2 = line.find("-->", arrow + 2);
      if (arrow2 == std::string_view::npos) {
        throw ParseError("bad transition line '" + std::string(line) + "'");
      }
      Edge e;
      e.from = std::string(trim(line.substr(0, arrow)));
      e.digit = static_cast<unsigned>(
          parse_ll(trim(line.substr(arrow + 2, arrow2 - arrow - 2)), "digit"));
      e.to = std::string(trim(line.substr(arrow2 + 3)));
      if (e.from.empty() || e.to.empty()) {
        throw ParseError("bad transition line '" + std::string(line) + "'");
      }
      edges.push_back(std::move(e));
      continue;
    }
    // state declaration: "name output"
    std::size_t space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw ParseError("bad state line '" + std::string(line) + "'");
    }
    std::string_view name = trim(line.substr(0, space));
    long long output = parse_ll(trim(line.substr(space + 1)), "output");
    int id = state_index(name);
    has_output.resize(d.names.size(), false);
    if (has_output[id]) throw ParseError("duplicate state '" + std::string(name) + "'");
    has_output[id] = true;
    d.outputs[id] = output;
  }

  if (!saw_digits) throw ParseError("missing 'digits:' header");
  if (initial_name.empty()) throw ParseError("missing 'initial:' header");
  if (d.names.empty()) throw ParseError("automaton has no states");

  d.next.assign(d.names.size(), std::vector<int>(d.digit_bound + 1, -1));
  for (const Edge& e : edges) {
    auto from = index.find(e.from);
    auto to = index.find(e.to);
    if (from == index.end() || to == index.end()) {
      throw ParseError("transition references undeclared state '" +
                       (from == index.end() ? e.from : e.to) + "'");
    }
    if (e.digit > d.digit_bound) {
      throw ParseError("transition digit " + std::to_string(e.digit) + " out of range");
    }
    if (d.next[from->second][e.digit] != -1) {
      throw ParseError("duplicate transition from '" + e.from + "' on digit " +
                       std::to_string(e.digit));
    }
    d.next[from->second][e.digit] = to->second;
  }
  for (std::size_t q = 0; q < d.names.size(); ++q) {
    for (unsigned digit = 0; digit <= d.digit_bound; ++digit) {
      if (d.next[q][digit] == -1) {
        throw ParseError("state '" + d.names[q] + "' lacks a transition on digit " +
                         std::to_string(digit));
      }
    }
  }
  auto init = index.find(initial_name);
  if (init == index.end()) throw ParseError("initial state '" + initial_name + "' undeclared");
  d.initial = init->second;
  return d;
}

std::string Dfao::serialize() const {
  std::string out;
  out += "digits: 0.." + std::to_string(digit_bound) + "\n";
  out += "initial: " + names[initial] + "\n";
  for (std::size_t q = 0; q < names.size(); ++q) {
    out += names[q] + " " + std::to_string(outputs[q]) + "\n";
  }
  for (std::size_t q = 0; q < names.size(); ++q) {
    for (unsigned digit = 0; digit <= digit_bound; ++digit) {
      out += names[q] + " --" + std::to_string(digit) + "--> " + names[next[q][digit]] + "\n";
    }
  }
  return out;
}

long long Dfao::run(std::span<const unsigned> digits) const {
  int q = initial;
  for (unsigned digit : digits) {
    if (digit > digit_bound) {
      throw DigitOutOfRangeError("digit " + std::to_string(digit) + " exceeds bound " +
                                 std::to_string(digit_bound));
    }
    q = next[q][digit];
  }
  return outputs[q];
}

long long sequence_term(const Dfao& d, const PositionalSystem& sys, std::uint64_t n) {
  Digits digits = sys.rep(n);
  return d.run(digits);
}

std::optional<std::uint64_t> compare_with_oracle(
    const Dfao& d, const PositionalSystem& sys,
    const std::function<long long(std::uint64_t)>& oracle, std::uint64_t n_max) {
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (sequence_term(d, sys, n) != oracle(n)) return n;
  }
  return std::nullopt;
}

bool leading_zero_invariant(const Dfao& d) {
  return d.next[d.initial][0] == d.initial;
}

}  // namespace wordcomp
