#include "wordcomp/linrep.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace wordcomp {

namespace {

IntVec row_times_matrix(const IntVec& v, const IntMat& m) {
  std::size_t dim = m.size();
  IntVec out(m.empty() ? 0 : m[0].size(), 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Row-echelon integer basis (Hermite form) of a sublattice of Z^d.
class Lattice {
 public:
  explicit Lattice(std::size_t width) : width_(width) {}

  std::size_t rank() const { return rows_.size(); }
  const std::vector<IntVec>& basis() const { return rows_; }

  // Adds v to the lattice; false when v was already a member.
  bool insert(const IntVec& v) {
    IntVec r = v;
    reduce(r);
    if (is_zero(r)) return false;
    rows_.push_back(std::move(r));
    rebuild();
    return true;
  }

  // Integer coordinates of a member vector in the basis rows.
  IntVec coordinates(const IntVec& v) const {
    IntVec coords(rows_.size(), 0);
    IntVec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Int& p = rows_[i][pivot_[i]];
      Int q = r[pivot_[i]] / p;
      if (q * p != r[pivot_[i]]) {
        throw Error("vector is not in the lattice");
      }
      coords[i] = q;
      if (q != 0) {
        for (std::size_t j = 0; j < width_; ++j) r[j] -= q * rows_[i][j];
      }
    }
    if (!is_zero(r)) throw Error("vector is not in the lattice");
    return coords;
  }

 private:
  void reduce(IntVec& r) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Int& p = rows_[i][pivot_[i]];
      Int q = floor_div(r[pivot_[i]], p);
      if (q != 0) {
        for (std::size_t j = 0; j < width_; ++j) r[j] -= q * rows_[i][j];
      }
    }
  }

  // Re-echelonize all rows (Euclidean elimination per column, then full
  // Hermite reduction above the pivots).
  void rebuild() {
    std::vector<IntVec> m = std::move(rows_);
    rows_.clear();
    pivot_.clear();
    std::size_t r = 0;
    for (std::size_t col = 0; col < width_ && r < m.size(); ++col) {
      while (true) {
        std::size_t best = m.size();
        for (std::size_t i = r; i < m.size(); ++i) {
          if (m[i][col] == 0) continue;
          if (best == m.size() ||
              abs(m[i][col]) < abs(m[best][col])) {
            best = i;
          }
        }
        if (best == m.size()) break;  // column clear below r
        std::swap(m[r], m[best]);
        bool cleared = true;
        for (std::size_t i = r + 1; i < m.size(); ++i) {
          if (m[i][col] == 0) continue;
          Int q = m[i][col] / m[r][col];  // truncated; leaves small remainder
          if (q != 0) {
            for (std::size_t j = 0; j < width_; ++j) m[i][j] -= q * m[r][j];
          }
          if (m[i][col] != 0) cleared = false;
        }
        if (cleared) {
          if (m[r][col] < 0) {
            for (std::size_t j = 0; j < width_; ++j) m[r][j] = -m[r][j];
          }
          break;
        }
      }
      if (r < m.size() && m[r][col] != 0) {
        ++r;
      }
    }
    m.resize(r);
    // full reduction above pivots
    std::vector<std::size_t> pivots(r);
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t c = 0;
      while (m[i][c] == 0) ++c;
      pivots[i] = c;
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t above = 0; above < i; ++above) {
        Int q = floor_div(m[above][pivots[i]], m[i][pivots[i]]);
        if (q != 0) {
          for (std::size_t j = 0; j < width_; ++j) m[above][j] -= q * m[i][j];
        }
      }
    }
    rows_ = std::move(m);
    pivot_ = std::move(pivots);
  }

  std::size_t width_;
  std::vector<IntVec> rows_;
  std::vector<std::size_t> pivot_;
};

LinearRep zero_rep(std::size_t digit_count) {
  LinearRep out;
  out.dim = 0;
  out.mu.assign(digit_count, IntMat{});
  return out;
}

// Reduce the reachability side: replace the state space by the module
// generated by lambda under the mu action, with an integral basis.
LinearRep left_reduce(const LinearRep& r) {
  std::size_t digit_count = r.mu.size();
  if (r.dim == 0 || is_zero(r.lambda)) return zero_rep(digit_count);

  Lattice lat(r.dim);
  lat.insert(r.lambda);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<IntVec> snapshot = lat.basis();
    for (const IntVec& h : snapshot) {
      for (std::size_t d = 0; d < digit_count; ++d) {
        if (lat.insert(row_times_matrix(h, r.mu[d]))) changed = true;
      }
    }
  }

  const auto& basis = lat.basis();
  std::size_t m = basis.size();
  LinearRep out;
  out.dim = m;
  out.lambda = lat.coordinates(r.lambda);
  out.mu.assign(digit_count, IntMat(m, IntVec(m, 0)));
  for (std::size_t d = 0; d < digit_count; ++d) {
    for (std::size_t i = 0; i < m; ++i) {
      out.mu[d][i] = lat.coordinates(row_times_matrix(basis[i], r.mu[d]));
    }
  }
  out.gamma.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.gamma[i] = dot(basis[i], r.gamma);
  return out;
}

LinearRep transpose_rep(const LinearRep& r) {
  LinearRep out;
  out.dim = r.dim;
  out.lambda = r.gamma;
  out.gamma = r.lambda;
  out.mu.reserve(r.mu.size());
  for (const IntMat& m : r.mu) {
    IntMat t(r.dim, IntVec(r.dim, 0));
    for (std::size_t i = 0; i < r.dim; ++i) {
      for (std::size_t j = 0; j < r.dim; ++j) t[j][i] = m[i][j];
    }
    out.mu.push_back(std::move(t));
  }
  return out;
}

std::string encode_vector(const IntVec& v) {
  std::string key;
  for (const Int& x : v) {
    key += x.str();
    key.push_back(',');
  }
  return key;
}

}  // namespace

void LinearRep::validate() const {
  if (lambda.size() != dim || gamma.size() != dim) {
    throw ParseError("lambda/gamma size does not match dim");
  }
  if (mu.empty()) throw ParseError("at least one digit matrix required");
  for (const IntMat& m : mu) {
    if (m.size() != dim) throw ParseError("mu matrix is not dim x dim");
    for (const IntVec& row : m) {
      if (row.size() != dim) throw ParseError("mu matrix is not dim x dim");
    }
  }
}

Int evaluate(const LinearRep& r, std::span<const unsigned> digits) {
  if (r.dim == 0) return 0;
  IntVec row = r.lambda;
  for (unsigned d : digits) {
    if (d >= r.mu.size()) {
      throw DigitOutOfRangeError("digit " + std::to_string(d) + " exceeds bound " +
                                 std::to_string(r.mu.size() - 1));
    }
    row = row_times_matrix(row, r.mu[d]);
  }
  return dot(row, r.gamma);
}

LinearRep minimize(const LinearRep& r) {
  r.validate();
  LinearRep left = left_reduce(r);
  if (left.dim == 0) return left;
  return transpose_rep(left_reduce(transpose_rep(left)));
}

std::size_t rank(const LinearRep& r) { return minimize(r).dim; }

SemigroupResult semigroup_trick(const LinearRep& r, std::size_t max_states) {
  r.validate();
  if (max_states == 0) throw OutOfRangeError("max_states must be at least 1");
  SemigroupResult result;

  std::vector<IntVec> states;
  std::unordered_map<std::string, int> seen;
  std::vector<std::vector<int>> next;
  std::deque<int> queue;

  auto intern = [&](IntVec v) -> int {
    std::string key = encode_vector(v);
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
    int id = static_cast<int>(states.size());
    states.push_back(std::move(v));
    next.emplace_back(r.mu.size(), -1);
    seen.emplace(std::move(key), id);
    queue.push_back(id);
    return id;
  };

  intern(r.lambda);
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (std::size_t d = 0; d < r.mu.size(); ++d) {
      IntVec v = row_times_matrix(states[s], r.mu[d]);
      int t = intern(std::move(v));
      next[s][d] = t;
      if (states.size() > max_states) {
        result.states_generated = states.size();
        return result;  // did not halt within budget
      }
    }
  }

  Dfao dfao;
  dfao.digit_bound = r.digit_bound();
  dfao.initial = 0;
  dfao.next = std::move(next);
  for (std::size_t i = 0; i < states.size(); ++i) {
    dfao.names.push_back("q" + std::to_string(i));
    Int out = dot(states[i], r.gamma);
    if (out > std::numeric_limits<long long>::max() ||
        out < std::numeric_limits<long long>::min()) {
      throw OverflowError("state output does not fit a machine integer");
    }
    dfao.outputs.push_back(out.convert_to<long long>());
  }
  result.states_generated = states.size();
  result.dfao = std::move(dfao);
  return result;
}

LinearRep LinearRep::parse(std::string_view text) {
  LinearRep r;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::optional<std::size_t> pending_mu;
  IntMat current;
  bool saw_dim = false;

  auto parse_row = [](std::string_view line) {
    IntVec row;
    std::istringstream ls{std::string(line)};
    std::string tok;
    while (ls >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::exception&) {
        throw ParseError("bad integer '" + tok + "'");
      }
    }
    return row;
  };
  auto parse_size = [](std::string_view tok) -> std::size_t {
    try {
      return std::stoul(std::string(tok));
    } catch (const std::exception&) {
      throw ParseError("bad number '" + std::string(tok) + "'");
    }
  };
  auto flush_mu = [&]() {
    if (!pending_mu) return;
    if (r.mu.size() <= *pending_mu) r.mu.resize(*pending_mu + 1);
    r.mu[*pending_mu] = std::move(current);
    current.clear();
    pending_mu.reset();
  };

  while (std::getline(in, raw)) {
    std::string_view line = raw;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("dim:")) {
      flush_mu();
      r.dim = parse_size(line.substr(4));
      saw_dim = true;
    } else if (line.starts_with("lambda:")) {
      flush_mu();
      r.lambda = parse_row(line.substr(7));
    } else if (line.starts_with("gamma:")) {
      flush_mu();
      r.gamma = parse_row(line.substr(6));
    } else if (line.starts_with("mu ")) {
      flush_mu();
      std::string_view head = line.substr(3);
      if (head.empty() || head.back() != ':') throw ParseError("bad 'mu D:' header");
      pending_mu = parse_size(head.substr(0, head.size() - 1));
    } else {
      if (!pending_mu) throw ParseError("matrix row outside a 'mu D:' block");
      current.push_back(parse_row(line));
    }
  }
  flush_mu();
  if (!saw_dim) throw ParseError("missing 'dim:' line");
  for (const IntMat& m : r.mu) {
    if (m.empty() && r.dim != 0) throw ParseError("missing digit matrix");
  }
  r.validate();
  return r;
}

std::string LinearRep::serialize() const {
  std::string out = "dim: " + std::to_string(dim) + "\n";
  auto row_text = [](const IntVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s.push_back(' ');
      s += v[i].str();
    }
    return s;
  };
  out += "lambda: " + row_text(lambda) + "\n";
  for (std::size_t d = 0; d < mu.size(); ++d) {
    out += "mu " + std::to_string(d) + ":\n";
    for (const IntVec& row : mu[d]) out += row_text(row) + "\n";
  }
  out += "gamma: " + row_text(gamma) + "\n";
  return out;
}

}  // namespace wordcomp
