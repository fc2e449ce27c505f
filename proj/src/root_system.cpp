#include "tck/root_system.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <functional>
#include <numeric>

#include "tck/error.hpp"

namespace tck {

RootSystemType RootSystemType::parse(const std::string& text) {
  if (text.size() < 2) throw DomainError("cannot parse root system type '" + text + "'");
  RootSystemType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::string digits = text.substr(1);
  if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3)
    throw DomainError("cannot parse root system type '" + text + "'");
  t.rank = std::stoi(digits);
  if (!is_admissible(t)) throw DomainError("inadmissible root system type '" + text + "'");
  return t;
}

std::string RootSystemType::name() const { return std::string(1, family) + std::to_string(rank); }

bool is_admissible(const RootSystemType& t) {
  switch (t.family) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 2;
    case 'C': return t.rank >= 3;
    case 'D': return t.rank >= 4;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
  }
}

namespace {

// Squared simple-root lengths and Dynkin edges (0-based), Bourbaki labels.
void diagram(const RootSystemType& t, std::vector<int>& lengths, std::vector<std::pair<int, int>>& edges) {
  int l = t.rank;
  lengths.assign(static_cast<std::size_t>(l), 2);
  edges.clear();
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case 'A': chain(l); break;
    case 'B':
      chain(l);
      for (int i = 0; i + 1 < l; ++i) lengths[i] = 4;
      break;
    case 'C':
      chain(l);
      lengths[l - 1] = 4;
      break;
    case 'D':
      chain(l - 1);
      edges.emplace_back(l - 3, l - 1);
      break;
    case 'E':
      edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'F':
      chain(4);
      lengths = {4, 4, 2, 2};
      break;
    case 'G':
      chain(2);
      lengths = {2, 6};
      break;
    default: throw DomainError("unknown root system family");
  }
}

int root_height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

RootSystem RootSystem::build(const RootSystemType& t) {
  if (!is_admissible(t)) throw DomainError("inadmissible root system type " + t.name());
  RootSystem rs;
  rs.type_ = t;
  std::vector<std::pair<int, int>> edges;
  diagram(t, rs.lengths_, edges);
  std::size_t l = static_cast<std::size_t>(t.rank);
  rs.gram_.assign(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i) rs.gram_[i][i] = rs.lengths_[i];
  for (auto [a, b] : edges) {
    int v = -std::max(rs.lengths_[a], rs.lengths_[b]) / 2;
    rs.gram_[a][b] = rs.gram_[b][a] = v;
  }
  rs.cartan_.assign(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) rs.cartan_[i][j] = 2 * rs.gram_[i][j] / rs.gram_[j][j];

  std::map<Root, bool> seen;
  std::deque<Root> queue;
  for (std::size_t i = 0; i < l; ++i) {
    Root r(l, 0);
    r[i] = 1;
    seen[r] = true;
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < l; ++i) {
      Root s = rs.reflect(r, static_cast<int>(i));
      if (seen.emplace(s, true).second) queue.push_back(s);
    }
  }
  std::vector<Root> positive;
  for (const auto& [r, unused] : seen)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positive.push_back(r);
  std::sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
    int ha = root_height(a), hb = root_height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (positive.size() * 2 != seen.size()) throw ConsistencyError("root closure is not symmetric");
  rs.roots_ = positive;
  for (const auto& r : positive) {
    Root n = r;
    for (auto& c : n) c = -c;
    rs.roots_.push_back(n);
  }
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_[rs.roots_[i]] = i;
  return rs;
}

std::size_t RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) throw DomainError("vector is not a root of " + type_.name());
  return it->second;
}

long RootSystem::sum_index(std::size_t a, std::size_t b) const {
  const Root& x = roots_.at(a);
  const Root& y = roots_.at(b);
  Root s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  auto it = index_.find(s);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::size_t RootSystem::negative_of(std::size_t index) const {
  std::size_t p = positive_count();
  if (index >= roots_.size()) throw DomainError("root index out of range");
  return index < p ? index + p : index - p;
}

int RootSystem::height(std::size_t index) const { return root_height(roots_.at(index)); }

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * b[j] * gram_[i][j];
  }
  return s;
}

int RootSystem::cartan_integer(const Root& beta, const Root& alpha) const {
  if (!contains(beta) || !contains(alpha)) throw DomainError("cartan_integer requires roots");
  return 2 * inner(beta, alpha) / inner(alpha, alpha);
}

int RootSystem::cartan_integer(std::size_t beta, std::size_t alpha) const {
  const Root& a = roots_.at(alpha);
  return 2 * inner(roots_.at(beta), a) / inner(a, a);
}

std::vector<int> RootSystem::coroot(std::size_t alpha) const {
  const Root& a = roots_.at(alpha);
  int len = inner(a, a);
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * lengths_[i] / len;
  return c;
}

Root RootSystem::reflect(const Root& beta, int simple) const {
  std::size_t i = static_cast<std::size_t>(simple);
  int pairing = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pairing += beta[j] * cartan_[j][i];
  Root r = beta;
  r[i] -= pairing;
  return r;
}

int cartan_integer(const RootSystem& rs, const Root& beta, const Root& alpha) {
  return rs.cartan_integer(beta, alpha);
}

// ----------------------------------------------------------------------------

DiagramSymmetry DiagramSymmetry::identity(int rank) {
  DiagramSymmetry d;
  d.perm.resize(static_cast<std::size_t>(rank));
  std::iota(d.perm.begin(), d.perm.end(), 0);
  return d;
}

bool DiagramSymmetry::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

int DiagramSymmetry::order() const {
  DiagramSymmetry p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p.compose(*this);
    ++k;
  }
  return k;
}

DiagramSymmetry DiagramSymmetry::compose(const DiagramSymmetry& after) const {
  DiagramSymmetry d;
  d.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) d.perm[i] = after.perm[static_cast<std::size_t>(perm[i])];
  return d;
}

DiagramSymmetry DiagramSymmetry::power(int n) const {
  DiagramSymmetry out = identity(static_cast<int>(perm.size()));
  int ord = order();
  n = ((n % ord) + ord) % ord;
  for (int i = 0; i < n; ++i) out = out.compose(*this);
  return out;
}

std::vector<DiagramSymmetry> diagram_symmetries(const RootSystem& rs) {
  const auto& c = rs.cartan();
  std::size_t l = c.size();
  std::vector<DiagramSymmetry> out;
  std::vector<int> perm(l, -1);
  std::vector<bool> used(l, false);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == l) {
      out.push_back(DiagramSymmetry{perm});
      return;
    }
    for (std::size_t target = 0; target < l; ++target) {
      if (used[target]) continue;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        std::size_t pj = j == i ? target : static_cast<std::size_t>(perm[j]);
        ok = c[target][pj] == c[i][j] && c[pj][target] == c[j][i];
      }
      if (!ok) continue;
      used[target] = true;
      perm[i] = static_cast<int>(target);
      extend(i + 1);
      used[target] = false;
    }
  };
  extend(0);
  return out;
}

Root extend_symmetry_to_roots(const RootSystem& rs, const DiagramSymmetry& rho, const Root& alpha) {
  if (!rs.contains(alpha)) throw DomainError("extend_symmetry_to_roots requires a root");
  if (rho.perm.size() != alpha.size()) throw DomainError("symmetry rank does not match root system");
  Root out(alpha.size(), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) out[static_cast<std::size_t>(rho.perm[i])] = alpha[i];
  return out;
}

std::size_t extend_symmetry_to_roots(const RootSystem& rs, const DiagramSymmetry& rho, std::size_t alpha) {
  return rs.index_of(extend_symmetry_to_roots(rs, rho, rs.root(alpha)));
}

// ----------------------------------------------------------------------------

int string_down(const RootSystem& rs, std::size_t alpha, std::size_t beta) {
  const Root& a = rs.root(alpha);
  Root b = rs.root(beta);
  int p = 0;
  while (true) {
    for (std::size_t i = 0; i < b.size(); ++i) b[i] -= a[i];
    if (!rs.contains(b)) return p;
    ++p;
  }
}

namespace {

class ConstantSolver {
public:
  explicit ConstantSolver(const RootSystem& rs)
      : rs_(rs), count_(rs.size()), pos_(rs.positive_count()), memo_(pos_ * pos_, INT_MIN) {
    for (std::size_t xi = static_cast<std::size_t>(rs.rank()); xi < pos_; ++xi) {
      for (std::size_t j = 0; j < static_cast<std::size_t>(rs.rank()); ++j) {
        std::size_t rest = diff_index(xi, j);
        if (rest != npos && rs.is_positive(rest)) {
          extraspecial_[xi] = {j, rest};
          break;
        }
      }
      if (!extraspecial_.count(xi)) throw ConsistencyError("positive root without extraspecial pair");
    }
  }

  int n(std::size_t a, std::size_t b) {
    long s = rs_.sum_index(a, b);
    if (s < 0) return 0;
    bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
    if (pa && pb) return npos_pair(a, b);
    if (!pa && !pb) return -npos_pair(rs_.negative_of(a), rs_.negative_of(b));
    std::size_t c = rs_.negative_of(static_cast<std::size_t>(s));
    Rational lc = len(c);
    if (pa) {
      return rs_.is_positive(c) ? scaled(lc / len(b), n(c, a)) : scaled(lc / len(a), n(b, c));
    }
    return rs_.is_positive(c) ? scaled(lc / len(a), n(b, c)) : scaled(lc / len(b), n(c, a));
  }

  const std::map<std::size_t, std::pair<std::size_t, std::size_t>>& extraspecial() const { return extraspecial_; }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t diff_index(std::size_t a, std::size_t b) const {
    long s = rs_.sum_index(a, rs_.negative_of(b));
    return s < 0 ? npos : static_cast<std::size_t>(s);
  }

  Rational len(std::size_t r) const { return Rational(rs_.length2(rs_.root(r))); }

  static int scaled(const Rational& f, int v) {
    Rational r = f * Rational(v);
    if (!r.is_integer()) throw ConsistencyError("non-integral structure constant");
    return static_cast<int>(r.numerator().get_si());
  }

  int npos_pair(std::size_t a, std::size_t b) {
    if (a > b) return -npos_pair(b, a);
    int& slot = memo_[a * pos_ + b];
    if (slot != INT_MIN) return slot;
    std::size_t xi = static_cast<std::size_t>(rs_.sum_index(a, b));
    auto [alpha, beta] = extraspecial_.at(xi);
    int value;
    if (a == alpha && b == beta) {
      value = string_down(rs_, alpha, beta) + 1;
    } else {
      std::size_t gamma = a, delta = b;
      std::size_t ng = rs_.negative_of(gamma), nd = rs_.negative_of(delta);
      Rational acc(0);
      std::size_t bg = diff_index(beta, gamma);
      if (bg != npos) acc += Rational(n(beta, ng) * n(alpha, nd)) / len(bg);
      std::size_t ag = diff_index(alpha, gamma);
      if (ag != npos) acc += Rational(n(ng, alpha) * n(beta, nd)) / len(ag);
      Rational v = len(xi) / Rational(n(alpha, beta)) * acc;
      if (!v.is_integer()) throw ConsistencyError("non-integral structure constant");
      value = static_cast<int>(v.numerator().get_si());
    }
    memo_[a * pos_ + b] = value;
    return value;
  }

  const RootSystem& rs_;
  std::size_t count_;
  std::size_t pos_;
  std::vector<int> memo_;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> extraspecial_;
};

}  // namespace

ChevalleyBasisData ChevalleyBasisData::build(const RootSystem& rs) {
  ConstantSolver solver(rs);
  ChevalleyBasisData data;
  data.count_ = rs.size();
  data.table_.assign(data.count_ * data.count_, 0);
  for (std::size_t a = 0; a < data.count_; ++a)
    for (std::size_t b = 0; b < data.count_; ++b) data.table_[a * data.count_ + b] = solver.n(a, b);
  data.extraspecial_ = solver.extraspecial();
  for (std::size_t a = 0; a < data.count_; ++a) {
    for (std::size_t b = 0; b < data.count_; ++b) {
      int v = data.n(a, b);
      if (rs.sum_index(a, b) < 0) continue;
      if (std::abs(v) != string_down(rs, a, b) + 1 || data.n(b, a) != -v ||
          data.n(rs.negative_of(a), rs.negative_of(b)) != -v)
        throw ConsistencyError("structure constants violate the Chevalley basis relations");
    }
  }
  return data;
}

std::size_t ChevalleyBasisData::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](int v) { return v != 0; }));
}

ChevalleyBasisData structure_constants(const RootSystem& rs) { return ChevalleyBasisData::build(rs); }

}  // namespace tck
