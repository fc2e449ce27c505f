#include "tck/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>

#include "tck/error.hpp"

namespace tck {

std::size_t CodeHash::operator()(const Code& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : c) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string encoding_name(Encoding e) { return e == Encoding::Perm ? "perm" : "matmod"; }

std::size_t closure_cap() {
  if (const char* env = std::getenv("TCK_CLOSURE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

namespace {

constexpr std::size_t kTableLimit = 2048;

void validate_code(Encoding enc, std::uint32_t param, std::size_t dim, const Code& c) {
  if (enc == Encoding::Perm) {
    if (c.size() != dim) throw DomainError("permutation has wrong degree");
    std::vector<bool> hit(dim, false);
    for (auto v : c) {
      if (v >= dim || hit[v]) throw DomainError("generator is not a permutation");
      hit[v] = true;
    }
  } else {
    if (c.size() != dim * dim) throw DomainError("matrix generator has wrong size");
    for (auto v : c)
      if (v >= param) throw DomainError("matrix entry not reduced modulo the modulus");
  }
}

}  // namespace

Code FiniteGroup::identity_code() const {
  Code id;
  if (encoding_ == Encoding::Perm) {
    id.resize(dimension_);
    std::iota(id.begin(), id.end(), 0u);
  } else {
    id.assign(dimension_ * dimension_, 0);
    for (std::size_t i = 0; i < dimension_; ++i) id[i * dimension_ + i] = 1 % modulus_;
  }
  return id;
}

Code FiniteGroup::multiply_codes(const Code& a, const Code& b) const {
  if (encoding_ == Encoding::Perm) {
    // (a b)(x) = a(b(x))
    Code out(dimension_);
    for (std::size_t x = 0; x < dimension_; ++x) out[x] = a[b[x]];
    return out;
  }
  std::size_t n = dimension_;
  Code out(n * n);
  std::uint64_t m = modulus_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += static_cast<std::uint64_t>(a[i * n + k]) * b[k * n + j] % m;
      out[i * n + j] = static_cast<std::uint32_t>(s % m);
    }
  return out;
}

FiniteGroup FiniteGroup::closure(Encoding encoding, std::uint32_t parameter, std::size_t dimension,
                                 const std::vector<Code>& generators, std::size_t cap) {
  FiniteGroup g;
  g.encoding_ = encoding;
  if (encoding == Encoding::Perm) {
    g.dimension_ = parameter;
  } else {
    if (parameter < 2) throw DomainError("matrix modulus must be at least 2");
    g.modulus_ = parameter;
    g.dimension_ = dimension;
  }
  for (const auto& c : generators) validate_code(encoding, g.modulus_, g.dimension_, c);
  Code id = g.identity_code();
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  g.parent_.push_back(0);
  g.via_.push_back(0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Code next = g.multiply_codes(g.elements_[head], generators[s]);
      if (g.index_.count(next)) continue;
      if (g.elements_.size() >= cap)
        throw ResourceError("closure exceeded the size cap " + std::to_string(cap) + " (partial size " +
                            std::to_string(g.elements_.size()) + ")");
      g.index_.emplace(next, static_cast<std::uint32_t>(g.elements_.size()));
      g.elements_.push_back(std::move(next));
      g.parent_.push_back(static_cast<std::uint32_t>(head));
      g.via_.push_back(static_cast<std::uint32_t>(s));
    }
  }
  for (const auto& c : generators) g.generators_.push_back(g.index_.at(c));

  std::size_t n = g.elements_.size();
  if (n <= kTableLimit) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] = g.index_.at(g.multiply_codes(g.elements_[a], g.elements_[b]));
  }
  // Generator inverses from powers, then inv(p s) = inv(s) inv(p) down the tree.
  std::vector<std::uint32_t> gen_inv;
  for (auto s : g.generators_) {
    std::uint32_t prev = 0, cur = s;
    std::size_t steps = 0;
    while (cur != 0) {
      prev = cur;
      cur = g.mul(cur, s);
      if (++steps > n) throw DomainError("generator is not invertible");
    }
    gen_inv.push_back(s == 0 ? 0 : prev);
  }
  g.inverse_.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) g.inverse_[i] = g.mul(gen_inv[g.via_[i]], g.inverse_[g.parent_[i]]);
  return g;
}

FiniteGroup FiniteGroup::permutations(std::size_t degree, const std::vector<Code>& generators) {
  return closure(Encoding::Perm, static_cast<std::uint32_t>(degree), degree, generators);
}

FiniteGroup FiniteGroup::matrices(std::uint32_t modulus, std::size_t dimension, const std::vector<Code>& generators) {
  return closure(Encoding::MatMod, modulus, dimension, generators);
}

std::uint32_t FiniteGroup::index_of(const Code& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) throw DomainError("element does not belong to the group");
  return it->second;
}

std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(multiply_codes(elements_.at(a), elements_.at(b)));
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  std::uint32_t result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::order_of(std::uint32_t a) const {
  std::size_t k = 1;
  for (std::uint32_t cur = a; cur != 0; cur = mul(cur, a)) ++k;
  return k;
}

// ----------------------------------------------------------------------------

GroupAutomorphism GroupAutomorphism::from_generator_images(const FiniteGroup& g,
                                                           const std::vector<std::uint32_t>& images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size()) throw DomainError("automorphism needs one image per generator");
  for (auto v : images)
    if (v >= g.size()) throw DomainError("generator image is not a group element");
  std::size_t n = g.size();
  std::vector<std::uint32_t> map(n, 0);
  for (std::size_t i = 1; i < n; ++i) map[i] = g.mul(map[g.bfs_parent(i)], images[g.bfs_generator(i)]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < gens.size(); ++s)
      if (map[g.mul(static_cast<std::uint32_t>(x), gens[s])] != g.mul(map[x], images[s]))
        throw DomainError("generator images do not define a homomorphism");
  std::vector<bool> hit(n, false);
  for (auto v : map) {
    if (hit[v]) throw DomainError("generator images do not define a bijection");
    hit[v] = true;
  }
  return GroupAutomorphism(std::move(map));
}

GroupAutomorphism GroupAutomorphism::from_generator_codes(const FiniteGroup& g, const std::vector<Code>& images) {
  std::vector<std::uint32_t> idx;
  for (const auto& c : images) idx.push_back(g.index_of(c));
  return from_generator_images(g, idx);
}

GroupAutomorphism GroupAutomorphism::identity(const FiniteGroup& g) {
  std::vector<std::uint32_t> map(g.size());
  std::iota(map.begin(), map.end(), 0u);
  return GroupAutomorphism(std::move(map));
}

GroupAutomorphism GroupAutomorphism::inner(const FiniteGroup& g, std::uint32_t element) {
  std::vector<std::uint32_t> map(g.size());
  std::uint32_t ginv = g.inv(element);
  for (std::uint32_t x = 0; x < g.size(); ++x) map[x] = g.mul(g.mul(element, x), ginv);
  return GroupAutomorphism(std::move(map));
}

bool GroupAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

GroupAutomorphism GroupAutomorphism::compose(const GroupAutomorphism& first) const {
  if (first.size() != size()) throw DomainError("automorphisms of different groups");
  std::vector<std::uint32_t> map(size());
  for (std::size_t i = 0; i < size(); ++i) map[i] = map_[first.map_[i]];
  return GroupAutomorphism(std::move(map));
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  std::vector<std::uint32_t> map(size());
  for (std::size_t i = 0; i < size(); ++i) map[map_[i]] = static_cast<std::uint32_t>(i);
  return GroupAutomorphism(std::move(map));
}

GroupAutomorphism GroupAutomorphism::power(long k) const {
  GroupAutomorphism base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  std::vector<std::uint32_t> id(size());
  std::iota(id.begin(), id.end(), 0u);
  GroupAutomorphism result(std::move(id));
  while (k > 0) {
    if (k & 1) result = result.compose(base);
    base = base.compose(base);
    k >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> GroupAutomorphism::generator_images(const FiniteGroup& g) const {
  std::vector<std::uint32_t> out;
  for (auto s : g.generators()) out.push_back(map_.at(s));
  return out;
}

// ----------------------------------------------------------------------------

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> in(g.size(), false);
  std::vector<std::uint32_t> members{0};
  in[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (auto s : gens) {
      std::uint32_t next = g.mul(members[head], s);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    bool central = true;
    for (auto s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return z;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<std::uint32_t> commutators;
  std::vector<bool> seen(g.size(), false);
  for (std::uint32_t a = 0; a < g.size(); ++a)
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      std::uint32_t c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  return subgroup_generated(g, commutators);
}

bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  std::vector<bool> in(g.size(), false);
  for (auto x : n) in[x] = true;
  for (auto s : g.generators())
    for (auto x : n)
      if (!in[g.mul(g.mul(s, x), g.inv(s))]) return false;
  return true;
}

bool is_invariant(const GroupAutomorphism& phi, const Subgroup& n) {
  std::vector<bool> in(phi.size(), false);
  for (auto x : n) in[x] = true;
  for (auto x : n)
    if (!in[phi(x)]) return false;
  return true;
}

std::vector<GroupAutomorphism> enumerate_automorphisms(const FiniteGroup& g) {
  const auto& gens = g.generators();
  std::vector<std::size_t> orders(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) orders[x] = g.order_of(x);
  std::vector<std::vector<std::uint32_t>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::uint32_t x = 0; x < g.size(); ++x)
      if (orders[x] == orders[gens[s]]) candidates[s].push_back(x);
  std::vector<GroupAutomorphism> out;
  std::vector<std::uint32_t> images(gens.size());
  std::function<void(std::size_t)> search = [&](std::size_t s) {
    if (s == gens.size()) {
      try {
        out.push_back(GroupAutomorphism::from_generator_images(g, images));
      } catch (const DomainError&) {
      }
      return;
    }
    for (auto c : candidates[s]) {
      images[s] = c;
      search(s + 1);
    }
  };
  search(0);
  return out;
}

// ----------------------------------------------------------------------------

FiniteGroup symmetric_group(std::size_t n) {
  if (n < 1) throw DomainError("symmetric group needs n >= 1");
  if (n == 1) return FiniteGroup::permutations(1, {});
  Code swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0u);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  return FiniteGroup::permutations(n, {swap, cycle});
}

FiniteGroup alternating_group(std::size_t n) {
  if (n < 3) return FiniteGroup::permutations(n, {});
  std::vector<Code> gens;
  for (std::size_t k = 2; k < n; ++k) {
    Code c(n);
    std::iota(c.begin(), c.end(), 0u);
    c[0] = 1;
    c[1] = static_cast<std::uint32_t>(k);
    c[k] = 0;
    gens.push_back(c);
  }
  return FiniteGroup::permutations(n, gens);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw DomainError("dihedral group needs n >= 3");
  Code r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint32_t>((i + 1) % n);
    s[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return FiniteGroup::permutations(n, {r, s});
}

FiniteGroup quaternion_group() {
  // Units 1,i,j,k as 0..3 and their negatives as 4..7; left multiplication.
  static const int table[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
  auto mul = [](int a, int b) {
    int sign = (a >= 4) ^ (b >= 4);
    int r = table[a % 4][b % 4];
    return sign ? (r + 4) % 8 : r;
  };
  Code li(8), lj(8);
  for (int x = 0; x < 8; ++x) {
    li[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(mul(1, x));
    lj[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(mul(2, x));
  }
  return FiniteGroup::permutations(8, {li, lj});
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1) throw DomainError("cyclic group needs n >= 1");
  Code c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
  return FiniteGroup::permutations(n, {c});
}

FiniteGroup special_linear_2_3() { return FiniteGroup::matrices(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}}); }

FiniteGroup heisenberg_group(std::uint32_t m) {
  if (m < 2) throw DomainError("Heisenberg group needs m >= 2");
  return FiniteGroup::matrices(m, 3, {{1, 1, 0, 0, 1, 0, 0, 0, 1}, {1, 0, 0, 0, 1, 1, 0, 0, 1}});
}

FiniteGroup zmod_power(std::uint32_t m, std::size_t n) {
  if (m < 2) throw DomainError("(Z/m)^n needs m >= 2");
  std::size_t d = n + 1;
  std::vector<Code> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Code c(d * d, 0);
    for (std::size_t k = 0; k < d; ++k) c[k * d + k] = 1;
    c[i * d + n] = 1;
    gens.push_back(c);
  }
  return FiniteGroup::matrices(m, d, gens);
}

}  // namespace tck
