#include "tck/twisted.hpp"

#include <algorithm>
#include <numeric>

#include "tck/error.hpp"

namespace tck {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // the smaller index stays root
  }

private:
  std::vector<std::uint32_t> parent_;
};

void check_automorphism(const FiniteGroup& g, const GroupAutomorphism& phi) {
  if (phi.size() != g.size()) throw DomainError("automorphism does not act on this group");
  for (std::uint32_t x = 0; x < g.size(); ++x)
    for (auto s : g.generators())
      if (phi(g.mul(x, s)) != g.mul(phi(x), phi(s))) throw DomainError("map is not an automorphism");
}

TwistedClassPartition partition_from(UnionFind& uf, std::size_t n) {
  TwistedClassPartition p;
  p.block_of.assign(n, 0);
  std::vector<long> block_of_root(n, -1);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t r = uf.find(x);
    if (block_of_root[r] < 0) {
      block_of_root[r] = static_cast<long>(p.blocks.size());
      p.blocks.emplace_back();
    }
    p.block_of[x] = static_cast<std::uint32_t>(block_of_root[r]);
    p.blocks[static_cast<std::size_t>(block_of_root[r])].push_back(x);
  }
  return p;
}

}  // namespace

TwistedClassPartition twisted_classes(const FiniteGroup& g, const GroupAutomorphism& phi) {
  check_automorphism(g, phi);
  UnionFind uf(g.size());
  for (auto z : g.generators()) {
    std::uint32_t right = g.inv(phi(z));
    for (std::uint32_t y = 0; y < g.size(); ++y) uf.unite(y, g.mul(g.mul(z, y), right));
  }
  return partition_from(uf, g.size());
}

std::size_t reidemeister_number(const FiniteGroup& g, const GroupAutomorphism& phi) {
  return twisted_classes(g, phi).count();
}

bool inner_twist_invariance(const FiniteGroup& g, const GroupAutomorphism& phi, std::uint32_t element) {
  if (element >= g.size()) throw DomainError("element does not belong to the group");
  GroupAutomorphism twisted = phi.compose(GroupAutomorphism::inner(g, element));
  return reidemeister_number(g, twisted) == reidemeister_number(g, phi);
}

QuotientResult induced_automorphism(const FiniteGroup& g, const Subgroup& n, const GroupAutomorphism& phi) {
  check_automorphism(g, phi);
  if (n.empty() || n.front() != 0) throw DomainError("N must be a subgroup containing the identity");
  if (subgroup_generated(g, n) != n) throw DomainError("N is not a subgroup");
  if (!is_normal(g, n)) throw DomainError("N is not normal");
  if (!is_invariant(phi, n)) throw DomainError("phi(N) != N");
  if (n.size() == 1) {
    std::vector<std::uint32_t> proj(g.size());
    std::iota(proj.begin(), proj.end(), 0u);
    return QuotientResult{g, phi, proj, proj};
  }
  // Left cosets xN, labelled by their minimal code.
  std::vector<long> coset_of(g.size(), -1);
  std::vector<std::uint32_t> leaders;
  std::vector<std::uint32_t> order(g.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return g.element(a) < g.element(b); });
  for (auto x : order) {
    if (coset_of[x] >= 0) continue;
    long id = static_cast<long>(leaders.size());
    leaders.push_back(x);
    for (auto m : n) coset_of[g.mul(x, m)] = id;
  }
  std::size_t k = leaders.size();
  auto action = [&](std::uint32_t x) {
    Code perm(k);
    for (std::size_t c = 0; c < k; ++c) perm[c] = static_cast<std::uint32_t>(coset_of[g.mul(x, leaders[c])]);
    return perm;
  };
  std::vector<Code> gens;
  for (auto s : g.generators()) gens.push_back(action(s));
  FiniteGroup q = FiniteGroup::permutations(k, gens);
  std::vector<std::uint32_t> proj(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) proj[x] = q.index_of(action(x));
  std::vector<std::uint32_t> images;
  for (auto s : g.generators()) images.push_back(proj[phi(s)]);
  GroupAutomorphism induced = GroupAutomorphism::from_generator_images(q, images);
  return QuotientResult{std::move(q), std::move(induced), std::move(proj), std::move(leaders)};
}

IsogredienceClassCount isogredience_count(const FiniteGroup& g, const GroupAutomorphism& phi) {
  check_automorphism(g, phi);
  Subgroup z = center(g);
  UnionFind uf(g.size());
  // Representatives phi_s phi, s in G, under s -> h s phi(h)^-1 c with c central.
  for (auto h : g.generators()) {
    std::uint32_t right = g.inv(phi(h));
    for (std::uint32_t s = 0; s < g.size(); ++s) uf.unite(s, g.mul(g.mul(h, s), right));
  }
  for (auto c : z)
    for (std::uint32_t s = 0; s < g.size(); ++s) uf.unite(s, g.mul(s, c));
  IsogredienceClassCount out;
  out.count = partition_from(uf, g.size()).count();
  QuotientResult q = induced_automorphism(g, z, phi);
  out.quotient_count = reidemeister_number(q.quotient, q.induced);
  if (out.count != out.quotient_count)
    throw ConsistencyError("isogredience count " + std::to_string(out.count) + " differs from R on G/Z(G) = " +
                           std::to_string(out.quotient_count));
  return out;
}

bool telescoping_product_check(const FiniteGroup& g, const GroupAutomorphism& phi, std::uint32_t y,
                               std::uint32_t z, unsigned m) {
  if (m < 1) throw DomainError("telescoping product needs m >= 1");
  if (y >= g.size() || z >= g.size()) throw DomainError("element does not belong to the group");
  std::uint32_t x = g.mul(g.mul(z, y), phi(g.inv(z)));
  std::uint32_t lhs = 0, prod_y = 0;
  std::uint32_t px = x, py = y;
  for (unsigned r = 0; r < m; ++r) {
    lhs = g.mul(lhs, px);
    prod_y = g.mul(prod_y, py);
    px = phi(px);
    py = phi(py);
  }
  std::uint32_t tail = g.inv(z);
  for (unsigned r = 0; r < m; ++r) tail = phi(tail);
  std::uint32_t rhs = g.mul(g.mul(z, prod_y), tail);
  return lhs == rhs;
}

}  // namespace tck
