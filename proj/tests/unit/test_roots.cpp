#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "tck/chevalley.hpp"
#include "tck/error.hpp"
#include "tck/root_system.hpp"

using namespace tck;

namespace {

std::size_t classical_count(const RootSystemType& t) {
  std::size_t l = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case 'A': return l * (l + 1);
    case 'B':
    case 'C': return 2 * l * l;
    case 'D': return 2 * l * (l - 1);
    case 'G': return 12;
    case 'F': return 48;
    default: return l == 6 ? 72 : l == 7 ? 126 : 240;
  }
}

const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A4", "A7", "B2", "B3", "B5", "C3", "C4",
                                            "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"};

Root neg(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

Root add(Root a, const Root& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Largest p with beta - p alpha in Phi, by walking the string directly.
int walk_down(const RootSystem& rs, const Root& alpha, const Root& beta) {
  int p = 0;
  Root cur = beta;
  for (;;) {
    Root nxt = add(cur, neg(alpha));
    if (!rs.contains(nxt)) return p;
    cur = nxt;
    ++p;
  }
}

}  // namespace

TEST_CASE("root counts match closed forms") {
  for (const auto& name : kAllTypes) {
    auto t = RootSystemType::parse(name);
    auto rs = RootSystem::build(t);
    CAPTURE(name);
    CHECK(rs.size() == classical_count(t));
    CHECK(rs.dimension() == rs.size() + static_cast<std::size_t>(t.rank));
  }
  CHECK(RootSystem::build(RootSystemType::parse("A2")).size() == 6);
  CHECK(RootSystem::build(RootSystemType::parse("B2")).size() == 8);
  CHECK(RootSystem::build(RootSystemType::parse("G2")).dimension() == 14);
}

TEST_CASE("inadmissible types are rejected") {
  for (const char* bad : {"B1", "C2", "D3", "E5", "E9", "F3", "G3", "A0", "H3", "", "A", "Ax"})
    CHECK_THROWS_AS(RootSystemType::parse(bad), DomainError);
  CHECK(RootSystemType::parse("d4").name() == "D4");
}

TEST_CASE("root system structural invariants") {
  for (const auto& name : kAllTypes) {
    auto rs = RootSystem::build(RootSystemType::parse(name));
    CAPTURE(name);
    int l = rs.rank();
    // simple roots first, positive roots before negatives
    for (int i = 0; i < l; ++i) {
      Root e(l, 0);
      e[i] = 1;
      CHECK(rs.index_of(e) == static_cast<std::size_t>(i));
    }
    std::set<Root> seen;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const Root& r = rs.root(i);
      seen.insert(r);
      bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
      bool nonpos = std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
      CHECK(nonneg != nonpos);
      CHECK(rs.is_positive(i) == nonneg);
      CHECK(rs.contains(neg(r)));
      CHECK(rs.negative_of(i) == rs.index_of(neg(r)));
      Root twice = r;
      for (auto& x : twice) x *= 2;
      CHECK_FALSE(rs.contains(twice));
      for (int s = 0; s < l; ++s) CHECK(rs.contains(rs.reflect(r, s)));
      if (i > 0 && rs.is_positive(i)) CHECK(rs.height(i - 1) <= rs.height(i));
    }
    CHECK(seen.size() == rs.size());
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        int c = rs.cartan()[i][j];
        if (i == j) CHECK(c == 2);
        else CHECK((c <= 0 && c >= -3));
      }
  }
}

TEST_CASE("cartan integers") {
  auto a1 = RootSystem::build(RootSystemType::parse("A1"));
  CHECK(cartan_integer(a1, Root{1}, Root{1}) == 2);
  CHECK(cartan_integer(a1, Root{-1}, Root{1}) == -2);
  auto a2 = RootSystem::build(RootSystemType::parse("A2"));
  CHECK(cartan_integer(a2, Root{1, 0}, Root{0, 1}) == -1);
  CHECK(cartan_integer(a2, Root{1, 1}, Root{1, 0}) == 1);
  auto g2 = RootSystem::build(RootSystemType::parse("G2"));
  int x = cartan_integer(g2, Root{1, 0}, Root{0, 1});
  int y = cartan_integer(g2, Root{0, 1}, Root{1, 0});
  CHECK(std::min(x, y) == -3);
  CHECK(std::max(x, y) == -1);
  CHECK_THROWS_AS(cartan_integer(a2, Root{2, 0}, Root{1, 0}), DomainError);
  CHECK_THROWS_AS(cartan_integer(a2, Root{1, 0}, Root{1, -1}), DomainError);

  // <beta, alpha^vee> = p - q along the alpha-string through beta
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    auto rs = RootSystem::build(RootSystemType::parse(name));
    for (const auto& a : rs.roots())
      for (const auto& b : rs.roots()) {
        if (a == b || a == neg(b)) continue;
        int p = walk_down(rs, a, b);
        int q = walk_down(rs, neg(a), b);
        CHECK(cartan_integer(rs, b, a) == p - q);
      }
  }
}

TEST_CASE("diagram symmetries") {
  auto count = [](const char* name) {
    return diagram_symmetries(RootSystem::build(RootSystemType::parse(name)));
  };
  auto a3 = count("A3");
  REQUIRE(a3.size() == 2);
  CHECK(a3[0].is_identity());
  CHECK(a3[1].order() == 2);
  auto d4 = count("D4");
  CHECK(d4.size() == 6);
  CHECK(std::any_of(d4.begin(), d4.end(), [](const DiagramSymmetry& s) { return s.order() == 3; }));
  CHECK(count("B2").size() == 1);
  CHECK(count("G2").size() == 1);
  CHECK(count("F4").size() == 1);
  CHECK(count("E6").size() == 2);
  CHECK(count("E7").size() == 1);
  CHECK(count("D5").size() == 2);
  CHECK(count("A1").size() == 1);

  for (const char* name : {"A2", "A4", "D4", "D6", "E6"}) {
    auto rs = RootSystem::build(RootSystemType::parse(name));
    for (const auto& s : diagram_symmetries(rs)) {
      for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) CHECK(rs.cartan()[s.perm[i]][s.perm[j]] == rs.cartan()[i][j]);
      int o = s.order();
      CHECK((o == 1 || o == 2 || o == 3));
      CHECK(s.power(o).is_identity());
    }
  }
}

TEST_CASE("symmetry extension to all roots") {
  auto a3 = RootSystem::build(RootSystemType::parse("A3"));
  auto rev = diagram_symmetries(a3)[1];
  CHECK(extend_symmetry_to_roots(a3, rev, Root{1, 0, 0}) == Root{0, 0, 1});
  CHECK(extend_symmetry_to_roots(a3, rev, Root{1, 1, 1}) == Root{1, 1, 1});
  CHECK(extend_symmetry_to_roots(a3, rev, Root{1, 1, 0}) == Root{0, 1, 1});
  CHECK_THROWS_AS(extend_symmetry_to_roots(a3, rev, Root{1, 0, 1}), DomainError);

  for (const char* name : {"A3", "A5", "D4", "D5", "E6"}) {
    auto rs = RootSystem::build(RootSystemType::parse(name));
    for (const auto& s : diagram_symmetries(rs)) {
      std::set<Root> image;
      for (const auto& r : rs.roots()) {
        Root x = extend_symmetry_to_roots(rs, s, r);
        image.insert(x);
        CHECK(extend_symmetry_to_roots(rs, s, neg(r)) == neg(x));
        bool pos = std::all_of(r.begin(), r.end(), [](int v) { return v >= 0; });
        bool xpos = std::all_of(x.begin(), x.end(), [](int v) { return v >= 0; });
        CHECK(pos == xpos);
        if (s.is_identity()) CHECK(x == r);
      }
      CHECK(image.size() == rs.size());
      // root strings are preserved
      for (const auto& a : rs.roots())
        for (const auto& b : rs.roots()) {
          if (a == b || a == neg(b)) continue;
          CHECK(walk_down(rs, a, b) ==
                walk_down(rs, extend_symmetry_to_roots(rs, s, a), extend_symmetry_to_roots(rs, s, b)));
        }
    }
  }
}

TEST_CASE("structure constant magnitudes and antisymmetry") {
  auto a1 = structure_constants(RootSystem::build(RootSystemType::parse("A1")));
  CHECK(a1.nonzero_count() == 0);

  auto a2rs = RootSystem::build(RootSystemType::parse("A2"));
  auto a2 = structure_constants(a2rs);
  CHECK(a2.nonzero_count() > 0);
  for (std::size_t a = 0; a < a2rs.size(); ++a)
    for (std::size_t b = 0; b < a2rs.size(); ++b)
      if (a2rs.sum_index(a, b) >= 0) CHECK(std::abs(a2.n(a, b)) == 1);

  auto b2rs = RootSystem::build(RootSystemType::parse("B2"));
  auto b2 = structure_constants(b2rs);
  int biggest = 0;
  for (std::size_t a = 0; a < b2rs.size(); ++a)
    for (std::size_t b = 0; b < b2rs.size(); ++b) biggest = std::max(biggest, std::abs(b2.n(a, b)));
  CHECK(biggest == 2);

  for (const auto& name : kAllTypes) {
    auto rs = RootSystem::build(RootSystemType::parse(name));
    auto c = structure_constants(rs);
    CAPTURE(name);
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < rs.size(); ++b) {
        bool sum_root = rs.contains(add(rs.root(a), rs.root(b)));
        if (!sum_root) {
          CHECK(c.n(a, b) == 0);
          continue;
        }
        ++pairs;
        CHECK(std::abs(c.n(a, b)) == walk_down(rs, rs.root(a), rs.root(b)) + 1);
        CHECK(c.n(b, a) == -c.n(a, b));
      }
    CHECK(c.nonzero_count() == pairs);
    for (const auto& [root, pair] : c.extraspecial()) CHECK(c.n(pair.first, pair.second) > 0);
  }
}

TEST_CASE("structure constants are deterministic") {
  auto rs = RootSystem::build(RootSystemType::parse("F4"));
  auto c1 = structure_constants(rs);
  auto c2 = structure_constants(RootSystem::build(RootSystemType::parse("F4")));
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) REQUIRE(c1.n(a, b) == c2.n(a, b));
}

TEST_CASE("Jacobi identity on all basis triples up to rank 4") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
    AdjointRepresentation rep(RootSystemType::parse(name));
    std::size_t d = rep.dimension();
    CAPTURE(name);
    // cache all basis brackets, then check [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0
    std::vector<std::vector<Rational>> br(d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) br[a * d + b] = rep.bracket_basis(a, b);
    auto bracket_with = [&](std::size_t x, const std::vector<Rational>& v) {
      std::vector<Rational> out(d);
      for (std::size_t k = 0; k < d; ++k) {
        if (v[k].is_zero()) continue;
        const auto& row = br[x * d + k];
        for (std::size_t m = 0; m < d; ++m)
          if (!row[m].is_zero()) out[m] += v[k] * row[m];
      }
      return out;
    };
    std::size_t failures = 0;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = x + 1; y < d; ++y)
        for (std::size_t z = y + 1; z < d; ++z) {
          auto s1 = bracket_with(x, br[y * d + z]);
          auto s2 = bracket_with(y, br[z * d + x]);
          auto s3 = bracket_with(z, br[x * d + y]);
          for (std::size_t m = 0; m < d; ++m)
            if (!(s1[m] + s2[m] + s3[m]).is_zero()) {
              ++failures;
              break;
            }
        }
    CHECK(failures == 0);
  }
}

TEST_CASE("Cartan action on root vectors") {
  AdjointRepresentation rep(RootSystemType::parse("B3"));
  const auto& rs = rep.root_system();
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (int i = 0; i < rs.rank(); ++i) {
      auto v = rep.bracket_basis(rep.cartan_index(i), a);
      Root e(rs.rank(), 0);
      e[i] = 1;
      for (std::size_t m = 0; m < v.size(); ++m) {
        Rational want = m == a ? Rational(rs.cartan_integer(rs.root(a), e)) : Rational(0);
        CHECK(v[m] == want);
      }
    }
}
