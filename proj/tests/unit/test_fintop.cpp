#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "topolab/fintop.hpp"

using namespace topolab;

namespace {

FinSpace space(std::size_t n, std::vector<PointSet> gens) { return make_space(n, gens); }

// opens {∅,{0},{1},{0,1},X} on three points
FinSpace two_open_points() { return space(3, {PointSet{0}, PointSet{1}}); }

void check_axioms(const FinSpace& x) {
  CHECK(oracle::is_topology(x.size(), oracle::opens_of(x)));
  const auto& o = x.opens();
  CHECK(std::is_sorted(o.begin(), o.end()));
  CHECK(std::adjacent_find(o.begin(), o.end()) == o.end());
}

}  // namespace

TEST_CASE("make_space closes generating families") {
  CHECK(space(2, {PointSet{0}}) == FinSpace::sierpinski());
  CHECK(space(2, {PointSet{0}}).opens() == std::vector<PointSet>{PointSet{}, PointSet{0}, PointSet{0, 1}});
  CHECK(space(3, {}).opens() == std::vector<PointSet>{PointSet{}, PointSet{0, 1, 2}});
  CHECK(two_open_points().opens() ==
        std::vector<PointSet>{PointSet{}, PointSet{0}, PointSet{1}, PointSet{0, 1}, PointSet{0, 1, 2}});
  CHECK_THROWS_AS(space(2, {PointSet{2}}), Error);
  try {
    space(2, {PointSet{3}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidGenerator);
  }
}

TEST_CASE("make_space agrees with the pairwise fixpoint on random families") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 7;
    std::vector<PointSet> gens;
    std::vector<Mask> raw;
    std::uint64_t state = seed * 0x9E3779B97F4A7C15ULL + 1;
    for (std::size_t k = 0; k < 1 + seed % 5; ++k) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      const Mask m = state & oracle::full_mask(n);
      gens.emplace_back(m);
      raw.push_back(m);
    }
    CHECK(oracle::opens_of(make_space(n, gens)) == oracle::pairwise_fixpoint(n, raw));
  }
}

TEST_CASE("from_opens rejects families that are not topologies") {
  CHECK_NOTHROW(FinSpace::from_opens(2, {PointSet{}, PointSet{0}, PointSet{1}, PointSet{0, 1}}));
  // Missing the full set.
  CHECK_THROWS_AS(FinSpace::from_opens(3, {PointSet{}, PointSet{0}, PointSet{1}, PointSet{0, 1}}), Error);
  // Not closed under union.
  CHECK_THROWS_AS(FinSpace::from_opens(3, {PointSet{}, PointSet{0}, PointSet{1}, PointSet{0, 1, 2}}), Error);
  // Duplicates.
  CHECK_THROWS_AS(FinSpace::from_opens(1, {PointSet{}, PointSet{0}, PointSet{0}}), Error);
}

TEST_CASE("closure and interior") {
  const FinSpace s = FinSpace::sierpinski();
  CHECK(closure(s, PointSet{0}) == PointSet{0, 1});
  CHECK(closure(s, PointSet{1}) == PointSet{1});
  CHECK(closure(two_open_points(), PointSet{}) == PointSet{});
  CHECK(closure(FinSpace::anti_discrete(3), PointSet{1}) == PointSet{0, 1, 2});

  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_topology(n, [&](const FinSpace& x) {
      for (auto sub : subsets_of(x.points())) {
        const PointSet c = closure(x, sub);
        const PointSet i = interior(x, sub);
        CHECK(c.bits() == oracle::closure(x, sub.bits()));
        CHECK(i.bits() == oracle::interior(x, sub.bits()));
        CHECK(i == closure(x, sub.complement_in(n)).complement_in(n));
        CHECK(i.subset_of(sub));
        CHECK(sub.subset_of(c));
        CHECK(closure(x, c) == c);
        CHECK(interior(x, i) == i);
      }
    });
  }
}

TEST_CASE("subspace") {
  const Subspace a = subspace(FinSpace::sierpinski(), PointSet{1});
  CHECK(a.space.size() == 1);
  CHECK(a.to_ambient == std::vector<std::size_t>{1});
  const Subspace b = subspace(two_open_points(), PointSet{2});
  CHECK(b.space == FinSpace::discrete(1));
  const FinSpace x = two_open_points();
  CHECK(subspace(x, x.points()).space == x);
  CHECK(subspace(x, PointSet{}).space.size() == 0);

  // Subspace of a subspace is the subspace of the intersection.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const FinSpace r = random_space(6, seed);
    const PointSet s1{0, 1, 2, 4, 5};
    const Subspace outer = subspace(r, s1);
    const Subspace inner = subspace(outer.space, PointSet{0, 2, 3, 4});  // ambient {0,2,4,5}
    const Subspace direct = subspace(r, PointSet{0, 2, 4, 5});
    CHECK(inner.space == direct.space);
    std::vector<Mask> literal;
    for (Mask m : oracle::subspace_opens(r, PointSet{0, 2, 4, 5}.bits())) {
      Mask packed = 0;
      std::size_t k = 0;
      for (std::size_t p : {0, 2, 4, 5}) packed |= ((m >> p) & 1U) << k++;
      literal.push_back(packed);
    }
    std::sort(literal.begin(), literal.end());
    CHECK(oracle::opens_of(direct.space) == literal);
  }
}

TEST_CASE("product") {
  const Product d = product(FinSpace::discrete(2), FinSpace::discrete(2));
  CHECK(d.space == FinSpace::discrete(4));
  const FinSpace s = FinSpace::sierpinski();
  CHECK(are_homeomorphic(product(s, FinSpace::discrete(1)).space, s));
  const Product ss = product(s, s);
  CHECK(ss.space.size() == 4);
  CHECK(ss.space.opens().size() == 6);
  // Box closure by brute force.
  std::vector<Mask> boxes;
  for (auto u : s.opens())
    for (auto v : s.opens()) boxes.push_back(ss.box(u, v).bits());
  std::set<Mask> unions;
  for (Mask sel = 0; sel < (Mask{1} << boxes.size()); ++sel) {
    Mask acc = 0;
    for (std::size_t i = 0; i < boxes.size(); ++i)
      if ((sel >> i) & 1U) acc |= boxes[i];
    unions.insert(acc);
  }
  CHECK(oracle::opens_of(ss.space) == std::vector<Mask>(unions.begin(), unions.end()));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const FinSpace a = random_space(3, seed);
    const FinSpace b = random_space(3, seed + 1000);
    const Product p = product(a, b);
    CHECK(is_continuous(p.left_projection(a)));
    CHECK(is_continuous(p.right_projection(b)));
    CHECK(are_homeomorphic(product(a, FinSpace::discrete(1)).space, a));
  }
  CHECK_THROWS_AS(product(FinSpace::discrete(5), FinSpace::discrete(5)), Error);
}

TEST_CASE("quotient") {
  const Quotient a = quotient(FinSpace::discrete(3), Partition::from_blocks(3, {PointSet{0, 1}, PointSet{2}}));
  CHECK(a.space == FinSpace::discrete(2));
  CHECK(quotient(FinSpace::sierpinski(), Partition::trivial(2)).space.size() == 1);
  const FinSpace x = space(3, {PointSet{0}});
  const Quotient q = quotient(x, Partition::from_blocks(3, {PointSet{0}, PointSet{1, 2}}));
  CHECK(q.space == FinSpace::sierpinski());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FinSpace r = random_space(5, seed);
    for (const auto& p : all_partitions(5)) {
      const Quotient qq = quotient(r, p);
      CHECK(is_continuous(qq.q));
      CHECK(qq.q.is_surjective());
      // Literal quotient topology.
      std::vector<Mask> literal;
      for (auto sel : subsets_of(PointSet::full(p.block_count()))) {
        Mask pre = 0;
        for (auto b : sel) pre |= p.block(b).bits();
        if (r.is_open(PointSet(pre))) literal.push_back(sel.bits());
      }
      CHECK(oracle::opens_of(qq.space) == literal);
    }
  }
}

TEST_CASE("specialization and components") {
  const Preorder disc = specialization(FinSpace::discrete(3));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(disc.leq(a, b) == (a == b));
  CHECK(components(FinSpace::discrete(3)) == Partition::discrete(3));
  const FinSpace s = FinSpace::sierpinski();
  CHECK(specialization(s).leq(1, 0));
  CHECK_FALSE(specialization(s).leq(0, 1));
  CHECK(components(s) == Partition::trivial(2));
  CHECK(components(two_open_points()) == Partition::trivial(3));
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_topology(n, [&](const FinSpace& x) {
      CHECK(components(x) == components_by_comparability(x));
      const Preorder pre = specialization(x);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          CHECK(pre.leq(a, b) == ((oracle::closure(x, Mask{1} << b) >> a) & 1U));
    });
  }
}

TEST_CASE("map predicates") {
  const FinSpace s = FinSpace::sierpinski();
  const PointMap id = PointMap::identity(s);
  CHECK(is_continuous(id));
  CHECK(is_embedding(id));
  CHECK(has_dense_range(id));
  CHECK(has_open_range(id));

  const PointMap j = PointMap::inclusion(FinSpace::anti_discrete(3), PointSet{0});
  CHECK(is_embedding(j));
  CHECK(has_dense_range(j));
  CHECK_FALSE(has_open_range(j));

  const PointMap d(FinSpace::discrete(2), s, {0, 1});
  CHECK(is_continuous(d));
  CHECK_FALSE(is_embedding(d));
  CHECK_FALSE(is_homeomorphism(d));

  CHECK_THROWS_AS(PointMap(s, s, {0, 2}), Error);
  CHECK_THROWS_AS(PointMap(s, s, {0}), Error);
}

TEST_CASE("enumeration matches the brute-force family filter") {
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto brute = oracle::brute_topologies(n);
    const auto fast = enumerate_topologies(n);
    CHECK(brute.size() == expected[n]);
    std::set<std::vector<Mask>> a(brute.begin(), brute.end());
    std::set<std::vector<Mask>> b;
    for (const auto& x : fast) {
      check_axioms(x);
      b.insert(oracle::opens_of(x));
    }
    CHECK(b.size() == fast.size());
    CHECK(a == b);
  }
  const std::size_t five = oracle::preorder_count(5);
  CHECK(five == 6942);
  CHECK(enumerate_topologies(5).size() == five);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(oracle::preorder_count(n) == expected[n]);
  CHECK_THROWS_AS(enumerate_topologies(kEnumerationCap + 1), Error);
}

TEST_CASE("random spaces") {
  const FinSpace a = random_space(5, 1);
  check_axioms(a);
  CHECK(a == random_space(5, 1));
  CHECK(random_space(0, 3).opens() == std::vector<PointSet>{PointSet{}});
  std::set<std::vector<PointSet>> distinct;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const FinSpace r = random_space(1 + seed % 8, seed);
    check_axioms(r);
    distinct.insert(r.opens());
  }
  CHECK(distinct.size() > 100);
}

TEST_CASE("partitions") {
  for (std::size_t n = 0; n <= 6; ++n) CHECK(all_partitions(n).size() == oracle::bell(n));
  const Partition p = Partition::from_labels(std::vector<std::size_t>{7, 3, 7});
  CHECK(p.labels() == std::vector<std::size_t>{0, 1, 0});
  CHECK(p.to_string() == "{0,2}|{1}");
  CHECK(Partition::discrete(3).refines(p));
  CHECK_FALSE(p.refines(Partition::discrete(3)));
  CHECK_THROWS_AS(Partition::from_blocks(3, {PointSet{0, 1}, PointSet{1, 2}}), Error);
  CHECK_THROWS_AS(Partition::from_blocks(3, {PointSet{0, 1}}), Error);
}

TEST_CASE("sums and homeomorphism search") {
  const FinSpace s = FinSpace::sierpinski();
  const FinSpace sum = disjoint_sum(s, FinSpace::discrete(1));
  CHECK(sum.size() == 3);
  CHECK(components(sum).block_count() == 2);
  const FinSpace z = adjoin_dense_discrete(FinSpace::anti_discrete(2), 2);
  CHECK(z.size() == 4);
  CHECK(z.is_open(PointSet{2}));
  CHECK(z.is_open(PointSet{3}));
  CHECK(closure(z, PointSet{2, 3}) == z.points());
  CHECK(are_homeomorphic(space(2, {PointSet{1}}), s));
  CHECK_FALSE(are_homeomorphic(FinSpace::discrete(2), s));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FinSpace r = random_space(5, seed);
    const std::vector<std::size_t> perm{3, 0, 4, 1, 2};
    std::vector<PointSet> moved;
    for (auto u : r.opens()) {
      PointSet m;
      for (auto p : u) m = m.with(perm[p]);
      moved.push_back(m);
    }
    const FinSpace r2 = make_space(5, moved);
    const auto h = find_homeomorphism(r, r2);
    REQUIRE(h.has_value());
    CHECK(is_homeomorphism(PointMap(r, r2, *h)));
  }
}
