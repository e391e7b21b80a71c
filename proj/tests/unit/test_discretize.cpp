#include <doctest.h>

#include "../oracles.hpp"
#include "topolab/classify.hpp"
#include "topolab/discretize.hpp"

using namespace topolab;

namespace {

FiniteLattice chain(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return FiniteLattice(labels, [](std::size_t a, std::size_t b) { return a <= b; });
}

}  // namespace

TEST_CASE("finite lattices") {
  const FiniteLattice c = chain(3);
  CHECK(c.is_lattice());
  CHECK(c.top() == 2u);
  CHECK(c.bottom() == 0u);
  CHECK(c.covers().size() == 2);
  CHECK(c.meet(0, 2) == 0u);
  CHECK(c.join(0, 1) == 1u);
  // Two incomparable elements: no top, no join.
  const FiniteLattice anti({"a", "b"}, [](std::size_t a, std::size_t b) { return a == b; });
  CHECK_FALSE(anti.is_lattice());
  CHECK_FALSE(anti.top().has_value());
  CHECK_THROWS_AS(FiniteLattice({"a", "b"}, [](std::size_t, std::size_t) { return true; }), Error);
  CHECK(order_isomorphism(chain(4), chain(4)).has_value());
  CHECK_FALSE(order_isomorphism(chain(4), FiniteLattice({"a", "b", "c", "d"}, [](std::size_t a, std::size_t b) {
                return a == b || a == 0 || b == 3;
              })).has_value());
  const std::string dot = chain(2).to_dot("c");
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
}

TEST_CASE("classify_pair") {
  const FinSpace ad3 = FinSpace::anti_discrete(3);
  const DiscretizationLevels j = classify_pair(PointMap::inclusion(ad3, PointSet{0}));
  CHECK(j.full);
  CHECK_FALSE(j.weak);
  CHECK(j.preweak);

  const FinSpace s = FinSpace::sierpinski();
  const DiscretizationLevels id = classify_pair(PointMap(FinSpace::discrete(2), s, {0, 1}));
  CHECK(id.strongest() == DiscretizationLevel::Preweak);

  const DiscretizationLevels delta = classify_pair(PointMap::inclusion(s, PointSet{0}));
  CHECK(delta.full);
  CHECK(delta.weak);

  CHECK_THROWS_AS(classify_pair(PointMap::identity(s)), Error);
  const DiscretizationLevels constant = classify_pair(PointMap(FinSpace::discrete(2), s, {0, 0}));
  CHECK(constant.strongest() == DiscretizationLevel::None);

  // A non-inclusion pair lands on its image.
  const Discretization c = canonicalize(PointMap(FinSpace::discrete(1), ad3, {2}));
  CHECK(c.image == PointSet{2});
  CHECK(c.levels.full);
}

TEST_CASE("all discretizations") {
  const auto ad = all_discretizations(FinSpace::anti_discrete(3));
  REQUIRE(ad.size() == 3);
  CHECK(ad[0].image == PointSet{0});
  CHECK(ad[1].image == PointSet{1});
  CHECK(ad[2].image == PointSet{2});
  const auto s = all_discretizations(FinSpace::sierpinski());
  REQUIRE(s.size() == 1);
  CHECK(s[0].image == PointSet{0});
  const auto d = all_discretizations(FinSpace::discrete(4));
  REQUIRE(d.size() == 1);
  CHECK(d[0].image == PointSet::full(4));

  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_topology(n, [&](const FinSpace& x) {
      std::vector<Mask> got;
      for (const auto& e : all_discretizations(x)) got.push_back(e.image.bits());
      CHECK(got == oracle::full_discretizations(x));
    });
  }
  for (std::size_t n = 2; n <= 6; ++n) CHECK(all_discretizations(FinSpace::anti_discrete(n)).size() == n);
}

TEST_CASE("weak and preweak lattices") {
  CHECK(weak_lattice(FinSpace::sierpinski()).size() == 2);
  CHECK(weak_lattice(FinSpace::anti_discrete(3)).size() == 1);
  CHECK(weak_lattice(FinSpace::discrete(2)).size() == 4);
  const FiniteLattice pw = preweak_lattice(FinSpace::sierpinski());
  CHECK(pw.size() == 4);
  CHECK(pw.is_lattice());
  CHECK(pw.label(*pw.top()) == "{0,1}");
}

TEST_CASE("has_discretization") {
  const auto d = has_discretization(FinSpace::discrete(3));
  CHECK(d.exists);
  CHECK(d.witness == PointSet::full(3));
  const auto a = has_discretization(FinSpace::anti_discrete(3));
  CHECK(a.exists);
  CHECK_FALSE(a.t1_route);
  const auto s = has_discretization(FinSpace::sierpinski());
  CHECK(s.exists);
  CHECK(s.witness == PointSet{0});
}

TEST_CASE("compare") {
  const FinSpace d2 = FinSpace::discrete(2);
  const Discretization a = subset_discretization(d2, PointSet{0});
  const Discretization b = subset_discretization(d2, PointSet{0, 1});
  CHECK(compare(a, b) == Comparison::Less);
  CHECK(compare(b, a) == Comparison::Greater);
  CHECK(compare(a, a) == Comparison::Equal);
  const FinSpace ad3 = FinSpace::anti_discrete(3);
  CHECK(compare(subset_discretization(ad3, PointSet{0}), subset_discretization(ad3, PointSet{1})) ==
        Comparison::Incomparable);
  CHECK(connecting_maps(a, b).size() == 1);
}

TEST_CASE("density") {
  const DensityCheck a = density_check(FinSpace::anti_discrete(3));
  CHECK(a.density == 1);
  CHECK(a.discretizations == 3);
  CHECK(a.verified);
  CHECK(density(FinSpace::discrete(5)) == 5);
  CHECK(density(FinSpace::sierpinski()) == 1);
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_topology(n, [&](const FinSpace& x) {
      std::size_t best = n;
      for (auto s : subsets_of(x.points()))
        if (oracle::closure(x, s.bits()) == x.points().bits()) best = std::min(best, s.size());
      CHECK(density(x) == best);
      CHECK(density_check(x).verified);
    });
  }
}

TEST_CASE("product discretizations") {
  const FinSpace s = FinSpace::sierpinski();
  const Discretization ds = subset_discretization(s, PointSet{0});
  const ProductDiscretization p = product_discretization(s, ds, s, ds);
  CHECK(p.discretization.image == PointSet{p.product.index(0, 0)});
  CHECK(p.discretization.levels.full);

  const FinSpace d2 = FinSpace::discrete(2), d3 = FinSpace::discrete(3);
  const ProductDiscretization q = product_discretization(d2, subset_discretization(d2, d2.points()), d3,
                                                         subset_discretization(d3, d3.points()));
  CHECK(q.discretization.image == PointSet::full(6));

  const FinSpace a2 = FinSpace::anti_discrete(2);
  const ProductDiscretization r = product_discretization(a2, subset_discretization(a2, PointSet{0}), a2,
                                                         subset_discretization(a2, PointSet{1}));
  CHECK(r.discretization.image == PointSet{r.product.index(0, 1)});
  CHECK(r.discretization.levels.full);
  CHECK(r.product.space == FinSpace::anti_discrete(4));

  CHECK_THROWS_AS(product_discretization(s, subset_discretization(s, PointSet{1}), s, ds), Error);
}

TEST_CASE("compactification-discretization duality") {
  const FinSpace d1 = FinSpace::discrete(1), d2 = FinSpace::discrete(2);
  const DualityVerdict id = compactification_discretization_duality(PointMap::identity(d2));
  CHECK(id.is_compactification);
  CHECK(id.is_discretization);
  const DualityVerdict constant = compactification_discretization_duality(PointMap(d2, d2, {1, 1}));
  CHECK_FALSE(constant.is_compactification);
  CHECK_FALSE(constant.is_discretization);
  const DualityVerdict inc = compactification_discretization_duality(PointMap(d1, d2, {0}));
  CHECK_FALSE(inc.is_compactification);
  CHECK_FALSE(inc.is_discretization);
  CHECK_THROWS_AS(compactification_discretization_duality(PointMap(d2, FinSpace::sierpinski(), {0, 1})), Error);
}
