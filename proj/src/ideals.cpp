#include "topolab/ideals.hpp"

#include <algorithm>

#include "topolab/classify.hpp"
#include "topolab/discretize.hpp"

namespace topolab {

namespace {

void require_open(const FinSpace& x, PointSet u) {
  if (!x.is_open(u)) throw Error(ErrorKind::NotOpen, u.to_string() + " is not open");
}

std::vector<PointSet> all_subsets(std::size_t n) { return subsets_of(PointSet::full(n)); }

}  // namespace

bool concrete_model_applies(const FinSpace& x) {
  return x.size() <= kConcreteCap && x == FinSpace::discrete(x.size());
}

IdealDescriptor ideal_of_open(const FinSpace& x, PointSet u) {
  require_open(x, u);
  IdealDescriptor d{u, x.size(), std::nullopt};
  if (concrete_model_applies(x)) d.concrete = vanishing_outside(x.size(), u);
  return d;
}

PointSet open_of_ideal(const IdealDescriptor& d) {
  if (!d.concrete) return d.support;
  PointSet out;
  for (const auto& v : d.concrete->basis()) {
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (v[p] != 0) out = out.with(p);
    }
  }
  return out;
}

bool ideal_contained(const IdealDescriptor& a, const IdealDescriptor& b) {
  if (a.concrete && b.concrete) return b.concrete->contains(*a.concrete);
  return a.support.subset_of(b.support);
}

ProjectionSet minimal_projections(const FinSpace& x, PointSet u) {
  require_open(x, u);
  const Subspace sub = subspace(x, u);
  ProjectionSet out;
  for (std::size_t i = 0; i < sub.space.size(); ++i) {
    const PointSet single = PointSet::singleton(i);
    if (sub.space.is_open(single) && sub.space.is_closed(single))
      out.minimal_projections.push_back(PointSet::singleton(sub.to_ambient[i]));
  }
  return out;
}

ProjectionSet minimal_projections_concrete(const FinSpace& x, PointSet u) {
  if (!concrete_model_applies(x)) throw Error(ErrorKind::HypothesisViolated, "vector model needs a small discrete space");
  const IdealDescriptor ideal = ideal_of_open(x, u);
  std::vector<PointSet> projections;
  for (auto s : all_subsets(x.size())) {
    if (!s.empty() && ideal.concrete->contains(indicator(x.size(), s))) projections.push_back(s);
  }
  ProjectionSet out;
  for (auto p : projections) {
    const bool minimal = std::none_of(projections.begin(), projections.end(),
                                      [&](PointSet q) { return q != p && q.subset_of(p); });
    if (minimal) out.minimal_projections.push_back(p);
  }
  return out;
}

bool is_gmp(const FinSpace& x, PointSet u) {
  require_open(x, u);
  return is_discrete_subspace(x, u);
}

std::optional<bool> is_gmp_concrete(const FinSpace& x, PointSet u) {
  require_open(x, u);
  if (!concrete_model_applies(x)) return std::nullopt;
  const IdealDescriptor ideal = ideal_of_open(x, u);
  std::vector<Vector> generators;
  for (auto p : minimal_projections_concrete(x, u).minimal_projections) generators.push_back(indicator(x.size(), p));
  return generated_algebra(x.size(), generators, false) == *ideal.concrete;
}

bool is_essential(const FinSpace& x, PointSet u) {
  require_open(x, u);
  return is_dense(x, u);
}

bool is_essential_by_opens(const FinSpace& x, PointSet u) {
  return std::all_of(x.opens().begin(), x.opens().end(), [&](PointSet v) { return v.empty() || v.intersects(u); });
}

std::optional<bool> is_essential_concrete(const FinSpace& x, PointSet u) {
  require_open(x, u);
  if (!concrete_model_applies(x)) return std::nullopt;
  const IdealDescriptor j = ideal_of_open(x, u);
  for (auto s : all_subsets(x.size())) {
    const RationalSubspace k = vanishing_outside(x.size(), s);
    if (k.dimension() > 0 && j.concrete->intersection_dimension(k) == 0) return false;
  }
  return true;
}

FiniteLattice gmp_ideal_lattice(const FinSpace& x) {
  std::vector<IdealDescriptor> ideals;
  for (auto u : x.opens()) {
    if (is_gmp(x, u)) ideals.push_back(ideal_of_open(x, u));
  }
  std::vector<std::string> labels;
  for (const auto& d : ideals) labels.push_back("I(" + d.support.to_string() + ")");
  return FiniteLattice(std::move(labels),
                       [&](std::size_t a, std::size_t b) { return ideal_contained(ideals[a], ideals[b]); });
}

IdealMapReport verify_ideal_map(const FinSpace& x) {
  IdealMapReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    if (report.counterexample.empty()) report.counterexample = std::move(why);
  };
  const PointSet delta = isolated_points(x);
  // Weak discretizations: one per subset of δX, each checked against the definition.
  std::vector<Discretization> weak;
  for (auto s : subsets_of(delta)) {
    Discretization d = subset_discretization(x, s);
    if (!d.levels.weak) fail("subset " + s.to_string() + " of the isolated points is not a weak discretization");
    weak.push_back(d);
  }
  std::vector<IdealDescriptor> gmp;
  for (auto u : x.opens()) {
    if (is_gmp(x, u)) {
      gmp.push_back(ideal_of_open(x, u));
      if (!u.subset_of(delta)) fail("gmp ideal " + u.to_string() + " not supported in the isolated points");
    }
  }
  report.weak_discretizations = weak.size();
  report.gmp_ideals = gmp.size();
  if (weak.size() != gmp.size()) fail("lattice sizes differ");

  std::vector<IdealDescriptor> images;
  for (const auto& d : weak) {
    IdealDescriptor ideal = ideal_of_open(x, d.image);
    const bool in_range = std::any_of(gmp.begin(), gmp.end(), [&](const IdealDescriptor& g) {
      return ideal_contained(g, ideal) && ideal_contained(ideal, g);
    });
    if (!in_range) fail("I(" + d.image.to_string() + ") is not a gmp ideal");
    if (open_of_ideal(ideal) != d.image) fail("dictionary does not invert on " + d.image.to_string());
    images.push_back(std::move(ideal));
  }
  for (std::size_t a = 0; a < weak.size(); ++a) {
    for (std::size_t b = 0; b < weak.size(); ++b) {
      const Comparison c = compare(weak[a], weak[b]);
      const bool le = c == Comparison::Less || c == Comparison::Equal;
      if (le != ideal_contained(images[a], images[b]))
        fail("order mismatch between " + weak[a].image.to_string() + " and " + weak[b].image.to_string());
    }
  }
  if (report.ok) {
    if (!order_isomorphism(weak_lattice(x), gmp_ideal_lattice(x))) fail("lattices are not order-isomorphic");
  }
  return report;
}

EssentialGmp essential_gmp(const FinSpace& x) {
  EssentialGmp out;
  out.hypothesis_violated = !separation(x).t2;
  for (auto u : x.opens()) {
    if (is_gmp(x, u) && is_essential(x, u)) {
      ++out.candidates;
      if (!out.ideal) out.ideal = ideal_of_open(x, u);
    }
  }
  if (out.candidates > 1) throw Error(ErrorKind::InternalInvariantViolation, "more than one essential gmp ideal");
  return out;
}

GenerationVerdict generated_by_minimal_projections(const FinSpace& x) {
  GenerationVerdict v;
  v.dictionary = is_gmp(x, x.points());
  if (concrete_model_applies(x)) v.concrete = *is_gmp_concrete(x, x.points());
  return v;
}

GenerationVerdict generated_by_projections(const FinSpace& x) {
  GenerationVerdict v;
  v.dictionary = separation(x).zero_dimensional;
  if (concrete_model_applies(x)) {
    std::vector<Vector> generators;
    for (auto u : x.opens()) {
      if (x.is_closed(u)) generators.push_back(indicator(x.size(), u));
    }
    v.concrete = generated_algebra(x.size(), generators, false) == vanishing_outside(x.size(), x.points());
  }
  return v;
}

}  // namespace topolab
