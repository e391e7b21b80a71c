#include "topolab/discretize.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "topolab/classify.hpp"

namespace topolab {

namespace {

void require_discrete_domain(const PointMap& f) {
  if (f.domain != FinSpace::discrete(f.domain.size()))
    throw Error(ErrorKind::InvalidMap, "discretization domain must be discrete");
}

FiniteLattice subset_lattice(PointSet ground) {
  const std::vector<PointSet> subsets = subsets_of(ground);
  std::vector<std::string> labels;
  for (auto sub : subsets) labels.push_back(sub.to_string());
  return FiniteLattice(std::move(labels),
                       [&](std::size_t a, std::size_t b) { return subsets[a].subset_of(subsets[b]); });
}

}  // namespace

DiscretizationLevels classify_pair(const PointMap& f) {
  require_discrete_domain(f);
  DiscretizationLevels levels;
  levels.preweak = f.is_injective();
  const bool embedding = is_embedding(f);
  levels.weak = embedding && has_open_range(f);
  levels.full = embedding && has_dense_range(f);
  return levels;
}

Discretization canonicalize(const PointMap& f) { return {f.image(), classify_pair(f)}; }

Discretization subset_discretization(const FinSpace& x, PointSet image) {
  return canonicalize(PointMap::inclusion(x, image));
}

bool is_discrete_subspace(const FinSpace& x, PointSet s) {
  for (auto p : s) {
    if ((x.neighbourhood(p) & s) != PointSet::singleton(p)) return false;
  }
  return true;
}

std::vector<Discretization> all_discretizations(const FinSpace& x) {
  if (x.size() > kDiscretizationCap) throw Error(ErrorKind::TooLarge, "too many points to enumerate discretizations");
  std::vector<Discretization> out;
  const Mask limit = Mask{1} << x.size();
  for (Mask bits = 0; bits < limit; ++bits) {
    const PointSet s(bits);
    if (is_dense(x, s) && is_discrete_subspace(x, s)) out.push_back(subset_discretization(x, s));
  }
  return out;
}

FiniteLattice weak_lattice(const FinSpace& x) {
  const PointSet delta = isolated_points(x);
  if (delta.size() > kLatticeCap) throw Error(ErrorKind::TooLarge, "weak lattice too large");
  return subset_lattice(delta);
}

FiniteLattice preweak_lattice(const FinSpace& x) {
  if (x.size() > kLatticeCap) throw Error(ErrorKind::TooLarge, "preweak lattice too large");
  return subset_lattice(x.points());
}

DiscretizationWitness has_discretization(const FinSpace& x) {
  DiscretizationWitness result;
  if (separation(x).t1) {
    result.t1_route = true;
    const PointSet delta = isolated_points(x);
    result.exists = is_dense(x, delta);
    if (result.exists) result.witness = delta;
    return result;
  }
  const auto all = all_discretizations(x);
  result.exists = !all.empty();
  if (result.exists) result.witness = all.front().image;
  return result;
}

std::vector<std::vector<std::size_t>> connecting_maps(const Discretization& a, const Discretization& b) {
  const auto from = a.image.elements();
  const auto to = b.image.elements();
  // For each point of a's image, the candidates z with b(z) = a(y).
  std::vector<std::vector<std::size_t>> choices(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (to[j] == from[i]) choices[i].push_back(j);
    }
    if (choices[i].empty()) return {};
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> h(from.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == from.size()) {
      out.push_back(h);
      return;
    }
    for (auto c : choices[i]) {
      h[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

Comparison compare(const Discretization& a, const Discretization& b) {
  const bool le = !connecting_maps(a, b).empty();
  const bool ge = !connecting_maps(b, a).empty();
  if (le && ge) return Comparison::Equal;
  if (le) return Comparison::Less;
  if (ge) return Comparison::Greater;
  return Comparison::Incomparable;
}

std::size_t density(const FinSpace& x) {
  if (x.size() > kDiscretizationCap) throw Error(ErrorKind::TooLarge, "too many points for density search");
  std::size_t best = x.size();
  const Mask limit = Mask{1} << x.size();
  for (Mask bits = 0; bits < limit; ++bits) {
    const PointSet s(bits);
    if (s.size() < best && is_dense(x, s)) best = s.size();
  }
  return best;
}

DensityCheck density_check(const FinSpace& x) {
  DensityCheck check;
  check.density = density(x);
  const auto all = all_discretizations(x);
  check.discretizations = all.size();
  check.verified = std::all_of(all.begin(), all.end(),
                               [&](const Discretization& d) { return d.image.size() == check.density; });
  return check;
}

ProductDiscretization product_discretization(const FinSpace& x, const Discretization& dx,
                                             const FinSpace& y, const Discretization& dy) {
  if (!subset_discretization(x, dx.image).levels.full || !subset_discretization(y, dy.image).levels.full)
    throw Error(ErrorKind::NotADiscretization, "both factors must be discretizations");
  Product prod = product(x, y);
  const PointSet image = prod.box(dx.image, dy.image);
  Discretization d = subset_discretization(prod.space, image);
  if (!d.levels.full)
    throw Error(ErrorKind::InternalInvariantViolation, "product of discretizations is not a discretization");
  return {std::move(prod), d};
}

DualityVerdict compactification_discretization_duality(const PointMap& f) {
  if (f.domain != FinSpace::discrete(f.domain.size()))
    throw Error(ErrorKind::HypothesisViolated, "domain must be discrete");
  if (!separation(f.codomain).t2) throw Error(ErrorKind::HypothesisViolated, "codomain must be Hausdorff");
  DualityVerdict verdict;
  // Compactification: homeomorphism onto the image, image dense in Y.
  if (f.is_injective()) {
    const Subspace img = subspace(f.codomain, f.image());
    std::vector<std::size_t> onto(f.table.size());
    for (std::size_t p = 0; p < f.table.size(); ++p) {
      onto[p] = static_cast<std::size_t>(
          std::find(img.to_ambient.begin(), img.to_ambient.end(), f.table[p]) - img.to_ambient.begin());
    }
    verdict.is_compactification = is_homeomorphism(PointMap(f.domain, img.space, std::move(onto))) &&
                                  closure(f.codomain, f.image()) == f.codomain.points();
  }
  verdict.is_discretization = classify_pair(f).full;
  return verdict;
}

}  // namespace topolab
