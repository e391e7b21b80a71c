#pragma once

// Discretizations of a space X: pairs (f, Y) with Y discrete and f: Y → X.
// Every equivalence class has exactly one representative of the form
// (inclusion, S) with S ⊆ X, so discretizations are stored as subsets and
// equivalence is set equality.

#include <cstddef>
#include <optional>
#include <vector>

#include "topolab/fintop.hpp"
#include "topolab/lattice.hpp"

namespace topolab {

enum class DiscretizationLevel { None, Preweak, Weak, Full };

struct DiscretizationLevels {
  bool preweak = false;  // f injective
  bool weak = false;     // embedding with open range
  bool full = false;     // embedding with dense range

  DiscretizationLevel strongest() const {
    if (full) return DiscretizationLevel::Full;
    if (weak) return DiscretizationLevel::Weak;
    if (preweak) return DiscretizationLevel::Preweak;
    return DiscretizationLevel::None;
  }
};

struct Discretization {
  PointSet image;
  DiscretizationLevels levels;
};

// Throws InvalidMap unless f.domain is discrete.
DiscretizationLevels classify_pair(const PointMap& f);
// Canonical subset representative of (f, Y).
Discretization canonicalize(const PointMap& f);
Discretization subset_discretization(const FinSpace& x, PointSet image);

// Whether S with the subspace topology is discrete.
bool is_discrete_subspace(const FinSpace& x, PointSet s);

inline constexpr std::size_t kDiscretizationCap = 12;
inline constexpr std::size_t kLatticeCap = 10;

// Every full discretization, sorted by image. Throws TooLarge beyond kDiscretizationCap.
std::vector<Discretization> all_discretizations(const FinSpace& x);

// Subsets of δX under inclusion.
FiniteLattice weak_lattice(const FinSpace& x);
// Subsets of X under inclusion.
FiniteLattice preweak_lattice(const FinSpace& x);

struct DiscretizationWitness {
  bool exists = false;
  std::optional<PointSet> witness;
  bool t1_route = false;  // decided by density of δX rather than exhaustive search
};
DiscretizationWitness has_discretization(const FinSpace& x);

enum class Comparison { Less, Greater, Equal, Incomparable };

// Every h: a.image → b.image with (inclusion of b) ∘ h = (inclusion of a),
// each as an index table into b.image's points.
std::vector<std::vector<std::size_t>> connecting_maps(const Discretization& a, const Discretization& b);
Comparison compare(const Discretization& a, const Discretization& b);

// d(X): the least size of a dense subset.
std::size_t density(const FinSpace& x);

struct DensityCheck {
  std::size_t density = 0;
  std::size_t discretizations = 0;
  bool verified = false;  // every full discretization has |image| = d(X)
};
DensityCheck density_check(const FinSpace& x);

struct ProductDiscretization {
  Product product;
  Discretization discretization;
};
// Throws NotADiscretization unless both inputs are full discretizations.
ProductDiscretization product_discretization(const FinSpace& x, const Discretization& dx,
                                             const FinSpace& y, const Discretization& dy);

struct DualityVerdict {
  bool is_compactification = false;
  bool is_discretization = false;
};
// f: X → Y with X discrete and Y Hausdorff (finite, so compact). Evaluates the
// compactification and discretization conditions separately. Throws
// HypothesisViolated otherwise.
DualityVerdict compactification_discretization_duality(const PointMap& f);

}  // namespace topolab
