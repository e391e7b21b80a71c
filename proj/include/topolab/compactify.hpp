#pragma once

// Finite model of compactifications and the function algebra C(X).
//
// For finite X every continuous complex function is constant on the
// components of X, and any such function is continuous, so C(X) is the
// algebra of functions on the component set. Its unital *-subalgebras are
// exactly the algebras of functions constant on the blocks of a partition of
// the components. A preweak compactification of finite X is a continuous
// surjection onto a finite discrete space, i.e. a Hausdorff quotient.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topolab/fintop.hpp"
#include "topolab/lattice.hpp"
#include "topolab/rational.hpp"

namespace topolab {

struct FnAlgebra {
  Partition base;  // points of X into components
  Partition sub;   // components into blocks a member function must be constant on

  std::size_t point_count() const { return base.size(); }
  // x ~ y iff every member function agrees at x and y.
  Partition point_partition() const;
  // `values` holds one value per point of X.
  bool contains(std::span<const Rational> values) const;
};

FnAlgebra full_algebra(const FinSpace& x);
FnAlgebra constant_algebra(const FinSpace& x);
// A ⊆ B.
bool algebra_contained(const FnAlgebra& a, const FnAlgebra& b);

struct PreweakCompactification {
  Partition partition;
  FinSpace quotient;
  PointMap q;

  bool injective() const { return q.is_injective(); }
};

struct HausdorffCriteria {
  bool quotient_t2 = false;
  bool blocks_open = false;
  bool relation_closed = false;  // {(x,y) : same block} closed in X × X
};
HausdorffCriteria hausdorff_criteria(const FinSpace& x, const Partition& p);

inline constexpr std::size_t kQuotientCap = 8;

// Every Hausdorff quotient of X in partition order. Throws TooLarge beyond
// kQuotientCap points and InternalInvariantViolation if the three Hausdorff
// criteria ever disagree.
std::vector<PreweakCompactification> hausdorff_quotients(const FinSpace& x);

// The range of precomposition with q: functions constant on the blocks of
// the quotient partition. Throws InternalInvariantViolation when a block is
// not a union of components.
FnAlgebra range_algebra(const FinSpace& x, const PreweakCompactification& pc);

inline constexpr std::size_t kSubalgebraCap = 8;

// All unital *-subalgebras of C(X), one per partition of the components.
std::vector<FnAlgebra> all_subalgebras(const FinSpace& x);
FiniteLattice subalgebra_lattice(const FinSpace& x);

// Continuous maps h: from.quotient → to.quotient with h ∘ from.q = to.q.
std::vector<std::vector<std::size_t>> factor_maps(const PreweakCompactification& from,
                                                  const PreweakCompactification& to);
// a ≥ b: some continuous h satisfies h ∘ a.q = b.q.
bool compactification_geq(const PreweakCompactification& a, const PreweakCompactification& b);
// Hausdorff quotients ordered by a ≤ b ⇔ b ≥ a, labelled by their partitions.
FiniteLattice compactification_lattice(const FinSpace& x);

struct ThrpreReport {
  bool ok = true;
  std::size_t quotients = 0;
  std::size_t subalgebras = 0;
  std::string counterexample;
};
// The range-algebra map is a bijection from Hausdorff quotients onto
// subalgebras, and a ≤ b ⇔ range(a) ⊆ range(b) for every pair.
ThrpreReport verify_thrpre(const FinSpace& x);

// Subalgebra generated by each partition's block indicators, computed by
// exact span/product closure, equals the partition representation. Also
// checks that arbitrary generator sets land on their kernel partition.
bool subalgebra_span_oracle_agrees(std::size_t k, std::string* counterexample = nullptr);

struct AlgebraSeparation {
  bool separates_points = false;
  bool separates_points_and_closed_sets = false;
};
AlgebraSeparation separation_predicates(const FinSpace& x, const FnAlgebra& a);

struct CharacterSpace {
  FnAlgebra algebra;
  // One evaluation functional per sub-block, identified by the block id.
  std::vector<std::size_t> characters;
};
CharacterSpace characters(const FnAlgebra& a);
// Values of an element (one value per point) on each character. Throws NotInAlgebra.
Vector gelfand(const FnAlgebra& a, std::span<const Rational> element);
// X → characters of C(X), the latter as a discrete space.
PointMap evaluation_map(const FinSpace& x);

// For G(X) = C(X) and G(f) = precomposition, checks that the character map
// of G(f) composed with evaluation on X equals evaluation on Y composed with
// f, pointwise, for every listed map. Maps must be continuous.
bool induced_functor_check(std::span<const PointMap> maps, std::string* counterexample = nullptr);

}  // namespace topolab
