#pragma once

// Closed ideals of C_0(X) through the open-set dictionary U ↦ I(U), the
// functions vanishing off U. Predicates are evaluated on the dictionary side
// for any finite space. The literal vector model (ℚ^n with pointwise
// operations) is attached only when X is finite discrete, which is the only
// finite case where X is locally compact Hausdorff.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topolab/fintop.hpp"
#include "topolab/lattice.hpp"
#include "topolab/rational.hpp"

namespace topolab {

struct IdealDescriptor {
  PointSet support;
  std::size_t point_count = 0;
  std::optional<RationalSubspace> concrete;
};

inline constexpr std::size_t kConcreteCap = 8;

bool concrete_model_applies(const FinSpace& x);

// Throws NotOpen unless u is open in X.
IdealDescriptor ideal_of_open(const FinSpace& x, PointSet u);
// {x : f(x) ≠ 0 for some f in the ideal}.
PointSet open_of_ideal(const IdealDescriptor& d);
bool ideal_contained(const IdealDescriptor& a, const IdealDescriptor& b);

struct ProjectionSet {
  std::vector<PointSet> minimal_projections;
};
// Singletons of U that are clopen in U. Throws NotOpen.
ProjectionSet minimal_projections(const FinSpace& x, PointSet u);
// Minimal nonzero 0/1 vectors of the concrete ideal, by exhaustion over
// supports. Requires the concrete model.
ProjectionSet minimal_projections_concrete(const FinSpace& x, PointSet u);

// Dictionary form: U with the subspace topology is discrete. Throws NotOpen.
bool is_gmp(const FinSpace& x, PointSet u);
// Span/product closure of the minimal projections equals I(U). Empty when
// the concrete model does not apply.
std::optional<bool> is_gmp_concrete(const FinSpace& x, PointSet u);

// Dictionary form: U dense. Throws NotOpen.
bool is_essential(const FinSpace& x, PointSet u);
// Every nonempty open set meets U.
bool is_essential_by_opens(const FinSpace& x, PointSet u);
// I(U) ∩ K ≠ 0 for all 2^n nonzero ideals K of the vector model.
std::optional<bool> is_essential_concrete(const FinSpace& x, PointSet u);

// Open sets whose ideal is generated by minimal projections, ordered by
// ideal containment.
FiniteLattice gmp_ideal_lattice(const FinSpace& x);

struct IdealMapReport {
  bool ok = true;
  std::size_t weak_discretizations = 0;
  std::size_t gmp_ideals = 0;
  std::string counterexample;
};
// Weak discretizations (subsets of δX) map bijectively onto gmp ideals, and
// Y ⊆ Z ⇔ I(Y) ⊆ I(Z) for every pair.
IdealMapReport verify_ideal_map(const FinSpace& x);

struct EssentialGmp {
  std::optional<IdealDescriptor> ideal;
  std::size_t candidates = 0;        // opens that are both gmp and essential
  bool hypothesis_violated = false;  // X is not Hausdorff
};
// Throws InternalInvariantViolation if more than one candidate exists.
EssentialGmp essential_gmp(const FinSpace& x);

struct GenerationVerdict {
  bool dictionary = false;
  std::optional<bool> concrete;
};
// C_0(X) generated by its minimal projections.
GenerationVerdict generated_by_minimal_projections(const FinSpace& x);
// C_0(X) generated by its projections (indicators of clopen sets).
GenerationVerdict generated_by_projections(const FinSpace& x);

}  // namespace topolab
