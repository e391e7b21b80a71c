#pragma once

// Two fixed countable spaces on ℕ = {1, 2, 3, ...}: ℕ itself (discrete) and
// ℕ ∪ {∞}, its one-point compactification. Subsets are eventually periodic
// sets of naturals (a periodic pattern plus finitely many exceptions),
// optionally with ∞. That class holds every finite and cofinite set and the
// even numbers, and is closed under the Boolean operations.
//
// The finite half of the module implements the isolated-points functor δ and
// the Stone–Čech functor β on finite discrete spaces, where β is the identity.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "topolab/fintop.hpp"

namespace topolab {

class SymSet {
 public:
  using Residue = std::pair<std::uint64_t, std::uint64_t>;  // {a, m}: naturals ≡ a (mod m)

  // The empty set.
  SymSet();
  // (∪ residue classes ∪ plus) \ minus, with ∞ when `infinity`. Throws
  // InvalidSet on a zero modulus, a residue ≥ its modulus, a zero element, or
  // a combined period beyond kMaxPeriod.
  static SymSet from_parts(const std::vector<Residue>& residues, const std::vector<std::uint64_t>& plus,
                           const std::vector<std::uint64_t>& minus, bool infinity);
  static SymSet finite(const std::vector<std::uint64_t>& elements) { return from_parts({}, elements, {}, false); }
  static SymSet naturals() { return from_parts({{0, 1}}, {}, {}, false); }
  // {k, k+1, ...}
  static SymSet tail_from(std::uint64_t k);
  static SymSet evens() { return from_parts({{0, 2}}, {}, {}, false); }
  static SymSet infinity_point() { return from_parts({}, {}, {}, true); }

  static constexpr std::uint64_t kMaxPeriod = 1'000'000;

  bool contains(std::uint64_t k) const;
  bool contains_infinity() const { return infinity_; }
  // Whether the trace on ℕ is infinite / cofinite.
  bool trace_infinite() const;
  bool trace_cofinite() const;
  bool empty() const { return !infinity_ && !trace_infinite() && flips_.empty(); }

  SymSet operator|(const SymSet& o) const;
  SymSet operator&(const SymSet& o) const;
  SymSet operator-(const SymSet& o) const;
  // Complement in ℕ ∪ {∞}.
  SymSet complement() const;
  SymSet trace() const;  // drops ∞
  bool subset_of(const SymSet& o) const { return (*this - o).empty(); }

  // Canonical description: residues share the minimal period; plus are the
  // finite additions, minus the finite removals.
  std::vector<Residue> residues() const;
  std::vector<std::uint64_t> plus() const;
  std::vector<std::uint64_t> minus() const;
  std::string to_string() const;

  bool operator==(const SymSet&) const = default;

 private:
  template <typename Op>
  SymSet combine(const SymSet& o, Op op) const;
  void normalise();
  bool pattern_has(std::uint64_t k) const { return pattern_[k % period_]; }

  std::uint64_t period_ = 1;
  std::vector<bool> pattern_{false};
  std::set<std::uint64_t> flips_;  // naturals whose membership differs from the pattern
  bool infinity_ = false;
};

enum class SymKind { NatDiscrete, NatPlusInfinity };

// Throws InvalidSet when S mentions ∞ in the discrete space.
void validate(SymKind x, const SymSet& s);
SymSet whole_space(SymKind x);
bool sym_is_open(SymKind x, const SymSet& s);
SymSet sym_closure(SymKind x, const SymSet& s);
SymSet sym_isolated(SymKind x);
bool sym_is_dense(SymKind x, const SymSet& s);
inline bool sym_is_alpha_scattered(SymKind x) { return sym_is_dense(x, sym_isolated(x)); }

struct ClosureVerdict {
  SymSet set;
  SymSet closure;
  bool closure_open = false;
};
// Closure of an open set in ℕ ∪ {∞} and whether it is open again.
ClosureVerdict closure_openness(const SymSet& u);

struct NotStoneanWitness {
  ClosureVerdict verdict;           // for U = the even numbers
  bool extremally_disconnected = true;
  bool alpha_scattered = false;
};
NotStoneanWitness not_stonean_witness();

struct BetaDeltaReport {
  bool representable = false;
  std::string reason;
};
// What β(δ(X)) is for the symbolic spaces, or why it cannot be built here.
BetaDeltaReport beta_of_delta(SymKind x);

// ---- δ and β on finite spaces ----------------------------------------------

// δX as a discrete subspace together with its inclusion indices.
Subspace delta_object(const FinSpace& x);

struct DeltaMorphism {
  Subspace domain;
  Subspace codomain;
  PointMap map;  // δX → δY
};
// Throws NotACMorphism unless f is continuous with f(δX) ⊆ δY.
DeltaMorphism delta_functor(const PointMap& f);

// Finite discrete X is its own Stone–Čech compactification. Throws
// OutOfComputableSlice for anything that is not finite discrete.
FinSpace beta_finite(const FinSpace& x);
// f between finite discrete spaces, extended to the compactifications.
PointMap beta_morphism(const PointMap& f);

struct FunctorCheckRecord {
  std::vector<FinSpace> objects;
  std::vector<PointMap> morphisms;
  bool squares_ok = false;
  std::string failure;
};
// δβ ≅ id and βδ ≅ id on every object, naturality squares for every
// morphism, and δ functoriality on identities and composable pairs.
FunctorCheckRecord duality_check(std::vector<FinSpace> objects, std::vector<PointMap> morphisms);

}  // namespace topolab
