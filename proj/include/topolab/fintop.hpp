#pragma once

// Finite topological spaces stored extensionally: every open set is kept as a
// PointSet, sorted ascending by bit value. Alongside the open family each space
// caches the minimal open neighbourhood of every point, which is what most
// predicates actually consult.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "topolab/errors.hpp"
#include "topolab/pointset.hpp"

namespace topolab {

class FinSpace {
 public:
  // The empty space: no points, opens {∅}.
  FinSpace();

  // Validates that `opens` is a topology on n points (contains ∅ and the full
  // set, closed under ∪ and ∩, no duplicates). Throws NotATopology.
  static FinSpace from_opens(std::size_t n, std::vector<PointSet> opens);
  // Builds the topology whose minimal neighbourhoods are `nbhd`. Requires
  // x ∈ nbhd[x] and y ∈ nbhd[x] ⇒ nbhd[y] ⊆ nbhd[x].
  static FinSpace from_neighbourhoods(std::size_t n, std::vector<PointSet> nbhd);

  static FinSpace discrete(std::size_t n);
  static FinSpace anti_discrete(std::size_t n);
  // Points {0,1}; opens {∅,{0},{0,1}}.
  static FinSpace sierpinski();

  std::size_t size() const { return n_; }
  PointSet points() const { return PointSet::full(n_); }
  const std::vector<PointSet>& opens() const { return opens_; }
  std::vector<PointSet> closed_sets() const;
  // Smallest open set containing x.
  PointSet neighbourhood(std::size_t x) const { return nbhd_[x]; }
  const std::vector<PointSet>& neighbourhoods() const { return nbhd_; }

  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(s.complement_in(n_)); }
  bool valid_subset(PointSet s) const { return s.subset_of(points()); }

  bool operator==(const FinSpace& other) const { return n_ == other.n_ && opens_ == other.opens_; }
  std::strong_ordering operator<=>(const FinSpace& other) const;

 private:
  FinSpace(std::size_t n, std::vector<PointSet> opens, std::vector<PointSet> nbhd)
      : n_(n), opens_(std::move(opens)), nbhd_(std::move(nbhd)) {}

  std::size_t n_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> nbhd_;
};

// A map between point sets, stored as an index table. The domain of a map out
// of a bare index set is the discrete space on that set.
struct PointMap {
  FinSpace domain;
  FinSpace codomain;
  std::vector<std::size_t> table;

  // Throws InvalidMap when the table is the wrong length or leaves the codomain.
  PointMap(FinSpace domain, FinSpace codomain, std::vector<std::size_t> table);

  static PointMap identity(const FinSpace& x);
  static PointMap inclusion(const FinSpace& ambient, PointSet image);

  std::size_t operator()(std::size_t x) const { return table[x]; }
  PointSet image(PointSet s) const;
  PointSet image() const { return image(domain.points()); }
  PointSet preimage(PointSet s) const;
  bool is_injective() const;
  bool is_surjective() const { return image() == codomain.points(); }
};

// g ∘ f; requires f.codomain to have g.domain's size.
PointMap compose(const PointMap& g, const PointMap& f);

// Partition of {0..n-1}. Blocks are numbered in order of their smallest
// element, so equal partitions have equal representations.
class Partition {
 public:
  Partition() = default;
  // Any labelling; relabelled canonically.
  static Partition from_labels(std::span<const std::size_t> labels);
  // Throws InvalidSet unless the blocks are nonempty, disjoint and cover 0..n-1.
  static Partition from_blocks(std::size_t n, std::vector<PointSet> blocks);
  static Partition discrete(std::size_t n);
  // One block (or none when n == 0).
  static Partition trivial(std::size_t n);

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_of(std::size_t x) const { return block_of_[x]; }
  const std::vector<std::size_t>& labels() const { return block_of_; }
  const std::vector<PointSet>& blocks() const { return blocks_; }
  PointSet block(std::size_t b) const { return blocks_[b]; }
  bool is_discrete() const { return blocks_.size() == block_of_.size(); }

  // Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition& other) const { return block_of_ <=> other.block_of_; }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<PointSet> blocks_;
};

// All partitions of {0..n-1} in lexicographic order of restricted growth strings.
std::vector<Partition> all_partitions(std::size_t n);

// Smallest topology containing the generators. Throws InvalidGenerator when a
// generator leaves {0..n-1}, TooLarge when n exceeds the point cap.
FinSpace make_space(std::size_t n, std::span<const PointSet> generators);

PointSet closure(const FinSpace& x, PointSet s);
PointSet interior(const FinSpace& x, PointSet s);

struct Subspace {
  FinSpace space;
  // Index in the ambient space of each subspace point.
  std::vector<std::size_t> to_ambient;
};
Subspace subspace(const FinSpace& x, PointSet s);

struct Product {
  FinSpace space;
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::size_t index(std::size_t i, std::size_t j) const { return i * right_size + j; }
  PointSet box(PointSet u, PointSet v) const;
  PointMap left_projection(const FinSpace& left) const;
  PointMap right_projection(const FinSpace& right) const;
};
// Row-major point order. Throws TooLarge when |X|·|Y| exceeds the point cap.
Product product(const FinSpace& x, const FinSpace& y);

struct Quotient {
  FinSpace space;
  PointMap q;
};
Quotient quotient(const FinSpace& x, const Partition& p);

// X ⊔ Y with Y's points shifted by |X|.
FinSpace disjoint_sum(const FinSpace& x, const FinSpace& y);
// Z ∪ D with D = k fresh points: U is open iff U ⊆ D or U = V ∪ D with V open
// in Z. D is an open dense discrete subspace.
FinSpace adjoin_dense_discrete(const FinSpace& z, std::size_t k);

// Specialization preorder: leq(x, y) iff x ∈ cl{y}.
class Preorder {
 public:
  explicit Preorder(std::vector<PointSet> above) : above_(std::move(above)) {}
  bool leq(std::size_t x, std::size_t y) const { return above_[x].contains(y); }
  PointSet above(std::size_t x) const { return above_[x]; }
  std::size_t size() const { return above_.size(); }

 private:
  std::vector<PointSet> above_;
};
Preorder specialization(const FinSpace& x);

// Atoms of the clopen algebra.
Partition components(const FinSpace& x);
// Connected components of the comparability graph of the specialization order.
Partition components_by_comparability(const FinSpace& x);

bool is_continuous(const PointMap& f);
bool is_embedding(const PointMap& f);
bool has_dense_range(const PointMap& f);
bool has_open_range(const PointMap& f);
bool is_homeomorphism(const PointMap& f);

// A bijection h with h a homeomorphism X → Y, if one exists.
std::optional<std::vector<std::size_t>> find_homeomorphism(const FinSpace& x, const FinSpace& y);
inline bool are_homeomorphic(const FinSpace& x, const FinSpace& y) {
  return find_homeomorphism(x, y).has_value();
}

inline constexpr std::size_t kEnumerationCap = 5;
// Every topology on n labelled points, in canonical order. Throws TooLarge
// for n > kEnumerationCap.
std::vector<FinSpace> enumerate_topologies(std::size_t n);
void for_each_topology(std::size_t n, const std::function<void(const FinSpace&)>& visit);

// Deterministic per (n, seed).
FinSpace random_space(std::size_t n, std::uint64_t seed);

}  // namespace topolab
