#pragma once

// Exact linear algebra over ℚ for functions on a finite set, i.e. vectors in
// ℚ^k with pointwise product. Used to check combinatorial descriptions of
// algebras and ideals against their literal span/product closures.

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topolab/fintop.hpp"

namespace topolab {

using Rational = boost::multiprecision::cpp_rational;
using Vector = std::vector<Rational>;

Vector unit_vector(std::size_t k);                  // all ones
Vector indicator(std::size_t k, PointSet s);
Vector pointwise_product(const Vector& a, const Vector& b);

// A subspace of ℚ^k kept in reduced row-echelon form, so equal subspaces
// have equal bases.
class RationalSubspace {
 public:
  explicit RationalSubspace(std::size_t k) : k_(k) {}

  std::size_t ambient_dimension() const { return k_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }

  bool contains(const Vector& v) const;
  // Returns true if v was not already in the span.
  bool add(const Vector& v);
  bool contains(const RationalSubspace& other) const;
  bool operator==(const RationalSubspace& other) const { return k_ == other.k_ && rows_ == other.rows_; }

  // dim(A ∩ B) = dim A + dim B − dim(A + B).
  std::size_t intersection_dimension(const RationalSubspace& other) const;

 private:
  Vector reduce(Vector v) const;

  std::size_t k_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// Smallest subspace containing the generators (and the unit, when asked)
// closed under pointwise product. Conjugation is the identity on ℚ.
RationalSubspace generated_algebra(std::size_t k, std::span<const Vector> generators, bool with_unit);

// Functions on {0..k-1} constant on each block of p.
RationalSubspace constant_on_blocks(const Partition& p);
// Functions vanishing outside s.
RationalSubspace vanishing_outside(std::size_t k, PointSet s);

// x ~ y iff every generator takes the same value at x and y.
Partition kernel_partition(std::size_t k, std::span<const Vector> generators);

}  // namespace topolab
