#include "topolab/rational.hpp"

#include <algorithm>
#include <map>

namespace topolab {

Vector unit_vector(std::size_t k) { return Vector(k, Rational(1)); }

Vector indicator(std::size_t k, PointSet s) {
  Vector v(k, Rational(0));
  for (auto p : s) {
    if (p < k) v[p] = 1;
  }
  return v;
}

Vector pointwise_product(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Vector RationalSubspace::reduce(Vector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t i = 0; i < k_; ++i) v[i] -= c * rows_[r][i];
  }
  return v;
}

bool RationalSubspace::contains(const Vector& v) const {
  const Vector rest = reduce(v);
  return std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return x == 0; });
}

bool RationalSubspace::add(const Vector& v) {
  if (v.size() != k_) throw Error(ErrorKind::InvalidSet, "vector has the wrong length");
  Vector rest = reduce(v);
  auto it = std::find_if(rest.begin(), rest.end(), [](const Rational& x) { return x != 0; });
  if (it == rest.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - rest.begin());
  const Rational scale = rest[pivot];
  for (auto& x : rest) x /= scale;
  // Clear the new pivot column from the existing rows.
  for (auto& row : rows_) {
    const Rational c = row[pivot];
    if (c == 0) continue;
    for (std::size_t i = 0; i < k_; ++i) row[i] -= c * rest[i];
  }
  rows_.push_back(std::move(rest));
  pivots_.push_back(pivot);
  // Keep rows sorted by pivot so the basis is canonical.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
  for (auto i : order) {
    rows.push_back(std::move(rows_[i]));
    pivots.push_back(pivots_[i]);
  }
  rows_ = std::move(rows);
  pivots_ = std::move(pivots);
  return true;
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(v); });
}

std::size_t RationalSubspace::intersection_dimension(const RationalSubspace& other) const {
  RationalSubspace sum = *this;
  for (const auto& v : other.rows_) sum.add(v);
  return dimension() + other.dimension() - sum.dimension();
}

RationalSubspace generated_algebra(std::size_t k, std::span<const Vector> generators, bool with_unit) {
  RationalSubspace space(k);
  if (with_unit) space.add(unit_vector(k));
  for (const auto& g : generators) space.add(g);
  // Close under products of basis vectors until the span stops growing.
  for (bool grew = true; grew;) {
    grew = false;
    const auto basis = space.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i; j < basis.size(); ++j) grew = space.add(pointwise_product(basis[i], basis[j])) || grew;
    }
  }
  return space;
}

RationalSubspace constant_on_blocks(const Partition& p) {
  RationalSubspace space(p.size());
  for (auto b : p.blocks()) space.add(indicator(p.size(), b));
  return space;
}

RationalSubspace vanishing_outside(std::size_t k, PointSet s) {
  RationalSubspace space(k);
  for (auto p : s) space.add(indicator(k, PointSet::singleton(p)));
  return space;
}

Partition kernel_partition(std::size_t k, std::span<const Vector> generators) {
  std::map<std::vector<Rational>, std::size_t> signature_ids;
  std::vector<std::size_t> labels(k);
  for (std::size_t x = 0; x < k; ++x) {
    std::vector<Rational> sig;
    for (const auto& g : generators) sig.push_back(g[x]);
    labels[x] = signature_ids.emplace(sig, signature_ids.size()).first->second;
  }
  return Partition::from_labels(labels);
}

}  // namespace topolab
