#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace topolab {

// An explicit finite poset. Elements are dense ids with a display label; the
// order is stored as a full table. Construction checks the partial-order axioms.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  // Throws InternalInvariantViolation when `leq` is not reflexive,
  // antisymmetric and transitive over the given elements.
  FiniteLattice(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(std::size_t a, std::size_t b) const { return table_[a][b]; }

  std::optional<std::size_t> top() const { return top_; }
  std::optional<std::size_t> bottom() const { return bottom_; }
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  // Every pair has a meet and a join; for finite posets this is completeness.
  bool is_lattice() const;
  // Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  // Hasse diagram; node i is "n<i>" and edges point upward.
  std::string to_dot(std::string_view name = "lattice") const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> table_;
  std::optional<std::size_t> top_;
  std::optional<std::size_t> bottom_;
};

// A bijection h with a ≤ b ⇔ h(a) ≤ h(b), if one exists.
std::optional<std::vector<std::size_t>> order_isomorphism(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace topolab
