#include "topolab/classify.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace topolab {

namespace {

constexpr std::size_t kBruteForceCap = 16;

void require_brute_force_size(const FinSpace& x) {
  if (x.size() > kBruteForceCap)
    throw Error(ErrorKind::TooLarge, "brute-force path supports at most " + std::to_string(kBruteForceCap) + " points");
}

// Maps the isolated points of a subspace back to ambient indices.
PointSet isolated_in_subspace(const FinSpace& x, PointSet s) {
  const Subspace sub = subspace(x, s);
  PointSet out;
  for (auto i : isolated_points(sub.space)) out = out.with(sub.to_ambient[i]);
  return out;
}

AlphaResult finish_alpha(const FinSpace& x, std::vector<PointSet> opens) {
  AlphaResult result{FinSpace::from_opens(x.size(), std::move(opens)), {}};
  for (auto u : result.alpha_space.opens()) {
    if (!x.is_open(u)) result.added.push_back(u);
  }
  return result;
}

}  // namespace

PointSet isolated_points(const FinSpace& x) {
  PointSet out;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x.is_open(PointSet::singleton(p))) out = out.with(p);
  }
  return out;
}

bool is_dense(const FinSpace& x, PointSet s) { return closure(x, s) == x.points(); }

bool is_nowhere_dense(const FinSpace& x, PointSet s) { return interior(x, closure(x, s)).empty(); }

AlphaResult alpha_topology(const FinSpace& x) {
  if (x.size() > point_cap()) throw Error(ErrorKind::TooLarge, "alpha topology over too many points");
  std::vector<PointSet> opens;
  const Mask limit = Mask{1} << x.size();
  for (Mask bits = 0; bits < limit; ++bits) {
    const PointSet s(bits);
    if (s.subset_of(interior(x, closure(x, interior(x, s))))) opens.push_back(s);
  }
  return finish_alpha(x, std::move(opens));
}

AlphaResult alpha_topology_by_difference(const FinSpace& x) {
  require_brute_force_size(x);
  std::vector<PointSet> nowhere_dense;
  const Mask limit = Mask{1} << x.size();
  for (Mask bits = 0; bits < limit; ++bits) {
    if (is_nowhere_dense(x, PointSet(bits))) nowhere_dense.push_back(PointSet(bits));
  }
  std::set<PointSet> family;
  for (auto u : x.opens()) {
    for (auto nd : nowhere_dense) family.insert(u - nd);
  }
  return finish_alpha(x, {family.begin(), family.end()});
}

bool alpha_is_idempotent(const FinSpace& x) {
  const AlphaResult once = alpha_topology(x);
  return alpha_topology(once.alpha_space).alpha_space == once.alpha_space;
}

CBRecord cb_derivative(const FinSpace& x) {
  CBRecord rec;
  PointSet current = x.points();
  rec.derivatives.push_back(current);
  for (;;) {
    const PointSet iso = isolated_in_subspace(x, current);
    if (iso.empty()) break;
    current = current - iso;
    rec.derivatives.push_back(current);
    ++rec.rank;
  }
  rec.scattered = current.empty();
  return rec;
}

bool is_scattered_by_subspaces(const FinSpace& x) {
  require_brute_force_size(x);
  const Mask limit = Mask{1} << x.size();
  for (Mask bits = 1; bits < limit; ++bits) {
    if (isolated_in_subspace(x, PointSet(bits)).empty()) return false;
  }
  return true;
}

bool is_alpha_scattered(const FinSpace& x) { return is_dense(x, isolated_points(x)); }

bool is_alpha_scattered_by_definition(const FinSpace& x) {
  return is_scattered(alpha_topology_by_difference(x).alpha_space);
}

bool somewhere_dense_subspaces_have_isolated_points(const FinSpace& x) {
  require_brute_force_size(x);
  const Mask limit = Mask{1} << x.size();
  for (Mask bits = 1; bits < limit; ++bits) {
    const PointSet s(bits);
    if (is_somewhere_dense(x, s) && isolated_in_subspace(x, s).empty()) return false;
  }
  return true;
}

SeparationFlags separation(const FinSpace& x) {
  const std::size_t n = x.size();
  SeparationFlags flags{true, true, true, false, true, true, false};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool a_sees_b = x.neighbourhood(a).contains(b);
      const bool b_sees_a = x.neighbourhood(b).contains(a);
      if (a_sees_b && b_sees_a) flags.t0 = false;
      if (a_sees_b || b_sees_a) flags.t1 = false;
      if (x.neighbourhood(a).intersects(x.neighbourhood(b))) flags.t2 = false;
    }
  }
  flags.completely_hausdorff = components(x).is_discrete();

  std::vector<PointSet> clopens;
  for (auto u : x.opens()) {
    if (x.is_closed(u)) clopens.push_back(u);
  }
  for (auto u : x.opens()) {
    PointSet covered;
    for (auto c : clopens) {
      if (c.subset_of(u)) covered |= c;
    }
    if (covered != u) {
      flags.zero_dimensional = false;
      break;
    }
  }
  for (auto u : x.opens()) {
    if (!x.is_open(closure(x, u))) {
      flags.extremally_disconnected = false;
      break;
    }
  }
  // Finite spaces are compact.
  flags.stonean = flags.t2 && flags.extremally_disconnected;
  return flags;
}

}  // namespace topolab
