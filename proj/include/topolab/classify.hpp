#pragma once

#include <cstddef>
#include <vector>

#include "topolab/fintop.hpp"

namespace topolab {

// δX: points whose singleton is open.
PointSet isolated_points(const FinSpace& x);

bool is_dense(const FinSpace& x, PointSet s);
bool is_nowhere_dense(const FinSpace& x, PointSet s);
inline bool is_somewhere_dense(const FinSpace& x, PointSet s) { return !is_nowhere_dense(x, s); }

struct AlphaResult {
  FinSpace alpha_space;           // same points, the α-topology
  std::vector<PointSet> added;    // opens of the α-topology that are not open in X
};

// Fast path: S is α-open iff S ⊆ int(cl(int(S))).
AlphaResult alpha_topology(const FinSpace& x);
// Literal construction {U \ N : U open, N nowhere dense}. Exponential in |X|.
AlphaResult alpha_topology_by_difference(const FinSpace& x);
// Whether applying the α-construction twice gives nothing new; reported, not assumed.
bool alpha_is_idempotent(const FinSpace& x);

struct CBRecord {
  std::vector<PointSet> derivatives;  // X, X', X'', ... up to and including the fixed point
  std::size_t rank = 0;               // steps until the sequence stabilises
  bool scattered = false;             // stabilised at ∅
};

// Cantor–Bendixson sequence: strip the isolated points of the current
// subspace until nothing changes.
CBRecord cb_derivative(const FinSpace& x);
inline bool is_scattered(const FinSpace& x) { return cb_derivative(x).scattered; }
// Every nonempty subset has a point isolated in its subspace topology.
bool is_scattered_by_subspaces(const FinSpace& x);

// δX dense.
bool is_alpha_scattered(const FinSpace& x);
// The α-space is scattered.
bool is_alpha_scattered_by_definition(const FinSpace& x);
// Every somewhere-dense subset has a point isolated in its subspace.
bool somewhere_dense_subspaces_have_isolated_points(const FinSpace& x);

struct SeparationFlags {
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
  bool completely_hausdorff = false;
  bool zero_dimensional = false;
  bool extremally_disconnected = false;
  bool stonean = false;
};

SeparationFlags separation(const FinSpace& x);

}  // namespace topolab
