#include "topolab/compactify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "topolab/classify.hpp"

namespace topolab {

Partition FnAlgebra::point_partition() const {
  std::vector<std::size_t> labels(base.size());
  for (std::size_t x = 0; x < labels.size(); ++x) labels[x] = sub.block_of(base.block_of(x));
  return Partition::from_labels(labels);
}

bool FnAlgebra::contains(std::span<const Rational> values) const {
  if (values.size() != point_count()) return false;
  const Partition pp = point_partition();
  for (auto block : pp.blocks()) {
    const Rational& v = values[block.first()];
    for (auto x : block) {
      if (values[x] != v) return false;
    }
  }
  return true;
}

FnAlgebra full_algebra(const FinSpace& x) {
  Partition comps = components(x);
  const std::size_t k = comps.block_count();
  return {std::move(comps), Partition::discrete(k)};
}

FnAlgebra constant_algebra(const FinSpace& x) {
  Partition comps = components(x);
  const std::size_t k = comps.block_count();
  return {std::move(comps), Partition::trivial(k)};
}

bool algebra_contained(const FnAlgebra& a, const FnAlgebra& b) {
  return a.base == b.base && b.sub.refines(a.sub);
}

HausdorffCriteria hausdorff_criteria(const FinSpace& x, const Partition& p) {
  HausdorffCriteria c;
  c.quotient_t2 = separation(quotient(x, p).space).t2;
  c.blocks_open = std::all_of(p.blocks().begin(), p.blocks().end(), [&](PointSet b) { return x.is_open(b); });
  // The complement of R is open in X × X iff it contains the basic box
  // N(a) × N(b) around each of its points.
  c.relation_closed = true;
  for (std::size_t a = 0; a < x.size() && c.relation_closed; ++a) {
    for (std::size_t b = 0; b < x.size() && c.relation_closed; ++b) {
      if (p.block_of(a) == p.block_of(b)) continue;
      for (auto a2 : x.neighbourhood(a)) {
        for (auto b2 : x.neighbourhood(b)) {
          if (p.block_of(a2) == p.block_of(b2)) c.relation_closed = false;
        }
      }
    }
  }
  return c;
}

std::vector<PreweakCompactification> hausdorff_quotients(const FinSpace& x) {
  if (x.size() > kQuotientCap) throw Error(ErrorKind::TooLarge, "too many points to enumerate partitions");
  std::vector<PreweakCompactification> out;
  for (auto& p : all_partitions(x.size())) {
    const HausdorffCriteria c = hausdorff_criteria(x, p);
    if (c.quotient_t2 != c.blocks_open || c.blocks_open != c.relation_closed)
      throw Error(ErrorKind::InternalInvariantViolation, "Hausdorff criteria disagree on " + p.to_string());
    if (!c.quotient_t2) continue;
    Quotient q = quotient(x, p);
    out.push_back({p, std::move(q.space), std::move(q.q)});
  }
  return out;
}

FnAlgebra range_algebra(const FinSpace& x, const PreweakCompactification& pc) {
  Partition comps = components(x);
  std::vector<std::size_t> labels(comps.block_count());
  for (std::size_t c = 0; c < comps.block_count(); ++c) {
    const PointSet comp = comps.block(c);
    const std::size_t b = pc.partition.block_of(comp.first());
    if (!comp.subset_of(pc.partition.block(b)))
      throw Error(ErrorKind::InternalInvariantViolation, "quotient block is not a union of components");
    labels[c] = b;
  }
  return {std::move(comps), Partition::from_labels(labels)};
}

std::vector<FnAlgebra> all_subalgebras(const FinSpace& x) {
  const Partition comps = components(x);
  if (comps.block_count() > kSubalgebraCap) throw Error(ErrorKind::TooLarge, "too many components");
  std::vector<FnAlgebra> out;
  for (auto& p : all_partitions(comps.block_count())) out.push_back({comps, p});
  return out;
}

FiniteLattice subalgebra_lattice(const FinSpace& x) {
  const auto algebras = all_subalgebras(x);
  std::vector<std::string> labels;
  for (const auto& a : algebras) labels.push_back(a.point_partition().to_string());
  return FiniteLattice(std::move(labels), [&](std::size_t i, std::size_t j) {
    return algebra_contained(algebras[i], algebras[j]);
  });
}

std::vector<std::vector<std::size_t>> factor_maps(const PreweakCompactification& from,
                                                  const PreweakCompactification& to) {
  const std::size_t m = from.quotient.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> h(m);
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == m) {
      PointMap candidate(from.quotient, to.quotient, h);
      if (is_continuous(candidate)) out.push_back(h);
      return;
    }
    for (std::size_t z = 0; z < to.quotient.size(); ++z) {
      bool consistent = true;
      for (auto x : from.partition.block(b)) consistent = consistent && to.q(x) == z;
      if (!consistent) continue;
      h[b] = z;
      rec(b + 1);
    }
  };
  rec(0);
  return out;
}

bool compactification_geq(const PreweakCompactification& a, const PreweakCompactification& b) {
  return !factor_maps(a, b).empty();
}

FiniteLattice compactification_lattice(const FinSpace& x) {
  const auto quotients = hausdorff_quotients(x);
  std::vector<std::string> labels;
  for (const auto& pc : quotients) labels.push_back(pc.partition.to_string());
  return FiniteLattice(labels, [&](std::size_t i, std::size_t j) { return compactification_geq(quotients[j], quotients[i]); });
}

ThrpreReport verify_thrpre(const FinSpace& x) {
  ThrpreReport report;
  const auto quotients = hausdorff_quotients(x);
  const auto algebras = all_subalgebras(x);
  report.quotients = quotients.size();
  report.subalgebras = algebras.size();
  auto fail = [&](std::string why) {
    report.ok = false;
    if (report.counterexample.empty()) report.counterexample = std::move(why);
  };

  std::vector<FnAlgebra> images;
  for (const auto& pc : quotients) images.push_back(range_algebra(x, pc));

  // Bijectivity.
  std::set<Partition> hit;
  for (const auto& a : images) {
    if (!hit.insert(a.sub).second) fail("two quotients share the algebra " + a.point_partition().to_string());
  }
  for (const auto& a : algebras) {
    if (!hit.count(a.sub)) fail("algebra " + a.point_partition().to_string() + " is not a range algebra");
  }

  // Order: a ≤ b ⇔ F(a) ⊆ F(b), with factor maps unique when they exist.
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    for (std::size_t j = 0; j < quotients.size(); ++j) {
      const auto maps = factor_maps(quotients[j], quotients[i]);
      if (maps.size() > 1) fail("non-unique factor map " + quotients[j].partition.to_string() + " -> " + quotients[i].partition.to_string());
      const bool le = !maps.empty();
      if (le != algebra_contained(images[i], images[j]))
        fail("order mismatch between " + quotients[i].partition.to_string() + " and " + quotients[j].partition.to_string());
    }
  }
  if (report.ok) {
    // Both sides must be partial orders; the lattice constructor checks the axioms.
    try {
      const FiniteLattice compact = compactification_lattice(x);
      const FiniteLattice subalg = subalgebra_lattice(x);
      if (!compact.is_lattice() || !subalg.is_lattice()) fail("not a lattice");
      if (!order_isomorphism(compact, subalg)) fail("lattices are not order-isomorphic");
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return report;
}

bool subalgebra_span_oracle_agrees(std::size_t k, std::string* counterexample) {
  auto fail = [&](const std::string& why) {
    if (counterexample) *counterexample = why;
    return false;
  };
  const auto partitions = all_partitions(k);
  // One generator per partition: distinct values on distinct blocks.
  std::vector<Vector> labelling;
  for (const auto& p : partitions) {
    Vector g(k);
    for (std::size_t x = 0; x < k; ++x) g[x] = Rational(static_cast<long>(p.block_of(x) * p.block_of(x) + 2 * p.block_of(x) + 1), 3);
    labelling.push_back(std::move(g));
  }
  std::set<std::vector<Vector>> distinct;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    const Partition& p = partitions[i];
    std::vector<Vector> indicators;
    for (auto b : p.blocks()) indicators.push_back(indicator(k, b));
    const RationalSubspace generated = generated_algebra(k, indicators, true);
    if (!(generated == constant_on_blocks(p))) return fail("indicators of " + p.to_string() + " generate a different algebra");
    distinct.insert(generated.basis());
    for (std::size_t j = i; j < partitions.size(); ++j) {
      const std::vector<Vector> gens{labelling[i], labelling[j]};
      const Partition kernel = kernel_partition(k, gens);
      if (!(generated_algebra(k, gens, true) == constant_on_blocks(kernel)))
        return fail("generators of " + p.to_string() + " and " + partitions[j].to_string() + " miss their kernel algebra");
    }
  }
  if (distinct.size() != partitions.size()) return fail("span closure produced a different number of subalgebras");
  return true;
}

AlgebraSeparation separation_predicates(const FinSpace& x, const FnAlgebra& a) {
  AlgebraSeparation s;
  const Partition pp = a.point_partition();
  s.separates_points = pp.is_discrete();
  const std::size_t blocks = pp.block_count();
  if (blocks > 20) throw Error(ErrorKind::TooLarge, "too many level sets");
  s.separates_points_and_closed_sets = true;
  for (auto e : x.closed_sets()) {
    for (auto p : e.complement_in(x.size())) {
      bool separated = false;
      // Level-set patterns: unions of algebra classes containing p.
      for (Mask pattern = 0; pattern < (Mask{1} << blocks) && !separated; ++pattern) {
        if (!((pattern >> pp.block_of(p)) & 1U)) continue;
        PointSet w;
        for (std::size_t b = 0; b < blocks; ++b) {
          if ((pattern >> b) & 1U) w |= pp.block(b);
        }
        separated = !w.intersects(e);
      }
      if (!separated) {
        s.separates_points_and_closed_sets = false;
        return s;
      }
    }
  }
  return s;
}

CharacterSpace characters(const FnAlgebra& a) {
  CharacterSpace cs{a, {}};
  for (std::size_t b = 0; b < a.sub.block_count(); ++b) cs.characters.push_back(b);
  return cs;
}

Vector gelfand(const FnAlgebra& a, std::span<const Rational> element) {
  if (!a.contains(element)) throw Error(ErrorKind::NotInAlgebra, "element is not constant on the algebra's blocks");
  Vector out;
  for (std::size_t b = 0; b < a.sub.block_count(); ++b) {
    const std::size_t component = a.sub.block(b).first();
    out.push_back(element[a.base.block(component).first()]);
  }
  return out;
}

PointMap evaluation_map(const FinSpace& x) {
  const FnAlgebra a = full_algebra(x);
  std::vector<std::size_t> table(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) table[p] = a.sub.block_of(a.base.block_of(p));
  return PointMap(x, FinSpace::discrete(a.sub.block_count()), std::move(table));
}

bool induced_functor_check(std::span<const PointMap> maps, std::string* counterexample) {
  auto fail = [&](const std::string& why) {
    if (counterexample) *counterexample = why;
    return false;
  };
  for (const auto& f : maps) {
    if (!is_continuous(f)) return fail("map is not continuous");
    const FnAlgebra ax = full_algebra(f.domain);
    const FnAlgebra ay = full_algebra(f.codomain);
    const PointMap ev_x = evaluation_map(f.domain);
    const PointMap ev_y = evaluation_map(f.codomain);
    const std::size_t ky = ay.base.block_count();

    // G(f) applied to the basis of C(Y): indicator of each component, pulled back.
    std::vector<Vector> pulled;
    for (std::size_t d = 0; d < ky; ++d) {
      const Vector e = indicator(f.codomain.size(), ay.base.block(d));
      Vector back(f.domain.size());
      for (std::size_t p = 0; p < f.domain.size(); ++p) back[p] = e[f(p)];
      if (!ax.contains(back)) return fail("precomposition leaves C(X)");
      pulled.push_back(std::move(back));
    }
    // Character of C(X) at component c, transported: which character of C(Y)
    // has the same values on the basis?
    std::vector<std::size_t> transported(ax.base.block_count());
    for (std::size_t c = 0; c < ax.base.block_count(); ++c) {
      const std::size_t rep = ax.base.block(c).first();
      std::optional<std::size_t> match;
      for (std::size_t d = 0; d < ky; ++d) {
        bool same = true;
        for (std::size_t d2 = 0; d2 < ky; ++d2) same = same && pulled[d2][rep] == Rational(d2 == d ? 1 : 0);
        if (same) match = d;
      }
      if (!match) return fail("transported functional is not a character");
      transported[c] = *match;
    }
    for (std::size_t p = 0; p < f.domain.size(); ++p) {
      if (transported[ev_x(p)] != ev_y(f(p))) return fail("naturality square fails at point " + std::to_string(p));
    }
  }
  return true;
}

}  // namespace topolab
