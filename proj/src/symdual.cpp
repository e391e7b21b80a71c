#include "topolab/symdual.hpp"

#include <algorithm>
#include <numeric>

#include "topolab/classify.hpp"

namespace topolab {

SymSet::SymSet() = default;

SymSet SymSet::from_parts(const std::vector<Residue>& residues, const std::vector<std::uint64_t>& plus,
                          const std::vector<std::uint64_t>& minus, bool infinity) {
  std::uint64_t period = 1;
  for (auto [a, m] : residues) {
    if (m == 0 || a >= m) throw Error(ErrorKind::InvalidSet, "residue " + std::to_string(a) + " mod " + std::to_string(m));
    period = std::lcm(period, m);
    if (period > kMaxPeriod) throw Error(ErrorKind::InvalidSet, "period too large");
  }
  for (auto k : plus) {
    if (k == 0) throw Error(ErrorKind::InvalidSet, "naturals start at 1");
  }
  for (auto k : minus) {
    if (k == 0) throw Error(ErrorKind::InvalidSet, "naturals start at 1");
  }
  SymSet s;
  s.period_ = period;
  s.pattern_.assign(period, false);
  for (auto [a, m] : residues) {
    for (std::uint64_t r = a; r < period; r += m) s.pattern_[r] = true;
  }
  s.infinity_ = infinity;
  std::set<std::uint64_t> members(plus.begin(), plus.end());
  const std::set<std::uint64_t> removed(minus.begin(), minus.end());
  for (auto k : removed) {
    if (s.pattern_has(k)) s.flips_.insert(k);
    members.erase(k);
  }
  for (auto k : members) {
    if (!s.pattern_has(k)) s.flips_.insert(k);
  }
  s.normalise();
  return s;
}

SymSet SymSet::tail_from(std::uint64_t k) {
  std::vector<std::uint64_t> head;
  for (std::uint64_t i = 1; i < k; ++i) head.push_back(i);
  return from_parts({{0, 1}}, {}, head, false);
}

void SymSet::normalise() {
  for (std::uint64_t d = 1; d < period_; ++d) {
    if (period_ % d != 0) continue;
    bool periodic = true;
    for (std::uint64_t r = 0; r < period_ && periodic; ++r) periodic = pattern_[r] == pattern_[r % d];
    if (periodic) {
      pattern_.resize(d);
      period_ = d;
      break;
    }
  }
}

bool SymSet::contains(std::uint64_t k) const {
  if (k == 0) return false;
  return pattern_has(k) != (flips_.count(k) > 0);
}

bool SymSet::trace_infinite() const { return std::find(pattern_.begin(), pattern_.end(), true) != pattern_.end(); }

bool SymSet::trace_cofinite() const { return std::find(pattern_.begin(), pattern_.end(), false) == pattern_.end(); }

template <typename Op>
SymSet SymSet::combine(const SymSet& o, Op op) const {
  const std::uint64_t period = std::lcm(period_, o.period_);
  if (period > kMaxPeriod) throw Error(ErrorKind::InvalidSet, "period too large");
  SymSet out;
  out.period_ = period;
  out.pattern_.assign(period, false);
  for (std::uint64_t r = 0; r < period; ++r) out.pattern_[r] = op(pattern_[r % period_], o.pattern_[r % o.period_]);
  // Outside the exception sets both operands follow their patterns.
  std::set<std::uint64_t> candidates = flips_;
  candidates.insert(o.flips_.begin(), o.flips_.end());
  for (auto k : candidates) {
    if (op(contains(k), o.contains(k)) != out.pattern_has(k)) out.flips_.insert(k);
  }
  out.infinity_ = op(infinity_, o.infinity_);
  out.normalise();
  return out;
}

SymSet SymSet::operator|(const SymSet& o) const { return combine(o, [](bool a, bool b) { return a || b; }); }
SymSet SymSet::operator&(const SymSet& o) const { return combine(o, [](bool a, bool b) { return a && b; }); }
SymSet SymSet::operator-(const SymSet& o) const { return combine(o, [](bool a, bool b) { return a && !b; }); }

SymSet SymSet::complement() const {
  SymSet out = *this;
  out.pattern_.flip();
  out.infinity_ = !infinity_;
  return out;
}

SymSet SymSet::trace() const {
  SymSet out = *this;
  out.infinity_ = false;
  return out;
}

std::vector<SymSet::Residue> SymSet::residues() const {
  std::vector<Residue> out;
  for (std::uint64_t r = 0; r < period_; ++r) {
    if (pattern_[r]) out.emplace_back(r, period_);
  }
  return out;
}

std::vector<std::uint64_t> SymSet::plus() const {
  std::vector<std::uint64_t> out;
  for (auto k : flips_) {
    if (!pattern_has(k)) out.push_back(k);
  }
  return out;
}

std::vector<std::uint64_t> SymSet::minus() const {
  std::vector<std::uint64_t> out;
  for (auto k : flips_) {
    if (pattern_has(k)) out.push_back(k);
  }
  return out;
}

std::string SymSet::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " ";
    out += part;
  };
  for (auto [a, m] : residues()) append(std::to_string(a) + "+" + std::to_string(m) + "N");
  for (auto k : plus()) append("+" + std::to_string(k));
  for (auto k : minus()) append("-" + std::to_string(k));
  if (infinity_) append("inf");
  return out.empty() ? "{}" : out;
}

// ---------------------------------------------------------------------------

void validate(SymKind x, const SymSet& s) {
  if (x == SymKind::NatDiscrete && s.contains_infinity())
    throw Error(ErrorKind::InvalidSet, "the discrete space has no point at infinity");
}

SymSet whole_space(SymKind x) {
  return x == SymKind::NatDiscrete ? SymSet::naturals() : SymSet::naturals() | SymSet::infinity_point();
}

bool sym_is_open(SymKind x, const SymSet& s) {
  validate(x, s);
  if (x == SymKind::NatDiscrete) return true;
  return !s.contains_infinity() || s.trace_cofinite();
}

SymSet sym_closure(SymKind x, const SymSet& s) {
  validate(x, s);
  if (x == SymKind::NatPlusInfinity && s.trace_infinite()) return s | SymSet::infinity_point();
  return s;
}

SymSet sym_isolated(SymKind) { return SymSet::naturals(); }

bool sym_is_dense(SymKind x, const SymSet& s) { return sym_closure(x, s) == whole_space(x); }

ClosureVerdict closure_openness(const SymSet& u) {
  ClosureVerdict v{u, sym_closure(SymKind::NatPlusInfinity, u), false};
  v.closure_open = sym_is_open(SymKind::NatPlusInfinity, v.closure);
  return v;
}

NotStoneanWitness not_stonean_witness() {
  NotStoneanWitness w{closure_openness(SymSet::evens()), true, false};
  if (!sym_is_open(SymKind::NatPlusInfinity, w.verdict.set))
    throw Error(ErrorKind::InternalInvariantViolation, "witness set must be open");
  w.extremally_disconnected = w.verdict.closure_open;
  w.alpha_scattered = sym_is_alpha_scattered(SymKind::NatPlusInfinity);
  return w;
}

BetaDeltaReport beta_of_delta(SymKind x) {
  if (x == SymKind::NatDiscrete)
    return {false, "delta(N) = N; beta(N) is an ultrafilter space and is not modelled"};
  const NotStoneanWitness w = not_stonean_witness();
  std::string reason = "delta(N u {inf}) = N, so beta(delta X) = beta N, which is not X: X is ";
  reason += w.alpha_scattered ? "alpha-scattered" : "not alpha-scattered";
  reason += w.extremally_disconnected ? "" : " but not Stonean (closure of the even numbers is not open)";
  return {false, reason};
}

// ---------------------------------------------------------------------------

Subspace delta_object(const FinSpace& x) { return subspace(x, isolated_points(x)); }

DeltaMorphism delta_functor(const PointMap& f) {
  if (!is_continuous(f)) throw Error(ErrorKind::NotACMorphism, "map is not continuous");
  Subspace dom = delta_object(f.domain);
  Subspace cod = delta_object(f.codomain);
  std::vector<std::size_t> table;
  for (auto p : dom.to_ambient) {
    const auto it = std::find(cod.to_ambient.begin(), cod.to_ambient.end(), f(p));
    if (it == cod.to_ambient.end())
      throw Error(ErrorKind::NotACMorphism, "isolated point " + std::to_string(p) + " maps to a non-isolated point");
    table.push_back(static_cast<std::size_t>(it - cod.to_ambient.begin()));
  }
  PointMap map(dom.space, cod.space, std::move(table));
  return {std::move(dom), std::move(cod), std::move(map)};
}

FinSpace beta_finite(const FinSpace& x) {
  const SeparationFlags flags = separation(x);
  const bool in_slice = flags.stonean && is_alpha_scattered(x);
  const bool discrete = x == FinSpace::discrete(x.size());
  if (in_slice != discrete)
    throw Error(ErrorKind::InternalInvariantViolation, "finite Stonean alpha-scattered space that is not discrete");
  if (!discrete) throw Error(ErrorKind::OutOfComputableSlice, "beta is only computed on finite discrete spaces");
  return x;
}

PointMap beta_morphism(const PointMap& f) {
  return PointMap(beta_finite(f.domain), beta_finite(f.codomain), f.table);
}

FunctorCheckRecord duality_check(std::vector<FinSpace> objects, std::vector<PointMap> morphisms) {
  FunctorCheckRecord rec{std::move(objects), std::move(morphisms), true, {}};
  auto fail = [&](std::string why) {
    rec.squares_ok = false;
    if (rec.failure.empty()) rec.failure = std::move(why);
  };
  auto index_in = [](const std::vector<std::size_t>& to_ambient, std::size_t p) {
    return static_cast<std::size_t>(std::find(to_ambient.begin(), to_ambient.end(), p) - to_ambient.begin());
  };
  // ξ_X : X → δβX is the unit of β onto its range; η_X : X → βδX extends the
  // inclusion of δX. Both are index tables into the constructed spaces.
  auto xi = [&](const FinSpace& x) {
    const FinSpace bx = beta_finite(x);
    const Subspace dbx = delta_object(bx);
    std::vector<std::size_t> t(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) t[p] = index_in(dbx.to_ambient, p);
    return PointMap(x, dbx.space, std::move(t));
  };
  auto eta = [&](const FinSpace& x) {
    const Subspace dx = delta_object(x);
    const FinSpace bdx = beta_finite(dx.space);
    std::vector<std::size_t> t(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) t[p] = index_in(dx.to_ambient, p);
    return PointMap(x, bdx, std::move(t));
  };

  for (const auto& x : rec.objects) {
    const PointMap xi_x = xi(x);
    const PointMap eta_x = eta(x);
    if (!is_homeomorphism(xi_x)) fail("delta(beta X) is not X for a " + std::to_string(x.size()) + "-point space");
    if (!is_homeomorphism(eta_x)) fail("beta(delta X) is not X for a " + std::to_string(x.size()) + "-point space");
    const DeltaMorphism did = delta_functor(PointMap::identity(x));
    if (did.map.table != PointMap::identity(did.domain.space).table) fail("delta does not preserve identities");
  }
  for (const auto& f : rec.morphisms) {
    const PointMap bf = beta_morphism(f);
    const DeltaMorphism dbf = delta_functor(bf);
    const PointMap lhs_xi = compose(dbf.map, xi(f.domain));
    const PointMap rhs_xi = compose(xi(f.codomain), f);
    if (lhs_xi.table != rhs_xi.table) fail("xi naturality square fails");
    const DeltaMorphism df = delta_functor(f);
    const PointMap bdf = beta_morphism(df.map);
    const PointMap lhs_eta = compose(bdf, eta(f.domain));
    const PointMap rhs_eta = compose(eta(f.codomain), f);
    if (lhs_eta.table != rhs_eta.table) fail("eta naturality square fails");
  }
  for (const auto& f : rec.morphisms) {
    for (const auto& g : rec.morphisms) {
      if (!(f.codomain == g.domain)) continue;
      const PointMap gf = compose(g, f);
      const auto lhs = delta_functor(gf).map;
      const auto rhs = compose(delta_functor(g).map, delta_functor(f).map);
      if (lhs.table != rhs.table) fail("delta does not preserve composition");
    }
  }
  return rec;
}

}  // namespace topolab
