#include "topolab/verify.hpp"

#include <random>
#include <sstream>

#include "topolab/classify.hpp"
#include "topolab/compactify.hpp"
#include "topolab/discretize.hpp"
#include "topolab/ideals.hpp"
#include "topolab/io.hpp"
#include "topolab/symdual.hpp"

namespace topolab {

namespace {

constexpr std::size_t kShownCounterexamples = 5;

bool is_discrete_space(const FinSpace& x) { return x == FinSpace::discrete(x.size()); }

// Subsets of a k-set under inclusion, built without reference to any space.
FiniteLattice boolean_lattice(std::size_t k) {
  const auto subsets = subsets_of(PointSet::full(k));
  std::vector<std::string> labels;
  for (auto s : subsets) labels.push_back(s.to_string());
  return FiniteLattice(labels, [&](std::size_t a, std::size_t b) { return subsets[a].subset_of(subsets[b]); });
}

using Check = std::string (*)(const FinSpace&);

struct SuiteEntry {
  const char* name;
  Check check;
  bool (*applies)(const FinSpace&);
};

bool always(const FinSpace&) { return true; }
bool thrpre_applies(const FinSpace& x) {
  return x.size() <= kQuotientCap && components(x).block_count() <= kThrpreComponentCap;
}
bool ideals_applies(const FinSpace& x) {
  return x.size() <= kDiscretizationCap && isolated_points(x).size() <= kIdealIsolatedCap;
}
bool density_applies(const FinSpace& x) { return x.size() <= kDiscretizationCap; }

const SuiteEntry kSuites[] = {
    {"rose", &check_rose, &always},
    {"thrpre", &check_thrpre, &thrpre_applies},
    {"ideals", &check_ideals, &ideals_applies},
    {"duality", &check_duality, &always},
    {"density", &check_density, &density_applies},
};

}  // namespace

std::vector<FinSpace> build_corpus(const CorpusConfig& cfg) {
  std::vector<FinSpace> corpus;
  if (cfg.exhaustive) {
    for (std::size_t n = 0; n <= cfg.exhaustive_max; ++n) for_each_topology(n, [&](const FinSpace& x) { corpus.push_back(x); });
  }
  if (cfg.random_count > 0) {
    if (cfg.random_max_n == 0 || cfg.random_max_n > point_cap())
      throw Error(ErrorKind::TooLarge, "random size " + std::to_string(cfg.random_max_n) + " outside 1.." + std::to_string(point_cap()));
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.random_count; ++i) {
      const std::size_t n = 1 + rng() % cfg.random_max_n;
      corpus.push_back(random_space(n, rng()));
    }
  }
  return corpus;
}

std::string check_rose(const FinSpace& x) {
  const bool by_definition = is_alpha_scattered_by_definition(x);
  const bool by_subspaces = somewhere_dense_subspaces_have_isolated_points(x);
  const bool by_density = is_alpha_scattered(x);
  if (by_definition != by_subspaces || by_subspaces != by_density) {
    std::ostringstream os;
    os << "alpha-scattered " << by_definition << ", somewhere-dense subspaces " << by_subspaces << ", isolated dense "
       << by_density;
    return os.str();
  }
  if (is_scattered(x) != is_scattered_by_subspaces(x)) return "Cantor-Bendixson verdict disagrees with subspace search";
  const AlphaResult fast = alpha_topology(x);
  const AlphaResult slow = alpha_topology_by_difference(x);
  if (!(fast.alpha_space == slow.alpha_space)) return "alpha topology differs from {U \\ N}";
  return {};
}

std::string check_thrpre(const FinSpace& x) {
  const ThrpreReport r = verify_thrpre(x);
  if (!r.ok) return r.counterexample;
  const auto quotients = hausdorff_quotients(x);
  for (const auto& pc : quotients) {
    const FnAlgebra range = range_algebra(x, pc);
    if (pc.injective() != separation_predicates(x, range).separates_points)
      return "injective quotient and point-separating range disagree at " + pc.partition.to_string();
  }
  // Anything above an injective quotient is injective.
  for (const auto& low : quotients) {
    if (!low.injective()) continue;
    for (const auto& high : quotients) {
      if (compactification_geq(high, low) && !high.injective())
        return "non-injective " + high.partition.to_string() + " lies above an injective quotient";
    }
  }
  return {};
}

std::string check_ideals(const FinSpace& x) {
  const IdealMapReport map = verify_ideal_map(x);
  if (!map.ok) return map.counterexample;
  EssentialGmp ess;
  try {
    ess = essential_gmp(x);
  } catch (const Error& e) {
    return e.what();
  }
  const PointSet delta = isolated_points(x);
  if (ess.ideal && (ess.ideal->support != delta || !is_dense(x, delta)))
    return "essential gmp ideal is not supported on a dense isolated set";
  if (separation(x).t1) {
    const bool exists = ess.candidates == 1;
    if (exists != is_dense(x, delta)) return "essential gmp ideal exists iff isolated points dense fails";
    if (exists != has_discretization(x).exists) return "essential gmp ideal exists iff a discretization exists fails";
  }
  for (auto u : x.opens()) {
    if (is_gmp(x, u) != u.subset_of(delta)) return "gmp open " + u.to_string() + " versus isolated points";
  }
  const GenerationVerdict gen = generated_by_minimal_projections(x);
  if (gen.dictionary != is_discrete_space(x)) return "generation by minimal projections versus discreteness";
  if (gen.concrete && *gen.concrete != gen.dictionary) return "vector model disagrees on generation by minimal projections";
  if (concrete_model_applies(x)) {
    for (auto u : x.opens()) {
      if (*is_gmp_concrete(x, u) != is_gmp(x, u)) return "vector-model gmp disagrees on " + u.to_string();
      if (*is_essential_concrete(x, u) != is_essential(x, u)) return "vector-model essential disagrees on " + u.to_string();
    }
  }
  return {};
}

std::string check_duality(const FinSpace& x) {
  const bool discrete = is_discrete_space(x);
  if (separation(x).stonean != discrete) return "Stonean and discrete disagree";
  if (!discrete) {
    try {
      beta_finite(x);
      return "beta accepted a non-discrete space";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutOfComputableSlice) return e.what();
    }
    return {};
  }
  const std::size_t n = x.size();
  std::vector<PointMap> maps{PointMap::identity(x)};
  if (n > 0) {
    std::vector<std::size_t> shift(n), constant(n, 0);
    for (std::size_t i = 0; i < n; ++i) shift[i] = (i + 1) % n;
    maps.emplace_back(x, x, shift);
    maps.emplace_back(x, x, constant);
  }
  const FunctorCheckRecord rec = duality_check({x}, maps);
  return rec.squares_ok ? std::string{} : rec.failure;
}

std::string check_density(const FinSpace& x) {
  const DensityCheck dc = density_check(x);
  if (!dc.verified) return "a full discretization has size other than d(X) = " + std::to_string(dc.density);
  const PointSet delta = isolated_points(x);
  const auto full = all_discretizations(x);
  const DiscretizationWitness witness = has_discretization(x);
  if (witness.exists == full.empty()) return "discretization existence disagrees with the exhaustive list";
  if (separation(x).t1) {
    for (const auto& d : full) {
      if (d.image != delta) return "T1 full discretization " + d.image.to_string() + " is not the isolated set";
      if (!d.levels.weak) return "T1 full discretization " + d.image.to_string() + " is not weak";
    }
    if (witness.exists != is_dense(x, delta)) return "T1 space: discretization exists iff isolated points dense fails";
  }
  if (delta.size() <= kIdealIsolatedCap && !order_isomorphism(weak_lattice(x), boolean_lattice(delta.size())))
    return "weak discretizations are not the power set of the isolated points";
  return {};
}

bool VerifyReport::ok() const {
  for (const auto& s : suites) {
    if (s.failures > 0) return false;
  }
  return true;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << "corpus: " << corpus << "\n";
  for (const auto& s : suites) {
    os << s.name << ": checked " << s.checked << ", skipped " << s.skipped << ", failures " << s.failures << "\n";
    for (const auto& c : s.counterexamples) os << "  counterexample: " << c << "\n";
  }
  os << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

VerifyReport run_verification(std::string_view suite, const CorpusConfig& cfg) {
  bool known = suite == "all";
  for (const auto& e : kSuites) known = known || suite == e.name;
  if (!known) throw Error(ErrorKind::InvalidSet, "unknown suite " + std::string(suite));

  VerifyReport report;
  const std::vector<FinSpace> corpus = build_corpus(cfg);
  {
    std::ostringstream os;
    os << corpus.size() << " spaces";
    if (cfg.exhaustive) os << "; exhaustive n<=" << cfg.exhaustive_max;
    if (cfg.random_count > 0) os << "; random " << cfg.random_count << " n<=" << cfg.random_max_n << " seed " << cfg.seed;
    report.corpus = os.str();
  }
  for (const auto& entry : kSuites) {
    if (suite != "all" && suite != entry.name) continue;
    SuiteResult result;
    result.name = entry.name;
    for (const auto& x : corpus) {
      if (!entry.applies(x)) {
        ++result.skipped;
        continue;
      }
      ++result.checked;
      std::string why;
      try {
        why = entry.check(x);
      } catch (const Error& e) {
        why = e.what();
      }
      if (why.empty()) continue;
      ++result.failures;
      if (result.counterexamples.size() < kShownCounterexamples)
        result.counterexamples.push_back(why + "; space " + io::space_to_line(x));
    }
    report.suites.push_back(std::move(result));
  }
  return report;
}

}  // namespace topolab
