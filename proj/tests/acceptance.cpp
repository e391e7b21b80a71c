// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "topolab/classify.hpp"
#include "topolab/compactify.hpp"
#include "topolab/discretize.hpp"
#include "topolab/ideals.hpp"
#include "topolab/io.hpp"
#include "topolab/symdual.hpp"

using namespace topolab;

namespace {

// Pinned limits.
constexpr double kEnumerationSeconds = 10.0;
constexpr double kRoseSeconds = 60.0;
constexpr double kSymbolicSeconds = 0.05;
constexpr std::size_t kRandomSpaces = 1000;
constexpr std::size_t kRandomMaxN = 8;
constexpr std::uint64_t kCorpusSeed = 20240607;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& run) {
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << " -- " << o.detail << std::endl;
}

std::vector<FinSpace> exhaustive(std::size_t max_n) {
  std::vector<FinSpace> out;
  for (std::size_t n = 0; n <= max_n; ++n) for_each_topology(n, [&](const FinSpace& x) { out.push_back(x); });
  return out;
}

std::vector<FinSpace> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FinSpace> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % max_n;
    out.push_back(random_space(n, rng()));
  }
  return out;
}

// All n ≤ 4 topologies followed by the seeded random spaces.
const std::vector<FinSpace>& corpus() {
  static const std::vector<FinSpace> c = [] {
    auto all = exhaustive(4);
    for (auto& x : random_corpus(kRandomSpaces, kRandomMaxN, kCorpusSeed)) all.push_back(std::move(x));
    return all;
  }();
  return c;
}

std::string first_bad(const FinSpace& x, const std::string& why) { return why + " on " + io::space_to_line(x); }

std::vector<std::vector<std::size_t>> all_maps(std::size_t from, std::size_t to) {
  std::vector<std::vector<std::size_t>> out;
  if (from > 0 && to == 0) return out;
  std::vector<std::size_t> t(from, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = 0;
    while (i < from && ++t[i] == to) t[i++] = 0;
    if (i == from) break;
  }
  return out;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(TOPOLAB_EXE) + " " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), got);
  return out;
}

}  // namespace

int main() {
  std::cout << "corpus: " << exhaustive(4).size() << " exhaustive spaces (n<=4) + " << kRandomSpaces
            << " random (n<=" << kRandomMaxN << ", seed " << kCorpusSeed << ")\n";

  report(1, "enumerator matches brute-force family filter, n=0..4", [] {
    const auto t0 = Clock::now();
    std::ostringstream counts;
    bool ok = true;
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto brute = oracle::brute_topologies(n);
      std::set<std::vector<Mask>> fast;
      for (const auto& x : enumerate_topologies(n)) fast.insert(oracle::opens_of(x));
      const std::set<std::vector<Mask>> slow(brute.begin(), brute.end());
      ok = ok && fast == slow && enumerate_topologies(n).size() == brute.size();
      counts << (n ? "," : "") << brute.size();
    }
    const double t = seconds_since(t0);
    ok = ok && t < kEnumerationSeconds;
    return Outcome{ok, "counts " + counts.str() + ", " + std::to_string(t) + " s (limit 10 s)"};
  });

  report(2, "alpha-scattered <=> somewhere-dense subspaces have isolated points <=> isolated points dense", [] {
    const auto t0 = Clock::now();
    for (const auto& x : corpus()) {
      const bool a = is_alpha_scattered_by_definition(x);
      const bool b = somewhere_dense_subspaces_have_isolated_points(x);
      const bool c = is_alpha_scattered(x);
      if (a != b || b != c) return Outcome{false, first_bad(x, "three-way mismatch")};
    }
    const double t = seconds_since(t0);
    return Outcome{t < kRoseSeconds, std::to_string(corpus().size()) + " spaces, 0 counterexamples, " +
                                         std::to_string(t) + " s (limit 60 s)"};
  });

  report(3, "Cantor-Bendixson scatteredness equals the every-subspace oracle", [] {
    std::size_t scattered = 0;
    for (const auto& x : corpus()) {
      const bool cb = cb_derivative(x).scattered;
      if (cb != oracle::scattered(x)) return Outcome{false, first_bad(x, "mismatch")};
      scattered += cb;
    }
    return Outcome{true, std::to_string(corpus().size()) + " spaces (" + std::to_string(scattered) +
                             " scattered), 0 mismatches"};
  });

  report(4, "alpha topology fast path equals {U \\ N} oracle and is a topology", [] {
    std::size_t enlarged = 0;
    for (const auto& x : corpus()) {
      const auto fast = oracle::opens_of(alpha_topology(x).alpha_space);
      if (fast != oracle::alpha_opens(x)) return Outcome{false, first_bad(x, "alpha mismatch")};
      if (!oracle::is_topology(x.size(), fast)) return Outcome{false, first_bad(x, "alpha family not a topology")};
      enlarged += fast.size() != x.opens().size();
    }
    return Outcome{true, std::to_string(corpus().size()) + " spaces (" + std::to_string(enlarged) +
                             " with strictly finer alpha topology), 0 mismatches"};
  });

  report(5, "weak discretization lattice is the power set of the isolated points, n<=4", [] {
    const auto spaces = exhaustive(4);
    for (const auto& x : spaces) {
      const std::size_t k = isolated_points(x).size();
      const auto subsets = subsets_of(PointSet::full(k));
      std::vector<std::string> labels(subsets.size());
      const FiniteLattice boolean(labels, [&](std::size_t a, std::size_t b) { return subsets[a].subset_of(subsets[b]); });
      const FiniteLattice weak = weak_lattice(x);
      if (!weak.is_lattice() || !order_isomorphism(weak, boolean)) return Outcome{false, first_bad(x, "not isomorphic")};
    }
    return Outcome{true, std::to_string(spaces.size()) + " spaces, all isomorphic"};
  });

  report(6, "full discretizations: image = isolated points (T1), size = d(X) (all), anti-discrete n classes", [] {
    std::size_t t1 = 0, discretizations = 0;
    for (const auto& x : corpus()) {
      const auto brute = oracle::full_discretizations(x);
      std::vector<Mask> lib;
      for (const auto& d : all_discretizations(x)) lib.push_back(d.image.bits());
      if (lib != brute) return Outcome{false, first_bad(x, "library and brute force disagree")};
      const std::size_t d = density(x);
      for (Mask m : brute) {
        if (PointSet(m).size() != d) return Outcome{false, first_bad(x, "size differs from density")};
      }
      discretizations += brute.size();
      if (separation(x).t1) {
        ++t1;
        for (Mask m : brute) {
          if (m != oracle::isolated(x)) return Outcome{false, first_bad(x, "T1 image is not the isolated set")};
        }
      }
    }
    for (std::size_t n = 2; n <= 6; ++n) {
      if (all_discretizations(FinSpace::anti_discrete(n)).size() != n)
        return Outcome{false, "anti-discrete " + std::to_string(n) + " has the wrong class count"};
    }
    return Outcome{true, std::to_string(discretizations) + " discretizations on " + std::to_string(corpus().size()) +
                             " spaces (" + std::to_string(t1) + " T1); anti-discrete 2..6 give 2..6 classes"};
  });

  report(7, "Hausdorff quotients <-> unital subalgebras order isomorphism; span-closure oracle", [] {
    auto spaces = exhaustive(4);
    const auto rnd = random_corpus(200, 6, kCorpusSeed + 1);
    spaces.insert(spaces.end(), rnd.begin(), rnd.end());
    for (const auto& x : spaces) {
      const ThrpreReport r = verify_thrpre(x);
      if (!r.ok) return Outcome{false, first_bad(x, r.counterexample)};
    }
    for (std::size_t k = 1; k <= 4; ++k) {
      std::string why;
      if (!subalgebra_span_oracle_agrees(k, &why)) return Outcome{false, "k=" + std::to_string(k) + ": " + why};
    }
    return Outcome{true, std::to_string(spaces.size()) + " spaces (390 exhaustive + 200 random n<=6); span oracle k<=4"};
  });

  report(8, "compactification <=> discretization for all maps between discrete spaces of size <= 3", [] {
    std::size_t maps = 0, positive = 0;
    for (std::size_t a = 0; a <= 3; ++a) {
      for (std::size_t b = 0; b <= 3; ++b) {
        const FinSpace x = FinSpace::discrete(a), y = FinSpace::discrete(b);
        for (const auto& t : all_maps(a, b)) {
          const DualityVerdict v = compactification_discretization_duality(PointMap(x, y, t));
          if (v.is_compactification != v.is_discretization) return Outcome{false, "mismatch"};
          ++maps;
          positive += v.is_compactification;
        }
      }
    }
    return Outcome{true, std::to_string(maps) + " maps, " + std::to_string(positive) + " on both sides"};
  });

  report(9, "ideal map isomorphism; at most one essential gmp ideal; T1 existence; vector model agrees", [] {
    for (const auto& x : exhaustive(4)) {
      const IdealMapReport r = verify_ideal_map(x);
      if (!r.ok) return Outcome{false, first_bad(x, r.counterexample)};
    }
    for (const auto& x : corpus()) {
      const EssentialGmp e = essential_gmp(x);  // throws on a second candidate
      if (e.candidates > 1) return Outcome{false, first_bad(x, "two essential gmp ideals")};
      if (separation(x).t1 && (e.candidates == 1) != (closure(x, isolated_points(x)) == x.points()))
        return Outcome{false, first_bad(x, "existence differs from density of isolated points")};
    }
    std::size_t opens = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
      const FinSpace d = FinSpace::discrete(n);
      for (auto u : d.opens()) {
        ++opens;
        if (is_gmp_concrete(d, u) != is_gmp(d, u) || is_essential_concrete(d, u) != is_essential(d, u))
          return Outcome{false, "vector model disagrees on " + u.to_string() + " in discrete " + std::to_string(n)};
      }
    }
    return Outcome{true, "390 exhaustive + " + std::to_string(corpus().size()) + " corpus spaces; " +
                             std::to_string(opens) + " opens in the vector model"};
  });

  report(10, "delta/beta duality on finite discrete spaces; Stonean <=> discrete, n<=4", [] {
    std::vector<FinSpace> objects;
    std::vector<PointMap> morphisms;
    for (std::size_t n = 0; n <= 3; ++n) objects.push_back(FinSpace::discrete(n));
    for (const auto& x : objects)
      for (const auto& y : objects)
        for (const auto& t : all_maps(x.size(), y.size())) morphisms.emplace_back(x, y, t);
    const std::size_t exhaustive_maps = morphisms.size();
    FunctorCheckRecord rec = duality_check(objects, morphisms);
    if (!rec.squares_ok) return Outcome{false, rec.failure};
    std::mt19937_64 rng(kCorpusSeed + 2);
    for (int i = 0; i < 100; ++i) {
      const FinSpace x = FinSpace::discrete(1 + rng() % 6), y = FinSpace::discrete(1 + rng() % 6);
      std::vector<std::size_t> t(x.size());
      for (auto& v : t) v = rng() % y.size();
      rec = duality_check({x, y}, {PointMap(x, y, t)});
      if (!rec.squares_ok) return Outcome{false, rec.failure};
    }
    for (const auto& x : exhaustive(4)) {
      if (separation(x).stonean != (x == FinSpace::discrete(x.size())))
        return Outcome{false, first_bad(x, "Stonean differs from discrete")};
    }
    return Outcome{true, std::to_string(exhaustive_maps) + " exhaustive maps + 100 random, 390 spaces"};
  });

  report(11, "symbolic one-point compactification: isolated = N, dense; evens witness not Stonean", [] {
    const auto t0 = Clock::now();
    const SymKind k = SymKind::NatPlusInfinity;
    bool ok = sym_isolated(k) == SymSet::naturals() && sym_is_dense(k, sym_isolated(k));
    const NotStoneanWitness w = not_stonean_witness();
    ok = ok && w.verdict.set == SymSet::evens() && w.verdict.closure == (SymSet::evens() | SymSet::infinity_point()) &&
         !w.verdict.closure_open && !w.extremally_disconnected && w.alpha_scattered;
    const double t = seconds_since(t0);
    return Outcome{ok && t < kSymbolicSeconds, "closure " + w.verdict.closure.to_string() + ", " +
                                                   std::to_string(t * 1000) + " ms (limit 50 ms)"};
  });

  report(12, "verify all --random 1000 --n 8 --seed 7 is byte-identical across runs", [] {
    const std::string args = "verify all --random 1000 --n 8 --seed 7";
    const std::string a = run_cli(args);
    const std::string b = run_cli(args);
    const bool ok = !a.empty() && a == b;
    const bool passed = a.find("result: PASS") != std::string::npos;
    return Outcome{ok, std::to_string(a.size()) + " bytes, identical=" + (a == b ? "yes" : "no") +
                           ", suites " + (passed ? "PASS" : "FAIL")};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures;
}
