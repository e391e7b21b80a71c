#include "topolab/fintop.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

namespace topolab {

namespace {

// All unions of subfamilies of `generators` (including the empty union), or
// nullopt once more than `limit` distinct sets have been produced.
std::optional<std::vector<PointSet>> union_closure(std::span<const PointSet> generators,
                                                   std::size_t limit) {
  std::vector<PointSet> sets{PointSet{}};
  std::unordered_set<Mask> seen{0};
  for (auto g : generators) {
    const std::size_t before = sets.size();
    for (std::size_t i = 0; i < before; ++i) {
      const PointSet u = sets[i] | g;
      if (seen.insert(u.bits()).second) {
        sets.push_back(u);
        if (sets.size() > limit) return std::nullopt;
      }
    }
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

void check_neighbourhoods(std::size_t n, std::span<const PointSet> nbhd) {
  if (nbhd.size() != n) throw Error(ErrorKind::NotATopology, "neighbourhood table has wrong length");
  const PointSet all = PointSet::full(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!nbhd[x].contains(x) || !nbhd[x].subset_of(all))
      throw Error(ErrorKind::NotATopology, "point " + std::to_string(x) + " outside its neighbourhood");
    for (auto y : nbhd[x]) {
      if (!nbhd[y].subset_of(nbhd[x]))
        throw Error(ErrorKind::NotATopology, "neighbourhoods are not transitive");
    }
  }
}

// Packs the members of `s` that lie in `within` into consecutive low bits.
PointSet compress(PointSet s, PointSet within) {
  Mask out = 0;
  std::size_t k = 0;
  for (auto p : within) {
    if (s.contains(p)) out |= Mask{1} << k;
    ++k;
  }
  return PointSet(out);
}

}  // namespace

FinSpace::FinSpace() : n_(0), opens_{PointSet{}}, nbhd_{} {}

FinSpace FinSpace::from_opens(std::size_t n, std::vector<PointSet> opens) {
  if (n > kMaxPoints) throw Error(ErrorKind::TooLarge, std::to_string(n) + " points");
  const PointSet all = PointSet::full(n);
  std::sort(opens.begin(), opens.end());
  if (std::adjacent_find(opens.begin(), opens.end()) != opens.end())
    throw Error(ErrorKind::NotATopology, "duplicate open set");
  for (auto u : opens) {
    if (!u.subset_of(all)) throw Error(ErrorKind::NotATopology, "open set " + u.to_string() + " out of range");
  }
  if (opens.empty() || !opens.front().empty() || opens.back() != all)
    throw Error(ErrorKind::NotATopology, "empty set and full set must be open");

  std::vector<PointSet> nbhd(n, all);
  for (auto u : opens) {
    for (auto x : u) nbhd[x] &= u;
  }
  // A family is a topology exactly when it coincides with the unions of the
  // intersections-of-members-containing-each-point.
  auto generated = union_closure(nbhd, opens.size());
  if (!generated || *generated != opens)
    throw Error(ErrorKind::NotATopology, "family not closed under union and intersection");
  return FinSpace(n, std::move(opens), std::move(nbhd));
}

FinSpace FinSpace::from_neighbourhoods(std::size_t n, std::vector<PointSet> nbhd) {
  if (n > kMaxPoints) throw Error(ErrorKind::TooLarge, std::to_string(n) + " points");
  check_neighbourhoods(n, nbhd);
  auto opens = union_closure(nbhd, std::numeric_limits<std::size_t>::max());
  return FinSpace(n, std::move(*opens), std::move(nbhd));
}

FinSpace FinSpace::discrete(std::size_t n) {
  std::vector<PointSet> nbhd;
  for (std::size_t x = 0; x < n; ++x) nbhd.push_back(PointSet::singleton(x));
  return from_neighbourhoods(n, std::move(nbhd));
}

FinSpace FinSpace::anti_discrete(std::size_t n) {
  return from_neighbourhoods(n, std::vector<PointSet>(n, PointSet::full(n)));
}

FinSpace FinSpace::sierpinski() { return from_neighbourhoods(2, {PointSet{0}, PointSet{0, 1}}); }

std::vector<PointSet> FinSpace::closed_sets() const {
  std::vector<PointSet> out;
  out.reserve(opens_.size());
  for (auto u : opens_) out.push_back(u.complement_in(n_));
  std::sort(out.begin(), out.end());
  return out;
}

bool FinSpace::is_open(PointSet s) const {
  if (!valid_subset(s)) return false;
  for (auto x : s) {
    if (!nbhd_[x].subset_of(s)) return false;
  }
  return true;
}

std::strong_ordering FinSpace::operator<=>(const FinSpace& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  return opens_ <=> other.opens_;
}

// ---------------------------------------------------------------------------

PointMap::PointMap(FinSpace dom, FinSpace cod, std::vector<std::size_t> tab)
    : domain(std::move(dom)), codomain(std::move(cod)), table(std::move(tab)) {
  if (table.size() != domain.size())
    throw Error(ErrorKind::InvalidMap, "table has " + std::to_string(table.size()) + " entries for " +
                                           std::to_string(domain.size()) + " points");
  for (auto y : table) {
    if (y >= codomain.size()) throw Error(ErrorKind::InvalidMap, "table entry " + std::to_string(y) + " out of range");
  }
}

PointMap PointMap::identity(const FinSpace& x) {
  std::vector<std::size_t> t(x.size());
  std::iota(t.begin(), t.end(), 0);
  return PointMap(x, x, std::move(t));
}

PointMap PointMap::inclusion(const FinSpace& ambient, PointSet image) {
  if (!ambient.valid_subset(image)) throw Error(ErrorKind::InvalidMap, "image outside ambient space");
  return PointMap(FinSpace::discrete(image.size()), ambient, image.elements());
}

PointSet PointMap::image(PointSet s) const {
  PointSet out;
  for (auto x : s) out = out.with(table[x]);
  return out;
}

PointSet PointMap::preimage(PointSet s) const {
  PointSet out;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (s.contains(table[x])) out = out.with(x);
  }
  return out;
}

bool PointMap::is_injective() const { return image().size() == table.size(); }

PointMap compose(const PointMap& g, const PointMap& f) {
  if (f.codomain.size() != g.domain.size()) throw Error(ErrorKind::InvalidMap, "composition of mismatched maps");
  std::vector<std::size_t> t(f.table.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g.table[f.table[x]];
  return PointMap(f.domain, g.codomain, std::move(t));
}

// ---------------------------------------------------------------------------

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  std::map<std::size_t, std::size_t> renumber;
  p.block_of_.reserve(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = renumber.emplace(labels[x], renumber.size());
    if (inserted) p.blocks_.push_back(PointSet{});
    p.block_of_.push_back(it->second);
    p.blocks_[it->second] = p.blocks_[it->second].with(x);
  }
  return p;
}

Partition Partition::from_blocks(std::size_t n, std::vector<PointSet> blocks) {
  PointSet seen;
  std::vector<std::size_t> labels(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty() || seen.intersects(blocks[b]) || !blocks[b].subset_of(PointSet::full(n)))
      throw Error(ErrorKind::InvalidSet, "blocks must be nonempty, disjoint and in range");
    seen |= blocks[b];
    for (auto x : blocks[b]) labels[x] = b;
  }
  if (seen != PointSet::full(n)) throw Error(ErrorKind::InvalidSet, "blocks do not cover every element");
  return from_labels(labels);
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

Partition Partition::trivial(std::size_t n) {
  std::vector<std::size_t> labels(n, 0);
  return from_labels(labels);
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) return false;
  for (auto b : blocks_) {
    if (!b.subset_of(coarser.block(coarser.block_of(b.first())))) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    out += blocks_[b].to_string();
  }
  return out.empty() ? "{}" : out;
}

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> rgs(n, 0);
  // Restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      out.push_back(Partition::from_labels(rgs));
      return;
    }
    for (std::size_t b = 0; b <= used && b <= i; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

// ---------------------------------------------------------------------------

FinSpace make_space(std::size_t n, std::span<const PointSet> generators) {
  if (n > point_cap()) throw Error(ErrorKind::TooLarge, std::to_string(n) + " points exceeds cap " + std::to_string(point_cap()));
  const PointSet all = PointSet::full(n);
  std::vector<PointSet> nbhd(n, all);
  for (auto g : generators) {
    if (!g.subset_of(all)) throw Error(ErrorKind::InvalidGenerator, "generator " + g.to_string() + " outside 0.." + std::to_string(n));
    for (auto x : g) nbhd[x] &= g;
  }
  return FinSpace::from_neighbourhoods(n, std::move(nbhd));
}

PointSet closure(const FinSpace& x, PointSet s) {
  PointSet out;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x.neighbourhood(p).intersects(s)) out = out.with(p);
  }
  return out;
}

PointSet interior(const FinSpace& x, PointSet s) {
  PointSet out;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x.neighbourhood(p).subset_of(s)) out = out.with(p);
  }
  return out;
}

Subspace subspace(const FinSpace& x, PointSet s) {
  s = s & x.points();
  std::vector<PointSet> nbhd;
  nbhd.reserve(s.size());
  for (auto p : s) nbhd.push_back(compress(x.neighbourhood(p) & s, s));
  return {FinSpace::from_neighbourhoods(s.size(), std::move(nbhd)), s.elements()};
}

PointSet Product::box(PointSet u, PointSet v) const {
  PointSet out;
  for (auto i : u) {
    for (auto j : v) out = out.with(index(i, j));
  }
  return out;
}

PointMap Product::left_projection(const FinSpace& left) const {
  std::vector<std::size_t> t(space.size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = k / right_size;
  return PointMap(space, left, std::move(t));
}

PointMap Product::right_projection(const FinSpace& right) const {
  std::vector<std::size_t> t(space.size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = k % right_size;
  return PointMap(space, right, std::move(t));
}

Product product(const FinSpace& x, const FinSpace& y) {
  const std::size_t n = x.size() * y.size();
  if (n > point_cap()) throw Error(ErrorKind::TooLarge, "product has " + std::to_string(n) + " points");
  Product prod{FinSpace{}, x.size(), y.size()};
  std::vector<PointSet> nbhd(n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) nbhd[prod.index(i, j)] = prod.box(x.neighbourhood(i), y.neighbourhood(j));
  }
  prod.space = FinSpace::from_neighbourhoods(n, std::move(nbhd));
  return prod;
}

Quotient quotient(const FinSpace& x, const Partition& p) {
  if (p.size() != x.size()) throw Error(ErrorKind::InvalidMap, "partition size does not match space");
  auto saturate = [&](PointSet s) {
    PointSet out;
    for (auto b : p.blocks()) {
      if (b.intersects(s)) out |= b;
    }
    return out;
  };
  auto open_hull = [&](PointSet s) {
    PointSet out = s;
    for (auto q : s) out |= x.neighbourhood(q);
    return out;
  };
  std::vector<PointSet> nbhd;
  nbhd.reserve(p.block_count());
  for (auto b : p.blocks()) {
    // Smallest saturated open set containing the block.
    PointSet s = b;
    for (;;) {
      PointSet next = saturate(open_hull(s));
      if (next == s) break;
      s = next;
    }
    PointSet blocks_in;
    for (auto q : s) blocks_in = blocks_in.with(p.block_of(q));
    nbhd.push_back(blocks_in);
  }
  FinSpace space = FinSpace::from_neighbourhoods(p.block_count(), std::move(nbhd));
  PointMap q(x, space, p.labels());
  return {std::move(space), std::move(q)};
}

FinSpace disjoint_sum(const FinSpace& x, const FinSpace& y) {
  const std::size_t n = x.size() + y.size();
  if (n > point_cap()) throw Error(ErrorKind::TooLarge, "sum has " + std::to_string(n) + " points");
  std::vector<PointSet> nbhd = x.neighbourhoods();
  for (auto v : y.neighbourhoods()) nbhd.push_back(PointSet(v.bits() << x.size()));
  return FinSpace::from_neighbourhoods(n, std::move(nbhd));
}

FinSpace adjoin_dense_discrete(const FinSpace& z, std::size_t k) {
  const std::size_t n = z.size() + k;
  if (n > point_cap()) throw Error(ErrorKind::TooLarge, "result has " + std::to_string(n) + " points");
  const PointSet fresh = PointSet::full(n) - PointSet::full(z.size());
  std::vector<PointSet> nbhd;
  for (auto v : z.neighbourhoods()) nbhd.push_back(v | fresh);
  for (auto d : fresh) nbhd.push_back(PointSet::singleton(d));
  return FinSpace::from_neighbourhoods(n, std::move(nbhd));
}

Preorder specialization(const FinSpace& x) {
  std::vector<PointSet> above(x.size());
  for (std::size_t y = 0; y < x.size(); ++y) {
    for (auto p : closure(x, PointSet::singleton(y))) above[p] = above[p].with(y);
  }
  return Preorder(std::move(above));
}

Partition components(const FinSpace& x) {
  std::vector<PointSet> atom(x.size(), x.points());
  for (auto u : x.opens()) {
    if (!x.is_closed(u)) continue;
    for (auto p : u) atom[p] &= u;
    for (auto p : u.complement_in(x.size())) atom[p] = atom[p] - u;
  }
  std::vector<std::size_t> labels(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) labels[p] = atom[p].first();
  return Partition::from_labels(labels);
}

Partition components_by_comparability(const FinSpace& x) {
  const Preorder order = specialization(x);
  std::vector<std::size_t> label(x.size(), x.size());
  for (std::size_t start = 0; start < x.size(); ++start) {
    if (label[start] != x.size()) continue;
    std::vector<std::size_t> stack{start};
    label[start] = start;
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      for (std::size_t q = 0; q < x.size(); ++q) {
        if (label[q] == x.size() && (order.leq(p, q) || order.leq(q, p))) {
          label[q] = start;
          stack.push_back(q);
        }
      }
    }
  }
  return Partition::from_labels(label);
}

bool is_continuous(const PointMap& f) {
  for (auto v : f.codomain.opens()) {
    if (!f.domain.is_open(f.preimage(v))) return false;
  }
  return true;
}

bool is_embedding(const PointMap& f) {
  if (!f.is_injective() || !is_continuous(f)) return false;
  const PointSet img = f.image();
  for (auto u : f.domain.opens()) {
    const PointSet fu = f.image(u);
    // fu is relatively open iff the smallest open set around it meets the image in fu.
    PointSet hull;
    for (auto y : fu) hull |= f.codomain.neighbourhood(y);
    if ((hull & img) != fu) return false;
  }
  return true;
}

bool has_dense_range(const PointMap& f) { return closure(f.codomain, f.image()) == f.codomain.points(); }

bool has_open_range(const PointMap& f) { return f.codomain.is_open(f.image()); }

bool is_homeomorphism(const PointMap& f) {
  if (!f.is_injective() || !f.is_surjective()) return false;
  std::vector<std::size_t> inverse(f.table.size());
  for (std::size_t x = 0; x < f.table.size(); ++x) inverse[f.table[x]] = x;
  return is_continuous(f) && is_continuous(PointMap(f.codomain, f.domain, std::move(inverse)));
}

std::optional<std::vector<std::size_t>> find_homeomorphism(const FinSpace& x, const FinSpace& y) {
  const std::size_t n = x.size();
  if (n != y.size() || x.opens().size() != y.opens().size()) return std::nullopt;
  // Degree signature: (size of minimal neighbourhood, number of points whose
  // neighbourhood contains this one). Homeomorphisms preserve both.
  auto signature = [](const FinSpace& s) {
    std::vector<std::pair<std::size_t, std::size_t>> sig(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) {
      std::size_t below = 0;
      for (std::size_t q = 0; q < s.size(); ++q) below += s.neighbourhood(q).contains(p);
      sig[p] = {s.neighbourhood(p).size(), below};
    }
    return sig;
  };
  const auto sx = signature(x);
  const auto sy = signature(y);
  {
    auto a = sx, b = sy;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::size_t> h(n);
  PointSet used;
  std::function<bool(std::size_t)> place = [&](std::size_t p) {
    if (p == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used.contains(c) || sx[p] != sy[c]) continue;
      bool consistent = true;
      for (std::size_t q = 0; q < p && consistent; ++q) {
        consistent = x.neighbourhood(p).contains(q) == y.neighbourhood(c).contains(h[q]) &&
                     x.neighbourhood(q).contains(p) == y.neighbourhood(h[q]).contains(c);
      }
      if (!consistent) continue;
      h[p] = c;
      used = used.with(c);
      if (place(p + 1)) return true;
      used = used.without(c);
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return h;
}

void for_each_topology(std::size_t n, const std::function<void(const FinSpace&)>& visit) {
  for (auto& space : enumerate_topologies(n)) visit(space);
}

std::vector<FinSpace> enumerate_topologies(std::size_t n) {
  if (n > kEnumerationCap) throw Error(ErrorKind::TooLarge, "enumeration supports n <= " + std::to_string(kEnumerationCap));
  // Finite topologies correspond one-to-one with preorders; enumerate the
  // reflexive relations by their off-diagonal bits and keep the transitive ones.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) cells.emplace_back(a, b);
    }
  }
  std::vector<FinSpace> out;
  const Mask combos = Mask{1} << cells.size();
  std::vector<PointSet> above(n);
  for (Mask rel = 0; rel < combos; ++rel) {
    for (std::size_t a = 0; a < n; ++a) above[a] = PointSet::singleton(a);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if ((rel >> c) & 1U) above[cells[c].first] = above[cells[c].first].with(cells[c].second);
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      for (auto b : above[a]) {
        if (!above[b].subset_of(above[a])) {
          transitive = false;
          break;
        }
      }
    }
    if (transitive) out.push_back(FinSpace::from_neighbourhoods(n, above));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FinSpace random_space(std::size_t n, std::uint64_t seed) {
  if (n > point_cap()) throw Error(ErrorKind::TooLarge, std::to_string(n) + " points exceeds cap");
  std::mt19937_64 rng(seed);
  const std::size_t count = n == 0 ? 0 : rng() % (2 * n + 1);
  // Per-space density so the corpus mixes coarse and fine topologies.
  const unsigned density = 1 + static_cast<unsigned>(rng() % 3);  // out of 4
  std::vector<PointSet> generators;
  for (std::size_t g = 0; g < count; ++g) {
    PointSet s;
    for (std::size_t p = 0; p < n; ++p) {
      if (rng() % 4 < density) s = s.with(p);
    }
    generators.push_back(s);
  }
  return make_space(n, generators);
}

}  // namespace topolab
