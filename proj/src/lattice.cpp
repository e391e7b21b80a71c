#include "topolab/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "topolab/errors.hpp"

namespace topolab {

FiniteLattice::FiniteLattice(std::vector<std::string> labels,
                             const std::function<bool(std::size_t, std::size_t)>& leq)
    : labels_(std::move(labels)) {
  const std::size_t k = labels_.size();
  table_.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) table_[a][b] = leq(a, b);
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (!table_[a][a]) throw Error(ErrorKind::InternalInvariantViolation, "order is not reflexive at " + labels_[a]);
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && table_[a][b] && table_[b][a])
        throw Error(ErrorKind::InternalInvariantViolation, "order is not antisymmetric: " + labels_[a] + ", " + labels_[b]);
      if (!table_[a][b]) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (table_[b][c] && !table_[a][c])
          throw Error(ErrorKind::InternalInvariantViolation, "order is not transitive through " + labels_[b]);
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    bool is_top = true, is_bottom = true;
    for (std::size_t b = 0; b < k; ++b) {
      is_top = is_top && table_[b][a];
      is_bottom = is_bottom && table_[a][b];
    }
    if (is_top) top_ = a;
    if (is_bottom) bottom_ = a;
  }
}

std::optional<std::size_t> FiniteLattice::meet(std::size_t a, std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < size(); ++c) {
    if (!table_[c][a] || !table_[c][b]) continue;
    if (!best || table_[*best][c]) best = c;
  }
  if (!best) return std::nullopt;
  for (std::size_t c = 0; c < size(); ++c) {
    if (table_[c][a] && table_[c][b] && !table_[c][*best]) return std::nullopt;
  }
  return best;
}

std::optional<std::size_t> FiniteLattice::join(std::size_t a, std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < size(); ++c) {
    if (!table_[a][c] || !table_[b][c]) continue;
    if (!best || table_[c][*best]) best = c;
  }
  if (!best) return std::nullopt;
  for (std::size_t c = 0; c < size(); ++c) {
    if (table_[a][c] && table_[b][c] && !table_[*best][c]) return std::nullopt;
  }
  return best;
}

bool FiniteLattice::is_lattice() const {
  if (size() == 0) return false;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (!meet(a, b) || !join(a, b)) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (a == b || !table_[a][b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < size() && direct; ++c) {
        if (c != a && c != b && table_[a][c] && table_[c][b]) direct = false;
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string FiniteLattice::to_dot(std::string_view name) const {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < size(); ++i) out << "  n" << i << " [label=\"" << labels_[i] << "\"];\n";
  for (auto [a, b] : covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::optional<std::vector<std::size_t>> order_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t k = a.size();
  if (k != b.size()) return std::nullopt;
  auto signature = [](const FiniteLattice& l) {
    std::vector<std::pair<std::size_t, std::size_t>> sig(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = 0; j < l.size(); ++j) {
        sig[i].first += l.leq(j, i);
        sig[i].second += l.leq(i, j);
      }
    }
    return sig;
  };
  const auto sa = signature(a);
  const auto sb = signature(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  std::vector<std::size_t> h(k);
  std::vector<bool> used(k, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == k) return true;
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c] || sa[i] != sb[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = a.leq(i, j) == b.leq(c, h[j]) && a.leq(j, i) == b.leq(h[j], c);
      }
      if (!ok) continue;
      h[i] = c;
      used[c] = true;
      if (place(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return h;
}

}  // namespace topolab
