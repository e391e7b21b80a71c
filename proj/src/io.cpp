#include "topolab/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "topolab/discretize.hpp"

namespace topolab::io {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

std::string label_of(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : std::to_string(i);
}

}  // namespace

LoadedSpace parse_space(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("space must be a JSON object");
  if (!doc.contains("points") || !doc["points"].is_array()) parse_fail("missing array \"points\"");
  if (!doc.contains("opens") || !doc["opens"].is_array()) parse_fail("missing array \"opens\"");

  LoadedSpace out;
  for (const auto& p : doc["points"]) {
    if (p.is_string()) {
      out.labels.push_back(p.get<std::string>());
    } else if (p.is_number_integer()) {
      out.labels.push_back(std::to_string(p.get<long long>()));
    } else {
      parse_fail("point labels must be strings");
    }
  }
  const std::set<std::string> distinct(out.labels.begin(), out.labels.end());
  if (distinct.size() != out.labels.size()) throw Error(ErrorKind::InvalidSet, "repeated point label");
  const std::size_t n = out.labels.size();
  if (n > point_cap()) throw Error(ErrorKind::TooLarge, std::to_string(n) + " points exceeds the cap");

  std::vector<PointSet> generators;
  for (const auto& open : doc["opens"]) {
    if (!open.is_array()) parse_fail("each open set must be an array of point indices");
    PointSet s;
    for (const auto& idx : open) {
      if (!idx.is_number_unsigned() && !idx.is_number_integer()) parse_fail("point indices must be integers");
      const long long i = idx.get<long long>();
      if (i < 0 || static_cast<std::size_t>(i) >= n)
        throw Error(ErrorKind::InvalidGenerator, "index " + std::to_string(i) + " outside the point list");
      s = s.with(static_cast<std::size_t>(i));
    }
    generators.push_back(s);
  }
  out.space = make_space(n, generators);
  const std::set<PointSet> given(generators.begin(), generators.end());
  for (auto u : out.space.opens()) {
    if (!given.count(u)) out.added.push_back(u);
  }
  return out;
}

LoadedSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

Json space_to_json(const FinSpace& x, const std::vector<std::string>& labels) {
  Json points = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) points.push_back(label_of(labels, i));
  Json opens = Json::array();
  for (auto u : x.opens()) opens.push_back(u.elements());
  return Json{{"points", std::move(points)}, {"opens", std::move(opens)}};
}

std::string space_to_line(const FinSpace& x) { return space_to_json(x).dump(); }

Json labelled_set(PointSet s, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (auto p : s) out.push_back(label_of(labels, p));
  return out;
}

Json classification_report(const FinSpace& x, const std::vector<std::string>& labels) {
  const SeparationFlags f = separation(x);
  const CBRecord cb = cb_derivative(x);
  const AlphaResult alpha = alpha_topology(x);
  Json derivatives = Json::array();
  for (auto d : cb.derivatives) derivatives.push_back(labelled_set(d, labels));
  return Json{
      {"points", x.size()},
      {"T0", f.t0},
      {"T1", f.t1},
      {"T2", f.t2},
      {"completely_hausdorff", f.completely_hausdorff},
      {"zero_dimensional", f.zero_dimensional},
      {"extremally_disconnected", f.extremally_disconnected},
      {"stonean", f.stonean},
      {"scattered", cb.scattered},
      {"alpha_scattered", is_alpha_scattered(x)},
      {"isolated", labelled_set(isolated_points(x), labels)},
      {"cb_rank", cb.rank},
      {"cb_derivatives", std::move(derivatives)},
      {"alpha_added", alpha.added.size()},
      {"alpha_idempotent", alpha_is_idempotent(x)},
      {"density", density(x)},
  };
}

Json lattice_to_json(const FiniteLattice& l) {
  Json covers = Json::array();
  for (auto [a, b] : l.covers()) covers.push_back(Json::array({a, b}));
  Json out{{"elements", l.labels()}, {"covers", std::move(covers)}};
  out["top"] = l.top() ? Json(*l.top()) : Json(nullptr);
  out["bottom"] = l.bottom() ? Json(*l.bottom()) : Json(nullptr);
  return out;
}

Json symset_to_json(const SymSet& s) {
  Json residues = Json::array();
  for (auto [a, m] : s.residues()) residues.push_back(Json::array({a, m}));
  return Json{{"residues", std::move(residues)}, {"plus", s.plus()}, {"minus", s.minus()}, {"inf", s.contains_infinity()}};
}

SymSet symset_from_json(const Json& j) {
  try {
    std::vector<SymSet::Residue> residues;
    for (const auto& r : j.at("residues")) {
      if (!r.is_array() || r.size() != 2) parse_fail("residues are [a, m] pairs");
      residues.emplace_back(r[0].get<std::uint64_t>(), r[1].get<std::uint64_t>());
    }
    const auto plus = j.value("plus", std::vector<std::uint64_t>{});
    const auto minus = j.value("minus", std::vector<std::uint64_t>{});
    return SymSet::from_parts(residues, plus, minus, j.value("inf", false));
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

}  // namespace topolab::io
