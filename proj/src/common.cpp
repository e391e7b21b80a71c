#include <algorithm>
#include <cstdlib>
#include <string>

#include "topolab/errors.hpp"
#include "topolab/pointset.hpp"

namespace topolab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::NotADiscretization: return "NotADiscretization";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::NotInAlgebra: return "NotInAlgebra";
    case ErrorKind::NotOpen: return "NotOpen";
    case ErrorKind::InvalidSet: return "InvalidSet";
    case ErrorKind::NotACMorphism: return "NotACMorphism";
    case ErrorKind::OutOfComputableSlice: return "OutOfComputableSlice";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string PointSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (auto p : *this) {
    if (!first_item) out += ',';
    out += std::to_string(p);
    first_item = false;
  }
  out += '}';
  return out;
}

std::vector<PointSet> subsets_of(PointSet ground) {
  std::vector<PointSet> out;
  const Mask g = ground.bits();
  Mask s = 0;
  do {
    out.emplace_back(s);
    s = (s - g) & g;
  } while (s != 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t point_cap() {
  static const std::size_t cap = [] {
    std::size_t value = 20;
    if (const char* env = std::getenv("TOPOLAB_CAP")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) value = static_cast<std::size_t>(parsed);
    }
    return std::clamp<std::size_t>(value, 1, kMaxPoints);
  }();
  return cap;
}

}  // namespace topolab
