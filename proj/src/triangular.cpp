#include "rc3bp/triangular.hpp"

namespace rc3bp {

std::string_view to_string(TriangularLocation loc) noexcept {
  switch (loc) {
    case TriangularLocation::LeftOfBody1: return "LeftOfBody1";
    case TriangularLocation::AboveBelowBody1: return "AboveBelowBody1";
    case TriangularLocation::Between: return "Between";
    case TriangularLocation::AboveBelowBody2: return "AboveBelowBody2";
    case TriangularLocation::RightOfBody2: return "RightOfBody2";
  }
  return "Unknown";
}

}  // namespace rc3bp
