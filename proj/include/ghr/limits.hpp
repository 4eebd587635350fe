#pragma once

#include <cstddef>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>

#include "ghr/error.hpp"

namespace ghr {

/// Size caps guarding the exhaustive algorithms.
///
/// Defaults can be overridden through the GHR_LIMITS environment variable, a
/// comma separated list of key=value pairs, e.g.
/// `GHR_LIMITS="operator_maps=50000,family_members=2000000"`.
struct Limits {
  std::size_t action_cells = 1'000'000;     // |S|*|Gamma|*|S|
  std::size_t matrix_elements = 4096;       // |H|^(m*n) and |H|^(n*m)
  std::size_t operator_maps = 20'000;       // closure size of L or R
  std::size_t violations = 16;              // reported per validation
  std::size_t ideal_carrier = 256;          // carrier size for crisp ideal enumeration
  std::size_t ideal_count = 100'000;        // distinct closed sets collected
  std::size_t fuzzy_candidates = 1'000'000; // |V|^(n-1) for exhaustive filtering
  std::size_t family_members = 1'000'000;   // members of a fuzzy family

  static Limits from_string(std::string_view spec) {
    Limits limits;
    std::string item;
    std::istringstream in{std::string(spec)};
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) throw StructuralError("GHR_LIMITS entry without '=': " + item);
      auto key = item.substr(0, eq);
      std::size_t value = 0;
      try {
        value = std::stoull(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw StructuralError("GHR_LIMITS value is not a number: " + item);
      }
      if (key == "action_cells") limits.action_cells = value;
      else if (key == "matrix_elements") limits.matrix_elements = value;
      else if (key == "operator_maps") limits.operator_maps = value;
      else if (key == "violations") limits.violations = value;
      else if (key == "ideal_carrier") limits.ideal_carrier = value;
      else if (key == "ideal_count") limits.ideal_count = value;
      else if (key == "fuzzy_candidates") limits.fuzzy_candidates = value;
      else if (key == "family_members") limits.family_members = value;
      else throw StructuralError("unknown GHR_LIMITS key: " + key);
    }
    return limits;
  }

  static Limits from_environment() {
    const char* spec = std::getenv("GHR_LIMITS");
    return spec ? from_string(spec) : Limits{};
  }
};

}  // namespace ghr
