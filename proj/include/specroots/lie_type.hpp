#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "specroots/rational.hpp"

namespace specroots {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A finite Lie algebra family plus rank, e.g. A3 or G2.
///
/// Admissible ranks: A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2.
struct LieType {
  Family family;
  int rank;

  std::string name() const;

  /// Parses "A3", "G2", ... and validates the rank.
  /// Throws std::invalid_argument with a diagnostic otherwise.
  static LieType parse(std::string_view s);

  bool operator==(const LieType&) const = default;
};

/// Throws std::invalid_argument when the rank is outside the family's range.
void validate(const LieType& t);

/// Thrown when a request would exceed a configured enumeration cap or search
/// budget; the message names the value the cap would have to reach.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specroots
