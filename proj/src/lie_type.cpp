#include "specroots/lie_type.hpp"

#include <cctype>

namespace specroots {

std::string LieType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

LieType LieType::parse(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("Lie type must look like \"A3\": got \"" + std::string(s) + "\"");
  const char f = s[0];
  if (f < 'A' || f > 'G')
    throw std::invalid_argument("unknown family '" + std::string(1, f) + "' (expected A..G)");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("invalid rank in Lie type \"" + std::string(s) + "\"");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw std::invalid_argument("rank out of range in \"" + std::string(s) + "\"");
  }
  LieType t{static_cast<Family>(f), rank};
  validate(t);
  return t;
}

void validate(const LieType& t) {
  const int r = t.rank;
  auto fail = [&](const std::string& need) {
    throw std::invalid_argument("invalid rank " + std::to_string(r) + " for family " +
                                std::string(1, static_cast<char>(t.family)) + " (" + need + ")");
  };
  switch (t.family) {
    case Family::A:
      if (r < 1) fail("rank >= 1");
      break;
    case Family::B:
      if (r < 2) fail("rank >= 2");
      break;
    case Family::C:
      if (r < 2) fail("rank >= 2");
      break;
    case Family::D:
      if (r < 3) fail("rank >= 3");
      break;
    case Family::E:
      if (r < 6 || r > 8) fail("rank in {6,7,8}");
      break;
    case Family::F:
      if (r != 4) fail("rank = 4");
      break;
    case Family::G:
      if (r != 2) fail("rank = 2");
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
}

}  // namespace specroots
