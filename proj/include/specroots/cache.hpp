#pragma once

#include <filesystem>
#include <optional>

#include "specroots/lie_type.hpp"
#include "specroots/weyl.hpp"

namespace specroots {

/// Versioned on-disk store of enumerated Weyl groups, one JSON file per type.
/// A hit reproduces the cold enumeration exactly (same words, same order), so
/// downstream output is byte-identical either way. Stale or damaged files
/// count as misses.
struct GroupCache {
  std::filesystem::path dir;

  std::filesystem::path path_for(LieType t) const;
  std::optional<WeylGroup> load(LieType t) const;
  void store(const WeylGroup& g) const;  // temp file + atomic rename
};

/// enumerate_group with an optional cache directory; an empty path disables
/// caching.
WeylGroup enumerate_group_cached(LieType t, const std::filesystem::path& cache_dir,
                                 std::size_t max_elements = kDefaultEnumerationCap);

}  // namespace specroots
