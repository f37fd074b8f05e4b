#include "specroots/cache.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "specroots/output.hpp"

namespace specroots {

namespace {

using nlohmann::json;

}  // namespace

std::filesystem::path GroupCache::path_for(LieType t) const {
  return dir / ("weyl_" + t.name() + ".json");
}

std::optional<WeylGroup> GroupCache::load(LieType t) const {
  std::ifstream in(path_for(t));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();

  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception&) {
    return std::nullopt;
  }
  if (!j.is_object() || !j.contains("schema_version") || !j.contains("lie_type") ||
      !j.contains("order") || !j.contains("elements"))
    return std::nullopt;
  if (!j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != kSchemaVersion)
    return std::nullopt;
  if (!j["lie_type"].is_string() || j["lie_type"].get<std::string>() != t.name()) return std::nullopt;

  WeylGroup g;
  g.cartan = build_cartan(t);
  for (const json& word : j["elements"]) {
    if (!word.is_array()) return std::nullopt;
    WeylWord w;
    for (const json& l : word) {
      if (!l.is_number_integer()) return std::nullopt;
      const int letter = l.get<int>();
      if (letter < 1 || letter > t.rank) return std::nullopt;
      w.push_back(letter);
    }
    g.elements.push_back(std::move(w));
  }
  if (!j["order"].is_number_unsigned() || j["order"].get<std::size_t>() != g.size()) return std::nullopt;
  if (BigInt(static_cast<unsigned long>(g.size())) != group_order(t)) return std::nullopt;
  return g;
}

void GroupCache::store(const WeylGroup& g) const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["lie_type"] = g.lie_type().name();
  j["order"] = g.size();
  json elements = json::array();
  for (const WeylWord& w : g.elements) {
    json word = json::array();
    for (int l : w) word.push_back(l);
    elements.push_back(std::move(word));
  }
  j["elements"] = std::move(elements);

  std::filesystem::create_directories(dir);
  const std::filesystem::path target = path_for(g.lie_type());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, target);
}

WeylGroup enumerate_group_cached(LieType t, const std::filesystem::path& cache_dir,
                                 std::size_t max_elements) {
  if (cache_dir.empty()) return enumerate_group(t, max_elements);
  const GroupCache cache{cache_dir};
  if (std::optional<WeylGroup> hit = cache.load(t)) return std::move(*hit);
  WeylGroup g = enumerate_group(t, max_elements);
  cache.store(g);
  return g;
}

}  // namespace specroots
