#include "specroots/output.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace specroots {

namespace {

using nlohmann::json;

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_word(const WeylWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

const char* yn(bool b) { return b ? "yes" : "no"; }
const char* tf(bool b) { return b ? "true" : "false"; }

json envelope(const std::string& lie_type, const std::string& kind) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["lie_type"] = lie_type;
  j["kind"] = kind;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json ints_json(const std::vector<Int>& v) {
  json a = json::array();
  for (Int x : v) a.push_back(x);
  return a;
}

json tuple_json(const GammaTuple& t) {
  json a = json::array();
  for (const RootVector& g : t) a.push_back(ints_json(g.coeffs));
  return a;
}

std::vector<Int> ints_from_json(const json& a, const char* what) {
  if (!a.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<Int> v;
  v.reserve(a.size());
  for (const json& x : a) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
    v.push_back(x.get<Int>());
  }
  return v;
}

json parse_envelope(const std::string& text, const std::string& kind, ParsedEnvelope* env) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version") || !j.contains("lie_type") ||
      !j.contains("kind") || !j.contains("rows"))
    throw std::invalid_argument("JSON payload is missing envelope fields");
  if (j["schema_version"].get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version " + j["schema_version"].dump());
  if (j["kind"].get<std::string>() != kind)
    throw std::invalid_argument("expected kind \"" + kind + "\", got " + j["kind"].dump());
  if (env) {
    env->schema_version = j["schema_version"].get<int>();
    env->lie_type = j["lie_type"].get<std::string>();
    env->kind = j["kind"].get<std::string>();
  }
  return j;
}

// --- conjecture report pieces --------------------------------------------

json c1_rows(const Conjecture1Report& r) {
  json rows = json::array();
  for (const Conjecture1Entry& e : r.entries) {
    json row;
    row["conjecture"] = 1;
    row["index"] = e.index;
    row["gamma_count"] = e.gamma_count;
    row["orbit_count"] = e.orbit_count;
    row["sizes_match"] = e.sizes_match;
    row["disjoint"] = e.disjoint;
    json overlap = json::array();
    for (const WeightVector& w : e.overlap) overlap.push_back(ints_json(w.labels));
    row["overlap"] = overlap;
    row["pass"] = e.pass();
    rows.push_back(std::move(row));
  }
  return rows;
}

json c2_row(const Conjecture2Report& r) {
  json row;
  row["conjecture"] = 2;
  row["group_order"] = r.group_order;
  row["distinct_weyl_tuples"] = r.distinct_weyl_tuples;
  row["gram_tuple_count"] = r.gram_tuple_count;
  row["membership_ok"] = r.membership_ok;
  row["membership_failures"] = ints_json(std::vector<Int>(r.membership_failures.begin(),
                                                          r.membership_failures.end()));
  row["injective"] = r.injective;
  json collisions = json::array();
  for (const auto& [a, b] : r.collisions) collisions.push_back(json::array({a, b}));
  row["collisions"] = collisions;
  json weyl_only = json::array();
  for (const GammaTuple& t : r.weyl_only) weyl_only.push_back(tuple_json(t));
  row["weyl_only"] = weyl_only;
  json gram_only = json::array();
  for (const GammaTuple& t : r.gram_only) gram_only.push_back(tuple_json(t));
  row["gram_only"] = gram_only;
  row["sets_equal"] = r.sets_equal();
  row["pass"] = r.pass();
  return row;
}

}  // namespace

OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format \"" + std::string(s) + "\" (expected text, csv or json)");
}

std::string render_roots(const RootSystem& rs, OutputFormat f) {
  const std::string name = rs.cartan.lie_type.name();
  switch (f) {
    case OutputFormat::Json: {
      json j = envelope(name, "roots");
      json rows = json::array();
      for (std::size_t n = 0; n < rs.positive_roots.size(); ++n) {
        json row;
        row["index"] = n + 1;
        row["height"] = rs.positive_roots[n].height();
        row["coeffs"] = ints_json(rs.positive_roots[n].coeffs);
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = "index,height,coeffs\n";
      for (std::size_t n = 0; n < rs.positive_roots.size(); ++n)
        out += std::to_string(n + 1) + "," + std::to_string(rs.positive_roots[n].height()) + "," +
               join(rs.positive_roots[n].coeffs) + "\n";
      return out;
    }
    case OutputFormat::Text: {
      std::ostringstream out;
      out << "positive roots of " << name << " (" << rs.size() << ")\n";
      const std::size_t w = std::to_string(rs.size()).size();
      for (std::size_t n = 0; n < rs.positive_roots.size(); ++n)
        out << "  " << pad_left(std::to_string(n + 1), w) << "  h=" << rs.positive_roots[n].height()
            << "  " << join(rs.positive_roots[n].coeffs) << "\n";
      return out.str();
    }
  }
  throw std::logic_error("unhandled format");
}

std::string render_orbit(const LieType& t, int weight_index,
                         const std::vector<WeightVector>& orb, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json j = envelope(t.name(), "orbit");
      j["weight_index"] = weight_index;
      json rows = json::array();
      for (std::size_t n = 0; n < orb.size(); ++n) {
        json row;
        row["index"] = n + 1;
        row["labels"] = ints_json(orb[n].labels);
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = "index,labels\n";
      for (std::size_t n = 0; n < orb.size(); ++n)
        out += std::to_string(n + 1) + "," + join(orb[n].labels) + "\n";
      return out;
    }
    case OutputFormat::Text: {
      std::ostringstream out;
      out << "orbit of lambda_" << weight_index << " in " << t.name() << " (" << orb.size() << ")\n";
      const std::size_t w = std::to_string(orb.size()).size();
      for (std::size_t n = 0; n < orb.size(); ++n)
        out << "  " << pad_left(std::to_string(n + 1), w) << "  " << join(orb[n].labels) << "\n";
      return out.str();
    }
  }
  throw std::logic_error("unhandled format");
}

std::string render_gamma(const LieType& t, const GammaSet& gs, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json j = envelope(t.name(), "gamma");
      j["weight_index"] = gs.index;
      json rows = json::array();
      for (std::size_t n = 0; n < gs.members.size(); ++n) {
        json row;
        row["index"] = n + 1;
        row["coeffs"] = ints_json(gs.members[n].coeffs);
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = "index,coeffs\n";
      for (std::size_t n = 0; n < gs.members.size(); ++n)
        out += std::to_string(n + 1) + "," + join(gs.members[n].coeffs) + "\n";
      return out;
    }
    case OutputFormat::Text: {
      std::ostringstream out;
      out << "gamma(" << gs.index << ")+ of " << t.name() << " (" << gs.size() << ")\n";
      const std::size_t w = std::to_string(gs.size()).size();
      for (std::size_t n = 0; n < gs.members.size(); ++n)
        out << "  " << pad_left(std::to_string(n + 1), w) << "  " << join(gs.members[n].coeffs)
            << "\n";
      return out.str();
    }
  }
  throw std::logic_error("unhandled format");
}

std::string render_table(const SpecialRootTable& table, OutputFormat f) {
  const std::string name = table.lie_type.name();
  const int r = table.lie_type.rank;
  switch (f) {
    case OutputFormat::Json: {
      json j = envelope(name, "table");
      json rows = json::array();
      for (const TableRow& row : table.rows) {
        json jr;
        jr["index"] = row.index;
        json word = json::array();
        for (int l : row.word) word.push_back(l);
        jr["word"] = std::move(word);
        jr["gammas"] = tuple_json(row.gammas);
        rows.push_back(std::move(jr));
      }
      j["rows"] = std::move(rows);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = "index,word";
      for (int i = 1; i <= r; ++i) out += ",gamma" + std::to_string(i);
      out += "\n";
      for (const TableRow& row : table.rows) {
        out += std::to_string(row.index) + "," + join_word(row.word);
        for (const RootVector& g : row.gammas) out += "," + join(g.coeffs);
        out += "\n";
      }
      return out;
    }
    case OutputFormat::Text: {
      std::ostringstream out;
      out << "special-root table of " << name << " (" << table.rows.size() << " rows)\n";
      const std::size_t iw = std::to_string(table.rows.size()).size();
      std::size_t ww = 1;  // identity renders as "e"
      for (const TableRow& row : table.rows) ww = std::max(ww, join_word(row.word).size());
      for (const TableRow& row : table.rows) {
        const std::string word = row.word.empty() ? "e" : join_word(row.word);
        out << "  " << pad_left(std::to_string(row.index), iw) << "  " << pad_right(word, ww);
        for (const RootVector& g : row.gammas) out << "  (" << join(g.coeffs) << ")";
        out << "\n";
      }
      return out.str();
    }
  }
  throw std::logic_error("unhandled format");
}

std::string render_verify(const Conjecture1Report* c1, const Conjecture2Report* c2,
                          OutputFormat f) {
  if (!c1 && !c2) throw std::invalid_argument("render_verify: nothing to render");
  const LieType t = c1 ? c1->lie_type : c2->lie_type;
  switch (f) {
    case OutputFormat::Json: {
      json j = envelope(t.name(), "verify");
      json rows = json::array();
      if (c1)
        for (json& row : c1_rows(*c1)) rows.push_back(std::move(row));
      if (c2) rows.push_back(c2_row(*c2));
      j["rows"] = std::move(rows);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = "conjecture,scope,pass,detail\n";
      if (c1)
        for (const Conjecture1Entry& e : c1->entries)
          out += "1,i=" + std::to_string(e.index) + "," + tf(e.pass()) + ",gamma=" +
                 std::to_string(e.gamma_count) + " orbit=" + std::to_string(e.orbit_count) + "\n";
      if (c2)
        out += "2,all," + std::string(tf(c2->pass())) + ",weyl=" +
               std::to_string(c2->group_order) + " distinct=" +
               std::to_string(c2->distinct_weyl_tuples) + " gram=" +
               std::to_string(c2->gram_tuple_count) + "\n";
      return out;
    }
    case OutputFormat::Text: {
      std::ostringstream out;
      out << "verification report for " << t.name() << "\n";
      bool all = true;
      if (c1) {
        out << "conjecture 1:\n";
        for (const Conjecture1Entry& e : c1->entries) {
          out << "  i=" << e.index << "  gamma=" << e.gamma_count << "  orbit=" << e.orbit_count
              << "  sizes_match=" << yn(e.sizes_match) << "  disjoint=" << yn(e.disjoint) << "  "
              << (e.pass() ? "PASS" : "FAIL") << "\n";
          for (const WeightVector& w : e.overlap) out << "    overlap: " << join(w.labels) << "\n";
        }
        out << "  result: " << (c1->pass() ? "PASS" : "FAIL") << "\n";
        all = all && c1->pass();
      }
      if (c2) {
        out << "conjecture 2:\n";
        out << "  group order " << c2->group_order << ", distinct weyl tuples "
            << c2->distinct_weyl_tuples << ", gram tuples " << c2->gram_tuple_count << "\n";
        out << "  membership_ok=" << yn(c2->membership_ok) << "  injective=" << yn(c2->injective)
            << "  sets_equal=" << yn(c2->sets_equal()) << "\n";
        for (std::size_t a : c2->membership_failures) out << "    membership failure at row " << a << "\n";
        for (const auto& [a, b] : c2->collisions)
          out << "    collision: rows " << a << " and " << b << "\n";
        for (const GammaTuple& g : c2->weyl_only) {
          out << "    weyl-only tuple:";
          for (const RootVector& v : g) out << " (" << join(v.coeffs) << ")";
          out << "\n";
        }
        for (const GammaTuple& g : c2->gram_only) {
          out << "    gram-only tuple:";
          for (const RootVector& v : g) out << " (" << join(v.coeffs) << ")";
          out << "\n";
        }
        out << "  result: " << (c2->pass() ? "PASS" : "FAIL") << "\n";
        all = all && c2->pass();
      }
      out << "overall: " << (all ? "PASS" : "FAIL") << "\n";
      return out.str();
    }
  }
  throw std::logic_error("unhandled format");
}

std::string render_atable(const ATableReport& report, OutputFormat f) {
  const std::string name = "A" + std::to_string(report.rank);
  switch (f) {
    case OutputFormat::Json: {
      json j = envelope(name, "atable");
      json rows = json::array();
      for (const ATableEntry& e : report.entries) {
        json row;
        row["k"] = e.k;
        row["closed_form_count"] = e.closed_form_count;
        row["diophantine_count"] = e.diophantine_count;
        row["gamma_count"] = e.gamma_count;
        row["members_distinct"] = e.members_distinct;
        row["sets_agree"] = e.sets_agree;
        row["identity_lhs"] = e.identity_lhs.get_str();
        row["identity_rhs"] = e.identity_rhs.get_str();
        row["identity_ok"] = e.identity_ok;
        row["duality_ok"] = e.duality_ok;
        row["pass"] = e.pass();
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out =
          "k,closed_form_count,diophantine_count,gamma_count,members_distinct,sets_agree,"
          "identity_lhs,identity_rhs,identity_ok,duality_ok,pass\n";
      for (const ATableEntry& e : report.entries)
        out += std::to_string(e.k) + "," + std::to_string(e.closed_form_count) + "," +
               std::to_string(e.diophantine_count) + "," + std::to_string(e.gamma_count) + "," +
               tf(e.members_distinct) + "," + tf(e.sets_agree) + "," + e.identity_lhs.get_str() +
               "," + e.identity_rhs.get_str() + "," + tf(e.identity_ok) + "," + tf(e.duality_ok) +
               "," + tf(e.pass()) + "\n";
      return out;
    }
    case OutputFormat::Text: {
      std::ostringstream out;
      out << "A-series closed-form report for rank " << report.rank << "\n";
      for (const ATableEntry& e : report.entries)
        out << "  k=" << e.k << "  count=" << e.gamma_count << "  distinct=" << yn(e.members_distinct)
            << "  agree=" << yn(e.sets_agree) << "  identity " << e.identity_lhs.get_str() << "="
            << e.identity_rhs.get_str() << " " << yn(e.identity_ok) << "  duality="
            << yn(e.duality_ok) << "  " << (e.pass() ? "PASS" : "FAIL") << "\n";
      out << "overall: " << (report.pass() ? "PASS" : "FAIL") << "\n";
      return out.str();
    }
  }
  throw std::logic_error("unhandled format");
}

std::vector<RootVector> parse_roots_json(const std::string& text, ParsedEnvelope* env) {
  const json j = parse_envelope(text, "roots", env);
  std::vector<RootVector> out;
  for (const json& row : j["rows"]) out.push_back(RootVector{ints_from_json(row.at("coeffs"), "coeffs")});
  return out;
}

std::vector<WeightVector> parse_orbit_json(const std::string& text, ParsedEnvelope* env) {
  const json j = parse_envelope(text, "orbit", env);
  std::vector<WeightVector> out;
  for (const json& row : j["rows"]) out.push_back(WeightVector{ints_from_json(row.at("labels"), "labels")});
  return out;
}

GammaSet parse_gamma_json(const std::string& text, ParsedEnvelope* env) {
  const json j = parse_envelope(text, "gamma", env);
  GammaSet gs;
  gs.index = j.at("weight_index").get<int>();
  for (const json& row : j["rows"]) gs.members.push_back(RootVector{ints_from_json(row.at("coeffs"), "coeffs")});
  return gs;
}

SpecialRootTable parse_table_json(const std::string& text, ParsedEnvelope* env) {
  const json j = parse_envelope(text, "table", env);
  SpecialRootTable table;
  table.lie_type = LieType::parse(j.at("lie_type").get<std::string>());
  for (const json& row : j["rows"]) {
    TableRow tr;
    tr.index = row.at("index").get<std::size_t>();
    for (const json& l : row.at("word")) tr.word.push_back(l.get<int>());
    for (const json& g : row.at("gammas")) tr.gammas.push_back(RootVector{ints_from_json(g, "gamma")});
    table.rows.push_back(std::move(tr));
  }
  return table;
}

}  // namespace specroots
