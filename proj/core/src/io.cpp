#include "esakia/io.hpp"

#include <algorithm>
#include <sstream>

#include "esakia/errors.hpp"

namespace esakia {

Json poset_to_json(const Poset& p) {
  Json j;
  Json names = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) names.push_back(p.name(i));
  j["points"] = std::move(names);
  Json leq = Json::array();
  for (auto [a, b] : p.relation())
    if (a != b) leq.push_back({a, b});
  j["leq"] = std::move(leq);
  if (p.has_levels()) j["levels"] = p.level_tags();
  return j;
}

Poset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
    throw InvalidArgument("poset JSON needs a \"points\" array");
  std::vector<std::string> names;
  for (const auto& n : j.at("points")) {
    if (!n.is_string()) throw InvalidArgument("point names must be strings");
    names.push_back(n.get<std::string>());
  }
  Relation rel;
  if (j.contains("leq")) {
    if (!j.at("leq").is_array()) throw InvalidArgument("\"leq\" must be an array of [i, j] pairs");
    for (const auto& pair : j.at("leq")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned())
        throw InvalidArgument("\"leq\" entries must be [i, j] with non-negative indices");
      rel.emplace_back(pair[0].get<std::size_t>(), pair[1].get<std::size_t>());
    }
  }
  std::vector<int> levels;
  if (j.contains("levels")) {
    if (!j.at("levels").is_array()) throw InvalidArgument("\"levels\" must be an array");
    for (const auto& l : j.at("levels")) {
      if (!l.is_number_integer()) throw InvalidArgument("level tags must be integers");
      levels.push_back(l.get<int>());
    }
  }
  return Poset::validate(std::move(names), rel, std::move(levels));
}

Poset parse_poset(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  return poset_from_json(j);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string poset_to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(p.name(i)) << "\"";
    if (p.has_levels()) out << ", level=" << p.level(i);
    out << "];\n";
  }
  if (p.has_levels()) {
    for (int level = 0; level <= p.max_level(); ++level) {
      out << "  { rank=same;";
      for (auto x : p.level_points(level)) out << " n" << x << ";";
      out << " }\n";
    }
  }
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

Json point_set_to_json(const PointSet& s) {
  Json out = Json::array();
  s.for_each([&](std::size_t x) { out.push_back(x); });
  return out;
}

PointSet point_set_from_json(const Poset& p, const Json& j) {
  if (!j.is_array()) throw InvalidArgument("point set must be a JSON array");
  PointSet out;
  for (const auto& e : j) {
    if (e.is_number_unsigned()) {
      const auto x = e.get<std::size_t>();
      if (x >= p.size()) throw ForeignPoint("point index " + std::to_string(x) + " out of range");
      out.insert(x);
    } else if (e.is_string()) {
      auto x = p.index_of(e.get<std::string>());
      if (!x) throw ForeignPoint("unknown point '" + e.get<std::string>() + "'");
      out.insert(*x);
    } else {
      throw InvalidArgument("point set entries must be indices or names");
    }
  }
  return out;
}

Json colouring_to_json(const Colouring& c) {
  Json out = Json::array();
  for (const auto& u : c.colours()) out.push_back(point_set_to_json(u.members()));
  return out;
}

Json partition_to_json(const TypePartition& t) {
  Json j;
  if (t.is_omega()) {
    j["stage"] = "omega";
    j["stabilized_at"] = *t.stabilized_at();
  } else {
    j["stage"] = t.stage();
  }
  j["blocks"] = t.blocks();
  return j;
}

namespace {

Json table_to_json(const std::vector<Element>& table, std::size_t n) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    rows.push_back(std::vector<Element>(table.begin() + static_cast<std::ptrdiff_t>(a * n),
                                        table.begin() + static_cast<std::ptrdiff_t>((a + 1) * n)));
  return rows;
}

}  // namespace

Json algebra_to_json(const FiniteHeytingAlgebra& a) {
  Json j;
  Json elements = Json::array();
  for (Element e = 0; e < a.size(); ++e) {
    if (!a.upsets().empty())
      elements.push_back(point_set_to_json(a.upsets()[e]));
    else
      elements.push_back(a.label(e));
  }
  j["size"] = a.size();
  j["elements"] = std::move(elements);
  j["meet"] = table_to_json(a.meet_table(), a.size());
  j["join"] = table_to_json(a.join_table(), a.size());
  j["implies"] = table_to_json(a.imp_table(), a.size());
  j["bottom"] = a.bottom();
  j["top"] = a.top();
  return j;
}

Json ranked_algebra_to_json(const RankedAlgebra& ra) {
  std::vector<std::size_t> ids(ra.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(),
            [&](std::size_t a, std::size_t b) { return ra.elements()[a] < ra.elements()[b]; });
  Json elements = Json::array();
  for (auto id : ids) {
    Json e;
    e["points"] = point_set_to_json(ra.elements()[id]);
    e["label"] = format_points(ra.parent(), ra.elements()[id]);
    e["rank"] = ra.rank(id);
    e["witness"] = ra.witness_text(id);
    elements.push_back(std::move(e));
  }
  Json gens = Json::array();
  for (const auto& g : ra.generators()) gens.push_back(point_set_to_json(g));
  Json j;
  j["generators"] = std::move(gens);
  j["size"] = ra.size();
  j["strata"] = ra.stratum_sizes();
  j["elements"] = std::move(elements);
  return j;
}

Json generation_report_to_json(const GenerationReport& r) {
  Json j;
  j["algebra_size"] = r.algebra_size;
  j["k"] = r.k;
  j["max_generated_size"] = r.max_generated_size;
  j["witness_tuple"] = r.witness_tuple;
  if (r.max_generated_size_distinct) {
    j["max_generated_size_distinct"] = *r.max_generated_size_distinct;
    j["distinct_witness"] = r.distinct_witness;
  } else {
    j["max_generated_size_distinct"] = nullptr;
  }
  return j;
}

Json ladder_spec_to_json(const LadderSpec& spec) {
  return Json{{"n", spec.n}, {"depth", spec.depth}, {"with_bottom", spec.with_bottom}};
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json collapse_report_to_json(const CollapseReport& r) {
  Json j;
  j["ladder"] = ladder_spec_to_json(r.spec);
  j["colours"] = r.colours;
  j["classes_per_level"] = r.classes_per_level;
  j["first_merge_level"] = optional_json(r.first_merge_level);
  j["anchor_level"] = optional_json(r.anchor_level);
  j["collapse_level"] = optional_json(r.collapse_level);
  j["bound_satisfied"] = r.bound_satisfied;
  return j;
}

Json next_level_report_to_json(const NextLevelReport& r) {
  Json j;
  j["checked_levels"] = r.checked_levels;
  j["counterexample_level"] = optional_json(r.counterexample_level);
  j["holds"] = r.holds();
  return j;
}

Json non_colourability_to_json(const NonColourabilityReport& r) {
  Json j;
  j["ladder"] = ladder_spec_to_json(r.spec);
  j["colours"] = r.colours;
  j["upset_count"] = r.upset_count;
  j["point_count"] = r.point_count;
  j["tuples_checked"] = r.tuples_checked;
  j["successes"] = r.successes;
  j["max_classes"] = r.max_classes;
  j["mode"] = r.sampled ? "sampled" : "exhaustive";
  if (r.sampled) j["seed"] = r.seed;
  j["first_success"] = optional_json(r.first_success);
  j["holds"] = r.holds();
  return j;
}

Json strictness_to_json(std::span<const StrictnessRow> rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json witness = Json::array();
    for (const auto& w : row.witness) witness.push_back(point_set_to_json(w));
    out.push_back({{"depth", row.depth},
                   {"algebra_size", row.algebra_size},
                   {"max_generated_size", row.max_generated_size},
                   {"witness", std::move(witness)},
                   {"canonical_generates_all", row.canonical_generates_all}});
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace esakia
