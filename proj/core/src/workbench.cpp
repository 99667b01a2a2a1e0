#include "bbt/workbench.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bbt {

using nlohmann::json;

const SystemModel& Workbench::model() const {
  if (auto* m = std::get_if<SystemModel>(&universe)) return *m;
  if (auto* e = std::get_if<EioUniverse>(&universe)) return e->model;
  return std::get<TemporalUniverse>(universe).model;
}

const EioUniverse* Workbench::eio() const {
  return std::get_if<EioUniverse>(&universe);
}

const TemporalUniverse* Workbench::temporal() const {
  return std::get_if<TemporalUniverse>(&universe);
}

namespace {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name,
                                        const char* what) {
  auto it = map.find(name);
  if (it == map.end())
    throw ValidationError(std::string("no ") + what + " named " + name);
  return it->second;
}

}  // namespace

const Requirement& Workbench::requirement(const std::string& name) const {
  return lookup(requirements, name, "requirement");
}
const TestSetup& Workbench::setup(const std::string& name) const {
  return lookup(setups, name, "setup");
}
const Requirement& Workbench::assumption(const std::string& name) const {
  return lookup(assumptions, name, "assumption");
}
const TemporalProperty& Workbench::property(const std::string& name) const {
  return lookup(properties, name, "property");
}

namespace {

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array())
    throw ValidationError(where + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string())
      throw ValidationError(where + " must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

void parse_universe(const json& j, Workbench& wb) {
  if (!j.contains("model"))
    throw ValidationError("workbench file has no model section");
  const json& m = j.at("model");
  if (m.contains("builtin")) {
    const std::string kind = m.at("builtin").get<std::string>();
    if (kind == "eio") {
      const int bound = m.at("bound").get<int>();
      wb.universe = build_universe(bound);
      wb.universe_label = "eio(bound=" + std::to_string(bound) + ")";
    } else if (kind == "temporal") {
      auto u = build_temporal_universe(
          m.at("alphabet").get<std::string>(),
          m.at("stem_bound").get<std::size_t>(),
          m.at("loop_bound").get<std::size_t>(),
          m.at("prefix_depth").get<std::size_t>(),
          m.value("behavior_cap", std::size_t{12}));
      wb.universe_label = u.label();
      wb.universe = std::move(u);
    } else {
      throw ValidationError("unknown builtin model: " + kind);
    }
    return;
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : m.at("order")) {
    if (!p.is_array() || p.size() != 2)
      throw ValidationError("order entries must be pairs");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  wb.universe = SystemModel::from_pairs(
      string_list(m.at("elements"), "model.elements"), pairs,
      m.at("bot").get<std::string>(), m.at("top").get<std::string>());
  wb.universe_label = "model(" + std::to_string(wb.model().size()) +
                      " elements)";
}

Requirement parse_requirement(const Workbench& wb, const std::string& name,
                              const json& body) {
  if (body.is_object() && body.contains("builtin")) {
    const auto* eio = wb.eio();
    if (!eio)
      throw ValidationError("builtin requirement " + name +
                            " needs an eio model");
    Requirement r = builtin_requirement(*eio, body.at("builtin"));
    r.name = name;
    return r;
  }
  return make_requirement(wb.model(), name,
                          string_list(body, "requirement " + name));
}

TestSetup parse_setup(const Workbench& wb, const std::string& name,
                      const json& body) {
  if (body.contains("builtin")) {
    const std::string kind = body.at("builtin").get<std::string>();
    if (kind == "reflexive") {
      TestSetup s = reflexive_setup(wb.model());
      s.name = name;
      return s;
    }
    if (kind == "t_k") {
      const auto* eio = wb.eio();
      if (!eio) throw ValidationError("t_k setup needs an eio model");
      TestSetup s = tk_setup(*eio, body.at("k").get<int>());
      s.name = name;
      return s;
    }
    if (kind == "t_star") {
      const auto* temporal = wb.temporal();
      if (!temporal) throw ValidationError("t_star setup needs a temporal model");
      TestSetup s = tstar_setup(*temporal, body.value("set_cap", std::size_t{3}));
      s.name = name;
      return s;
    }
    throw ValidationError("unknown builtin setup: " + kind);
  }
  std::map<std::string, std::vector<std::string>> alpha;
  for (const auto& [elem, obs] : body.at("alpha").items())
    alpha[elem] = string_list(obs, "alpha(" + elem + ")");
  return build_setup(wb.model(), name,
                     string_list(body.at("observations"),
                                 "setup " + name + " observations"),
                     alpha);
}

}  // namespace

Workbench parse_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  Workbench wb;
  try {
    parse_universe(j, wb);
    if (j.contains("requirements"))
      for (const auto& [name, body] : j.at("requirements").items())
        wb.requirements.emplace(name, parse_requirement(wb, name, body));
    if (j.contains("assumptions"))
      for (const auto& [name, body] : j.at("assumptions").items())
        wb.assumptions.emplace(name, parse_requirement(wb, name, body));
    if (j.contains("setups"))
      for (const auto& [name, body] : j.at("setups").items())
        wb.setups.emplace(name, parse_setup(wb, name, body));
    if (j.contains("properties")) {
      const auto* temporal = wb.temporal();
      if (!temporal)
        throw ValidationError("properties need a temporal model");
      for (const auto& [name, body] : j.at("properties").items())
        wb.properties.emplace(
            name, make_property(*temporal, name,
                                string_list(body, "property " + name)));
    }
  } catch (const json::exception& e) {
    throw ValidationError(e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
  return wb;
}

Workbench parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

std::string render_eio_workbench(int bound, int k_max) {
  json j;
  j["model"] = {{"builtin", "eio"}, {"bound", bound}};
  json reqs = json::object();
  for (const auto& name : builtin_requirement_names())
    reqs[name] = {{"builtin", name}};
  j["requirements"] = reqs;
  json setups = json::object();
  // The reflexive setup on the bound-4 powerset would materialize a
  // quadratic alpha; leave it out of generated files at that size.
  if (bound <= 3) setups["reflexive"] = {{"builtin", "reflexive"}};
  for (int k = 1; k <= k_max; ++k)
    setups["t" + std::to_string(k)] = {{"builtin", "t_k"}, {"k", k}};
  j["setups"] = setups;
  return j.dump(2) + "\n";
}

std::string render_temporal_workbench(const std::string& alphabet,
                                      std::size_t stem_bound,
                                      std::size_t loop_bound,
                                      std::size_t prefix_depth) {
  auto u = build_temporal_universe(alphabet, stem_bound, loop_bound,
                                   prefix_depth);
  json j;
  j["model"] = {{"builtin", "temporal"},
                {"alphabet", u.alphabet},
                {"stem_bound", stem_bound},
                {"loop_bound", loop_bound},
                {"prefix_depth", prefix_depth}};
  json props = json::object();
  std::vector<std::string> all;
  for (const auto& b : u.behaviors) all.push_back(b.id());
  props["all"] = all;
  props["none"] = json::array();
  props["first_only"] = {u.behaviors.front().id()};
  j["properties"] = props;
  j["setups"] = {{"t_star", {{"builtin", "t_star"}}},
                 {"reflexive", {{"builtin", "reflexive"}}}};
  return j.dump(2) + "\n";
}

}  // namespace bbt
