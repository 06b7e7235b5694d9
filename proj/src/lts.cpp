#include "rsos/lts.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "rsos/error.hpp"
#include "rsos/parser.hpp"

namespace rsos {

std::string_view to_string(StepMode mode) { return mode == StepMode::raw ? "raw" : "dominant"; }

std::vector<std::vector<std::size_t>> Lts::outgoing() const {
  std::vector<std::vector<std::size_t>> out(states.size());
  for (std::size_t k = 0; k < transitions.size(); ++k) out[transitions[k].from].push_back(k);
  return out;
}

std::size_t Lts::deadlock_count() const {
  std::vector<bool> has_out(states.size(), false);
  for (const auto& t : transitions) has_out[t.from] = true;
  return static_cast<std::size_t>(std::count(has_out.begin(), has_out.end(), false));
}

Lts build_lts(const Process& p, StepMode mode, const BuildLimits& limits) {
  Lts lts;
  lts.mode = mode;
  std::unordered_map<Process, std::size_t> index;
  std::vector<std::size_t> depth;
  auto intern = [&](const Process& q, std::size_t d) -> std::pair<std::size_t, bool> {
    auto [it, inserted] = index.try_emplace(q, lts.states.size());
    if (inserted) {
      lts.states.push_back(q);
      depth.push_back(d);
    }
    return {it->second, inserted};
  };
  intern(p, 0);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t s = frontier.front();
    frontier.pop_front();
    const auto steps = mode == StepMode::raw ? raw_step(lts.states[s], limits.raw) : dominant_step(lts.states[s]);
    for (const auto& step : steps) {
      if (!index.count(step.target)) {
        if (lts.states.size() >= limits.max_states) {
          throw LimitExceeded(LimitExceeded::Kind::max_states, limits.max_states, frontier.size() + 1);
        }
        if (limits.max_depth && depth[s] + 1 > *limits.max_depth) {
          throw LimitExceeded(LimitExceeded::Kind::max_depth, *limits.max_depth, frontier.size() + 1);
        }
      }
      auto [to, fresh] = intern(step.target, depth[s] + 1);
      if (fresh) frontier.push_back(to);
      lts.transitions.push_back({s, step.label, to});
    }
  }
  return lts;
}

namespace {

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

nlohmann::ordered_json names(const EntitySet& set, const Universe& universe) {
  std::vector<std::string> out;
  for (auto id : set.ids()) out.push_back(universe.name(id));
  std::sort(out.begin(), out.end());
  return out;
}

EntitySet entities(const nlohmann::json& array, const Universe& universe) {
  EntitySet out;
  if (!array.is_array()) throw SpecError(SpecError::Kind::syntax_error, {}, "expected an array of entity names");
  for (const auto& name : array) {
    const auto id = universe.find(name.get<std::string>());
    if (!id) throw SpecError(SpecError::Kind::unknown_entity, {}, "unknown entity '" + name.get<std::string>() + "'");
    out.insert(*id);
  }
  return out;
}

}  // namespace

std::string export_dot(const Lts& lts, const Universe& universe) {
  std::ostringstream out;
  out << "digraph lts {\n";
  for (std::size_t s = 0; s < lts.states.size(); ++s) {
    out << "  s" << s << " [label=\"" << escape(to_string(lts.states[s], universe)) << "\"";
    if (s == lts.initial()) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& t : lts.transitions) {
    out << "  s" << t.from << " -> s" << t.to << " [label=\"" << escape(to_string(t.label, universe)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const Lts& lts, const Universe& universe) {
  nlohmann::ordered_json doc;
  doc["states"] = nlohmann::ordered_json::array();
  for (const auto& s : lts.states) doc["states"].push_back(to_string(s, universe));
  doc["initial"] = lts.initial();
  doc["transitions"] = nlohmann::ordered_json::array();
  for (const auto& t : lts.transitions) {
    nlohmann::ordered_json edge;
    edge["from"] = t.from;
    edge["w"] = names(t.label.w, universe);
    edge["r"] = names(t.label.r, universe);
    edge["i"] = names(t.label.i, universe);
    edge["p"] = names(t.label.p, universe);
    edge["to"] = t.to;
    doc["transitions"].push_back(std::move(edge));
  }
  return doc.dump();
}

Lts import_json(std::string_view text, const Universe& universe, StepMode mode) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(SpecError::Kind::syntax_error, {}, std::string("malformed JSON: ") + e.what());
  }
  Lts lts;
  lts.mode = mode;
  try {
    for (const auto& s : doc.at("states")) lts.states.push_back(parse_process(s.get<std::string>(), universe));
    if (doc.at("initial").get<std::size_t>() != 0) {
      throw SpecError(SpecError::Kind::syntax_error, {}, "initial state must be 0");
    }
    for (const auto& e : doc.at("transitions")) {
      Transition t;
      t.from = e.at("from").get<std::size_t>();
      t.to = e.at("to").get<std::size_t>();
      if (t.from >= lts.states.size() || t.to >= lts.states.size()) {
        throw SpecError(SpecError::Kind::syntax_error, {}, "transition endpoint out of range");
      }
      t.label = Label{entities(e.at("w"), universe), entities(e.at("r"), universe), entities(e.at("i"), universe),
                      entities(e.at("p"), universe)};
      lts.transitions.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(SpecError::Kind::syntax_error, {}, std::string("malformed LTS document: ") + e.what());
  }
  return lts;
}

}  // namespace rsos
