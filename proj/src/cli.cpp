#include "rsos/cli.hpp"

#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "rsos/classic.hpp"
#include "rsos/connector.hpp"
#include "rsos/equiv.hpp"
#include "rsos/lts.hpp"
#include "rsos/parser.hpp"
#include "rsos/quant.hpp"

namespace rsos {

namespace {

// Raised for conditions reported with exit status 2.
struct UsageError {
  std::string message;
};

Spec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_spec(text.str());
  } catch (const SpecError& e) {
    throw UsageError{path + ":" + e.what()};
  }
}

BuildLimits limits_from_env() {
  BuildLimits limits;
  if (const char* env = std::getenv("RSOS_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (!*env || *end || v == 0) throw UsageError{"RSOS_MAX_STATES must be a positive integer"};
    limits.max_states = static_cast<std::size_t>(v);
  }
  return limits;
}

const SystemDecl& system_named(const Spec& spec, const std::string& name) {
  if (const auto* s = spec.find_system(name)) return *s;
  throw UsageError{"unknown system '" + name + "'"};
}

// The context sequence of a system whose contexts are plain prefix chains,
// with the initial state folded into C_0. None for anything else.
std::optional<std::vector<EntitySet>> classic_sequence(const Process& p) {
  if (p.contexts().empty()) return std::nullopt;
  std::vector<std::vector<EntitySet>> chains;
  for (const auto& k : p.contexts()) {
    std::vector<EntitySet> chain;
    const ContextExpr* cur = &k;
    while (cur->kind() == ContextExpr::Kind::prefix) {
      chain.push_back(cur->offered());
      cur = &cur->tail();
    }
    if (!cur->is_nil()) return std::nullopt;
    chains.push_back(std::move(chain));
  }
  std::size_t n = chains.front().size();
  for (const auto& c : chains) n = std::min(n, c.size());
  if (n == 0) return std::nullopt;
  std::vector<EntitySet> gamma(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& c : chains) gamma[i] |= c[i];
  }
  gamma[0] |= p.state();
  return gamma;
}

int cmd_run_process(const Spec& spec, const Process& p, std::size_t steps, std::ostream& out) {
  const auto& u = spec.universe;
  std::vector<Process> states{p};
  std::map<Process, std::size_t> index{{p, 0}};
  std::vector<std::size_t> depth{0};
  out << "initial: #0 " << to_string(p, u) << "\n";
  std::deque<std::size_t> queue{0};
  const auto limits = limits_from_env();
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    if (depth[s] >= steps) continue;
    const auto next = dominant_step(states[s]);
    if (next.empty()) {
      out << "DEADLOCK #" << s << "\n";
      continue;
    }
    for (const auto& step : next) {
      auto [it, fresh] = index.try_emplace(step.target, states.size());
      if (fresh) {
        if (states.size() >= limits.max_states) {
          throw LimitExceeded(LimitExceeded::Kind::max_states, limits.max_states, queue.size() + 1);
        }
        states.push_back(step.target);
        depth.push_back(depth[s] + 1);
        queue.push_back(it->second);
      }
      out << "step " << depth[s] + 1 << ": #" << s << " --- " << to_string(step.label, u) << " ---> #"
          << it->second << " " << to_string(step.target, u) << "\n";
    }
  }
  auto gamma = classic_sequence(p);
  if (gamma && steps > 0) {
    const auto run = run_interactive(p.reactions(), *gamma);
    const std::size_t shown = std::min(steps, gamma->size());
    out << "states:";
    for (std::size_t i = 0; i < shown; ++i) out << " " << brace_set(run.states.tau[i], u);
    out << "\nresults:";
    for (std::size_t i = 0; i < shown; ++i) out << " " << brace_set(run.process.delta[i], u);
    out << "\n";
  }
  return exit_ok;
}

int cmd_run_link(const Spec& spec, const ConnectedSystem& s0, std::size_t steps, std::ostream& out) {
  const auto& u = spec.universe;
  std::vector<ConnectedSystem> states{s0};
  std::vector<std::size_t> depth{0};
  out << "initial: #0 " << to_string(s0, u) << "\n";
  std::deque<std::size_t> queue{0};
  const auto limits = limits_from_env();
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    if (depth[s] >= steps) continue;
    const auto next = connector_step(states[s]);
    if (next.empty()) {
      out << "DEADLOCK #" << s << "\n";
      continue;
    }
    for (const auto& step : next) {
      std::size_t to = 0;
      while (to < states.size() && !(states[to] == step.target)) ++to;
      if (to == states.size()) {
        if (states.size() >= limits.max_states) {
          throw LimitExceeded(LimitExceeded::Kind::max_states, limits.max_states, queue.size() + 1);
        }
        states.push_back(step.target);
        depth.push_back(depth[s] + 1);
        queue.push_back(to);
      }
      out << "step " << depth[s] + 1 << ": #" << s << " --- " << to_string(step.label, u) << " ---> #" << to
          << " " << to_string(step.target, u) << "\n";
    }
  }
  return exit_ok;
}

int cmd_lts(const Spec& spec, const std::string& name, const std::string& mode, const std::string& dot,
            const std::string& json, std::ostream& out) {
  const auto& p = system_named(spec, name).process;
  const auto lts = build_lts(p, mode == "raw" ? StepMode::raw : StepMode::dominant, limits_from_env());
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError{"cannot write '" + path + "'"};
    f << text;
  };
  if (!dot.empty()) write(dot, export_dot(lts, spec.universe));
  if (!json.empty()) write(json, export_json(lts, spec.universe));
  out << "states=" << lts.states.size() << " transitions=" << lts.transitions.size()
      << " deadlocks=" << lts.deadlock_count() << "\n";
  return exit_ok;
}

const AssertionDecl& assertion_named(const Spec& spec, const std::string& name) {
  if (const auto* a = spec.find_assertion(name)) return *a;
  throw UsageError{"unknown assertion '" + name + "'"};
}

int cmd_bisim(const Spec& spec, const std::string& p, const std::string& q, std::string assertion,
              std::ostream& out) {
  if (assertion.empty()) {
    if (spec.assertions.size() != 1) throw UsageError{"--assert is required when the spec has several assertions"};
    assertion = spec.assertions.front().name;
  }
  const auto& f = assertion_named(spec, assertion).assertion;
  const auto& sp = system_named(spec, p).process;
  const auto& sq = system_named(spec, q).process;
  const auto limits = limits_from_env();
  const auto witness = distinguishing_formula(sp, sq, f, assertion, limits);
  if (!witness) {
    out << "BISIMILAR\n";
    return exit_ok;
  }
  out << "NOT BISIMILAR\n";
  out << "formula: " << to_string(*witness) << "\n";
  out << p << " satisfies it, " << q << " does not\n";
  return exit_false;
}

void collect_assertion_names(const BioHML& g, std::set<std::string>& names) {
  using K = BioHML::Kind;
  switch (g.kind()) {
    case K::tt:
    case K::ff:
      return;
    case K::conjunction:
    case K::disjunction:
      collect_assertion_names(g.left(), names);
      collect_assertion_names(g.right(), names);
      return;
    case K::diamond:
    case K::box:
      names.insert(g.assertion());
      collect_assertion_names(g.operand(), names);
      return;
  }
}

int cmd_check(const Spec& spec, const std::string& system, const std::string& formula,
              const std::string& assertion, const std::string& box, std::ostream& out) {
  const auto* decl = spec.find_formula(formula);
  if (!decl) throw UsageError{"unknown formula '" + formula + "'"};
  std::set<std::string> names;
  collect_assertion_names(decl->formula, names);
  if (names.size() > 1) {
    throw UsageError{"formula '" + formula + "' mixes assertions; a formula is read against a single assertion"};
  }
  std::string ambient = assertion;
  if (!names.empty()) {
    if (!ambient.empty() && ambient != *names.begin()) {
      throw UsageError{"formula '" + formula + "' is written over '" + *names.begin() + "', not '" + ambient + "'"};
    }
    ambient = *names.begin();
  }
  // A formula without modalities does not depend on the assertion.
  const Assertion f = ambient.empty() ? Assertion::nonempty(Position::w) : assertion_named(spec, ambient).assertion;
  const auto& p = system_named(spec, system).process;
  const BoxReading reading = box == "strict" ? BoxReading::strict : BoxReading::standard;
  const bool sat = check_formula(p, decl->formula, f, limits_from_env(), reading);
  out << (sat ? "SAT" : "UNSAT") << "\n";
  return sat ? exit_ok : exit_false;
}

Valuation parse_valuation(const std::string& text) {
  Valuation v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError{"malformed valuation entry '" + item + "'"};
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 18) {
      throw UsageError{"value of '" + name + "' must be a positive integer"};
    }
    const auto n = std::stoull(value);
    if (n == 0) throw UsageError{"value of '" + name + "' must be positive"};
    v[name] = n;
  }
  return v;
}

int cmd_quant(const Spec& spec, const std::string& name, const std::optional<std::string>& valuation_text,
              std::size_t steps, std::ostream& out) {
  const auto& u = spec.universe;
  const auto& start = system_named(spec, name).quant;
  std::optional<Valuation> valuation;
  if (valuation_text) valuation = parse_valuation(*valuation_text);

  std::map<QuantProcess, std::size_t> depth{{start, 0}};
  std::deque<QuantProcess> queue{start};
  std::vector<Constraint> all;
  const auto limits = limits_from_env();
  while (!queue.empty()) {
    const QuantProcess p = queue.front();
    queue.pop_front();
    const std::size_t d = depth.at(p);
    if (d >= steps) continue;
    for (auto& step : quant_step(p, d)) {
      for (auto& c : step.constraints) all.push_back(c);
      if (!depth.count(step.target)) {
        if (depth.size() >= limits.max_states) {
          throw LimitExceeded(LimitExceeded::Kind::max_states, limits.max_states, queue.size() + 1);
        }
        depth.emplace(step.target, d + 1);
        queue.push_back(std::move(step.target));
      }
    }
  }
  if (all.empty()) {
    out << "no constraints\n";
    return exit_ok;
  }
  bool violated = false;
  std::set<std::string> open;
  for (const auto& c : all) {
    out << "step " << c.step << ": " << to_string(c, u);
    if (valuation) {
      const auto report = evaluate_constraints({c}, *valuation);
      out << (report.feasible ? " (ok)" : " (VIOLATED)");
      violated = violated || !report.feasible;
    } else {
      switch (classify(c)) {
        case ConstraintStatus::never:
          out << " (VIOLATED)";
          violated = true;
          break;
        case ConstraintStatus::depends:
          for (const auto& x : c.rhs.variables()) open.insert(x);
          break;
        case ConstraintStatus::always:
          break;
      }
    }
    out << "\n";
  }
  if (violated) {
    out << "infeasible\n";
    return exit_false;
  }
  if (open.empty()) {
    out << "feasible\n";
  } else {
    out << "feasible for suitable values of";
    for (const auto& x : open) out << " " << x;
    out << "\n";
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reaction systems as processes: traces, transition systems, bio-similarity and bioHML"};
  app.name("rsos");
  app.require_subcommand(1);

  std::string spec_path, system, other, formula, assertion, mode = "dominant", dot, json, box = "standard";
  std::size_t steps = 20;
  std::optional<std::string> valuation;

  auto* run = app.add_subcommand("run", "Print the trace of a system or link");
  run->add_option("spec", spec_path, "Specification file")->required();
  run->add_option("system", system, "System or link name")->required();
  run->add_option("--steps", steps, "Maximum trace depth");

  auto* lts = app.add_subcommand("lts", "Build the transition system of a system");
  lts->add_option("spec", spec_path, "Specification file")->required();
  lts->add_option("system", system, "System name")->required();
  lts->add_option("--mode", mode, "raw or dominant")->check(CLI::IsMember({"raw", "dominant"}));
  lts->add_option("--dot", dot, "Write Graphviz output to this file");
  lts->add_option("--json", json, "Write JSON output to this file");

  auto* bisim = app.add_subcommand("bisim", "Decide bio-similarity of two systems");
  bisim->add_option("spec", spec_path, "Specification file")->required();
  bisim->add_option("p", system, "First system")->required();
  bisim->add_option("q", other, "Second system")->required();
  bisim->add_option("--assert", assertion, "Assertion name");

  auto* check = app.add_subcommand("check", "Model-check a bioHML formula");
  check->add_option("spec", spec_path, "Specification file")->required();
  check->add_option("system", system, "System name")->required();
  check->add_option("formula", formula, "Formula name")->required();
  check->add_option("--assert", assertion, "Assertion name");
  check->add_option("--box", box, "standard or strict box reading")->check(CLI::IsMember({"standard", "strict"}));

  auto* quant = app.add_subcommand("quant", "List stoichiometric constraints");
  quant->add_option("spec", spec_path, "Specification file")->required();
  quant->add_option("system", system, "System name")->required();
  quant->add_option("--valuation", valuation, "Variable values, e.g. x=5,y=2");
  quant->add_option("--steps", steps, "Maximum exploration depth");

  std::vector<const char*> argv{"rsos"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*run) {
      const Spec spec = load_spec(spec_path);
      if (const auto* s = spec.find_system(system)) return cmd_run_process(spec, s->process, steps, out);
      if (const auto* l = spec.find_link(system)) return cmd_run_link(spec, l->system, steps, out);
      throw UsageError{"unknown system '" + system + "'"};
    }
    if (*lts) return cmd_lts(load_spec(spec_path), system, mode, dot, json, out);
    if (*bisim) return cmd_bisim(load_spec(spec_path), system, other, assertion, out);
    if (*check) return cmd_check(load_spec(spec_path), system, formula, assertion, box, out);
    if (*quant) return cmd_quant(load_spec(spec_path), system, valuation, steps, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return exit_usage;
  } catch (const MissingVariable& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return exit_limit;
  } catch (const StateSpaceGuard& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return exit_limit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace rsos
