#include "rsos/classic.hpp"

#include "rsos/process.hpp"

namespace rsos {

EntitySet res(const Reaction& a, const EntitySet& w) { return enabled(a, w) ? a.products() : EntitySet{}; }

EntitySet res_all(std::span<const Reaction> reactions, const EntitySet& w) {
  EntitySet out;
  for (const auto& a : reactions) out |= res(a, w);
  return out;
}

std::vector<EntitySet> sequence_shift(std::span<const EntitySet> gamma, std::size_t k) {
  if (k >= gamma.size()) return {};
  return {gamma.begin() + static_cast<std::ptrdiff_t>(k), gamma.end()};
}

InteractiveRun run_interactive(std::span<const Reaction> reactions, std::span<const EntitySet> gamma) {
  InteractiveRun run;
  run.process.gamma.assign(gamma.begin(), gamma.end());
  EntitySet d;
  for (const auto& c : gamma) {
    run.process.delta.push_back(d);
    const EntitySet w = c | d;
    run.states.tau.push_back(w);
    d = res_all(reactions, w);
  }
  run.final_result = d;
  return run;
}

namespace {

std::string describe(const char* what, std::size_t i) { return std::string(what) + " at step " + std::to_string(i); }

}  // namespace

CorrespondenceReport correspondence_check(std::span<const Reaction> reactions, std::span<const EntitySet> gamma,
                                          const CorrespondenceOptions& options) {
  CorrespondenceReport report;
  auto fail = [&](std::size_t i, std::string message) {
    report.passed = false;
    report.first_failure = i;
    report.message = std::move(message);
    return report;
  };
  if (gamma.empty()) return fail(0, "empty context sequence");

  const auto run = run_interactive(reactions, gamma);
  const std::size_t n = gamma.size() - 1;
  const std::vector<Reaction> soup(reactions.begin(), reactions.end());
  Process current = encode(soup, gamma, EntitySet{}, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    const EntitySet& next_d = i < n ? run.process.delta[i + 1] : run.final_result;
    const Process expected = i < n ? encode(soup, gamma, next_d, i + 1)
                                   : Process(Mixture(soup, next_d, {ContextExpr::nil()}));
    const auto steps = dominant_step(current);
    if (steps.size() != 1) return fail(i, describe("dominant step not unique", i));
    const auto& step = steps.front();
    if (step.label.w != run.states.tau[i]) return fail(i, describe("W differs from the classic state", i));
    if (step.label.p != next_d) return fail(i, describe("P differs from the classic result", i));
    if (step.target != expected) return fail(i, describe("target differs from the encoding", i));
    if (options.check_raw) {
      for (const auto& raw : raw_step(current, options.raw)) {
        if (raw.label.w != step.label.w || raw.label.p != step.label.p || raw.target != expected) {
          return fail(i, describe("raw step disagrees with the classic semantics", i));
        }
      }
    }
    ++report.steps_checked;
    current = step.target;
  }
  if (!dominant_step(current).empty()) return fail(n + 1, "final state is not a deadlock");
  return report;
}

}  // namespace rsos
