#include "rsos/sos.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "rsos/error.hpp"

namespace rsos {

bool enabled(const Reaction& a, const EntitySet& w) {
  return a.reactants().subset_of(w) && !a.inhibitors().intersects(w);
}

std::vector<ContextChoice> context_choices(const Mixture& m) {
  std::vector<ContextChoice> choices{ContextChoice{m.state(), {}}};
  for (const auto& k : m.contexts()) {
    const auto moves = context_moves(k);
    std::vector<ContextChoice> next;
    next.reserve(choices.size() * moves.size());
    for (const auto& partial : choices) {
      for (const auto& [offered, continuation] : moves) {
        ContextChoice c{partial.offered | offered, partial.continuations};
        c.continuations.push_back(continuation);
        next.push_back(std::move(c));
      }
    }
    choices = std::move(next);
    if (choices.empty()) break;
  }
  return choices;
}

namespace {

struct Option {
  Label label;
  ReactionChoice choice;
};

// Every conclusion of (Pro) and (Inh) for one reaction, independent of W.
std::vector<Option> reaction_options(const Reaction& a, std::size_t cap) {
  const std::size_t bits = a.reactants().size() + a.inhibitors().size();
  if (bits >= 32 || (std::size_t{1} << bits) > cap) throw StateSpaceGuard(cap);
  std::vector<Option> out;
  out.push_back({Label{{}, a.reactants(), a.inhibitors(), a.products()}, {true, {}, {}}});
  a.inhibitors().for_each_subset([&](const EntitySet& j) {
    a.reactants().for_each_subset([&](const EntitySet& q) {
      if (j.empty() && q.empty()) return;
      out.push_back({Label{{}, j, q, {}}, {false, j, q}});
    });
  });
  return out;
}

Label pool(const Label& a, const Label& b) { return {a.w | b.w, a.r | b.r, a.i | b.i, a.p | b.p}; }

struct Partial {
  Label label;
  std::vector<ReactionChoice> choices;
};

// Composes the context part ⟨W ▷ ∅,∅,∅⟩ with each reaction in turn. Every
// composition applies the (Par) side condition; at top level the (Sys)
// condition R ⊆ W is monotone in R, so violating partials are pruned early.
std::vector<Partial> compose(const Mixture& m, const EntitySet& w, bool top_level, bool merge,
                             std::size_t cap, std::size_t& budget_used) {
  std::vector<Partial> partials{Partial{Label{w, {}, {}, {}}, {}}};
  for (const auto& reaction : m.reactions()) {
    const auto options = reaction_options(reaction, cap);
    std::vector<Partial> next;
    for (const auto& partial : partials) {
      for (const auto& option : options) {
        Label pooled = pool(partial.label, option.label);
        if (!is_consistent(pooled)) continue;
        if (top_level && !pooled.r.subset_of(w)) continue;
        if (++budget_used > cap) throw StateSpaceGuard(cap);
        Partial p{std::move(pooled), {}};
        if (!merge) {
          p.choices = partial.choices;
          p.choices.push_back(option.choice);
        }
        next.push_back(std::move(p));
      }
    }
    if (merge) {
      std::sort(next.begin(), next.end(), [](const Partial& a, const Partial& b) { return a.label < b.label; });
      next.erase(std::unique(next.begin(), next.end(),
                             [](const Partial& a, const Partial& b) { return a.label == b.label; }),
                 next.end());
    }
    partials = std::move(next);
  }
  return partials;
}

}  // namespace

std::vector<MixtureStep> mixture_steps(const Mixture& m, const RawStepOptions& options) {
  std::vector<MixtureStep> out;
  std::size_t used = 0;
  for (const auto& choice : context_choices(m)) {
    for (auto& partial : compose(m, choice.offered, false, true, options.max_combinations, used)) {
      Mixture target(m.reactions(), partial.label.p, choice.continuations);
      out.push_back({std::move(partial.label), std::move(target)});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Step> raw_step(const Process& p, const RawStepOptions& options) {
  std::vector<Step> out;
  std::size_t used = 0;
  for (const auto& choice : context_choices(p.mixture())) {
    for (auto& partial : compose(p.mixture(), choice.offered, true, true, options.max_combinations, used)) {
      Process target(Mixture(p.reactions(), partial.label.p, choice.continuations));
      out.push_back({std::move(partial.label), std::move(target)});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Derivation> raw_derivations(const Process& p, const RawStepOptions& options) {
  std::vector<Derivation> out;
  std::size_t used = 0;
  for (const auto& choice : context_choices(p.mixture())) {
    for (auto& partial : compose(p.mixture(), choice.offered, true, false, options.max_combinations, used)) {
      Process target(Mixture(p.reactions(), partial.label.p, choice.continuations));
      out.push_back({std::move(partial.label), std::move(target), std::move(partial.choices)});
    }
  }
  return out;
}

std::vector<Step> dominant_step(const Process& p) {
  std::vector<Step> out;
  for (const auto& choice : context_choices(p.mixture())) {
    const EntitySet& w = choice.offered;
    Label label{w, {}, {}, {}};
    for (const auto& a : p.reactions()) {
      if (enabled(a, w)) {
        label.r |= a.reactants();
        label.i |= a.inhibitors();
        label.p |= a.products();
      } else {
        label.r |= a.inhibitors() & w;
        label.i |= a.reactants() - w;
      }
    }
    Process target(Mixture(p.reactions(), label.p, choice.continuations));
    out.push_back({std::move(label), std::move(target)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Step> dominant_maxima(std::span<const Step> steps) {
  std::vector<Step> out;
  for (const auto& s : steps) {
    const bool dominated = std::any_of(steps.begin(), steps.end(), [&](const Step& t) {
      return t.label.w == s.label.w && t.label.p == s.label.p && t.target == s.target &&
             dominated_by(s.label, t.label) && !dominated_by(t.label, s.label);
    });
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rsos
