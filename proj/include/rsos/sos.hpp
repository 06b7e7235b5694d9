#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "rsos/label.hpp"
#include "rsos/process.hpp"

namespace rsos {

/// One transition P --label--> target.
struct Step {
  Label label;
  Process target;

  bool operator==(const Step&) const = default;
  std::strong_ordering operator<=>(const Step&) const = default;
};

/// Transition of a bare mixture, before the top-level reactant check.
struct MixtureStep {
  Label label;
  Mixture target;

  bool operator==(const MixtureStep&) const = default;
  std::strong_ordering operator<=>(const MixtureStep&) const = default;
};

/// How one reaction took part in a derivation: fired (Pro), or blocked with
/// the justification J (present inhibitors) and Q (missing reactants).
struct ReactionChoice {
  bool fired = false;
  EntitySet present_inhibitors;
  EntitySet missing_reactants;

  bool operator==(const ReactionChoice&) const = default;
};

/// A raw step together with the rule used for each reaction, in the order of
/// Process::reactions().
struct Derivation {
  Label label;
  Process target;
  std::vector<ReactionChoice> choices;
};

struct RawStepOptions {
  /// Cap on enumerated justification combinations per state.
  std::size_t max_combinations = 10'000;
};

/// en_a(W): R ⊆ W and I ∩ W = ∅.
bool enabled(const Reaction& a, const EntitySet& w);

/// One simultaneous move of every context of a mixture.
struct ContextChoice {
  EntitySet offered;                 ///< union of the sets offered by the contexts
  std::vector<ContextExpr> continuations;
};

/// Cartesian product of the context moves; empty if some context is stuck.
/// A mixture without contexts has exactly one (empty) choice.
std::vector<ContextChoice> context_choices(const Mixture& m);

/// All mixture-level transitions, composed with the parallel rule's
/// consistency condition only. Throws StateSpaceGuard past the cap.
std::vector<MixtureStep> mixture_steps(const Mixture& m, const RawStepOptions& options = {});

/// All single-arrow transitions of a system; coincident steps merged.
/// Throws StateSpaceGuard past the cap.
std::vector<Step> raw_step(const Process& p, const RawStepOptions& options = {});

/// raw_step without merging, keeping per-reaction provenance.
std::vector<Derivation> raw_derivations(const Process& p, const RawStepOptions& options = {});

/// Double-arrow transitions: every disabled reaction contributes the maximal
/// justification J = I ∩ W, Q = R \ W.
std::vector<Step> dominant_step(const Process& p);

/// ⊑-maximal elements of a step set, grouped by (W, P, target).
std::vector<Step> dominant_maxima(std::span<const Step> steps);

}  // namespace rsos
