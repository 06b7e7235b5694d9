#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsos/entity.hpp"
#include "rsos/reaction.hpp"
#include "rsos/sos.hpp"

namespace rsos {

/// res_a(W): the products of a if it is enabled in W, otherwise ∅.
EntitySet res(const Reaction& a, const EntitySet& w);

/// res_A(W) = ⋃_{a ∈ A} res_a(W).
EntitySet res_all(std::span<const Reaction> reactions, const EntitySet& w);

/// γ^k = C_k, ..., C_n.
std::vector<EntitySet> sequence_shift(std::span<const EntitySet> gamma, std::size_t k);

struct InteractiveProcess {
  std::vector<EntitySet> gamma;  ///< C_0..C_n
  std::vector<EntitySet> delta;  ///< D_0..D_n, D_0 = ∅
};

struct StateSequence {
  std::vector<EntitySet> tau;  ///< W_i = C_i ∪ D_i
};

struct InteractiveRun {
  InteractiveProcess process;
  StateSequence states;
  /// D_{n+1}, the result of the last state, which δ itself does not record.
  EntitySet final_result;
};

InteractiveRun run_interactive(std::span<const Reaction> reactions, std::span<const EntitySet> gamma);

struct CorrespondenceOptions {
  /// Also require every raw step from each encoded state to agree on W, P
  /// and target (R and I are left free).
  bool check_raw = false;
  RawStepOptions raw;
};

struct CorrespondenceReport {
  bool passed = true;
  std::optional<std::size_t> first_failure;
  std::string message;
  std::size_t steps_checked = 0;
};

/// Runs the encoded system step by step against the set-rewriting semantics.
/// For i = 0..n the dominant step from ⟦A,π⟧_i must be unique with W = W_i,
/// P = D_{i+1} and target ⟦A,π⟧_{i+1}; the last target is
/// [A | D_{n+1} | 0], which must be a deadlock.
CorrespondenceReport correspondence_check(std::span<const Reaction> reactions, std::span<const EntitySet> gamma,
                                          const CorrespondenceOptions& options = {});

}  // namespace rsos
