#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsos/label.hpp"
#include "rsos/process.hpp"
#include "rsos/sos.hpp"

namespace rsos {

enum class StepMode { raw, dominant };

std::string_view to_string(StepMode mode);

struct Transition {
  std::size_t from = 0;
  Label label;
  std::size_t to = 0;

  bool operator==(const Transition&) const = default;
  std::strong_ordering operator<=>(const Transition&) const = default;
};

struct BuildLimits {
  std::size_t max_states = 100'000;
  std::optional<std::size_t> max_depth;  ///< unbounded when empty
  RawStepOptions raw;
};

/// Reachable transition system. State 0 is the initial process; states are
/// numbered in breadth-first discovery order and transitions are grouped by
/// source in index order.
struct Lts {
  std::vector<Process> states;
  std::vector<Transition> transitions;
  StepMode mode = StepMode::dominant;

  std::size_t initial() const { return 0; }
  /// Transition indices grouped by source state.
  std::vector<std::vector<std::size_t>> outgoing() const;
  std::size_t deadlock_count() const;

  bool operator==(const Lts&) const = default;
};

/// Breadth-first closure of the step function from p. Throws LimitExceeded
/// when max_states or max_depth would be exceeded, StateSpaceGuard from raw
/// enumeration.
Lts build_lts(const Process& p, StepMode mode = StepMode::dominant, const BuildLimits& limits = {});

/// Graphviz text. Nodes carry the pretty-printed process, edges the label.
std::string export_dot(const Lts& lts, const Universe& universe);

std::string export_json(const Lts& lts, const Universe& universe);

/// Inverse of export_json; state strings are re-parsed as processes over the
/// given universe. Throws SpecError on malformed documents.
Lts import_json(std::string_view text, const Universe& universe, StepMode mode = StepMode::dominant);

}  // namespace rsos
