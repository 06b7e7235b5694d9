#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rsos/label.hpp"
#include "rsos/process.hpp"

namespace rsos {

/// P1 ⟨L⟩ P2. Chains nest to the left: (P1 ⟨L1⟩ P2) ⟨L2⟩ P3.
struct ConnectedSystem {
  std::variant<Process, std::shared_ptr<const ConnectedSystem>> left;
  EntitySet link;
  Process right;

  bool operator==(const ConnectedSystem& other) const;
};

struct ConnectorStep {
  Label label;
  ConnectedSystem target;
};

/// Pairs every dominant step of the left side with every dominant step of the
/// right side; the right target additionally receives L ∩ P1. Empty when
/// either side is stuck.
std::vector<ConnectorStep> connector_step(const ConnectedSystem& s);

/// "[..] <{c}> [..]".
std::string to_string(const ConnectedSystem& s, const Universe& universe);

}  // namespace rsos
