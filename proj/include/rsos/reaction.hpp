#pragma once

#include <compare>
#include <string>

#include "rsos/entity.hpp"

namespace rsos {

/// A reaction (R, I, P). Construction validates the invariants: all three
/// sets non-empty and R disjoint from I.
class Reaction {
 public:
  Reaction(EntitySet reactants, EntitySet inhibitors, EntitySet products);

  const EntitySet& reactants() const { return reactants_; }
  const EntitySet& inhibitors() const { return inhibitors_; }
  const EntitySet& products() const { return products_; }

  std::size_t hash() const;

  bool operator==(const Reaction&) const = default;
  std::strong_ordering operator<=>(const Reaction&) const = default;

 private:
  EntitySet reactants_;
  EntitySet inhibitors_;
  EntitySet products_;
};

/// Inline form `([a,b] -| [c] -> [b])`.
std::string to_string(const Reaction& reaction, const Universe& universe);

}  // namespace rsos

template <>
struct std::hash<rsos::Reaction> {
  std::size_t operator()(const rsos::Reaction& r) const noexcept { return r.hash(); }
};
