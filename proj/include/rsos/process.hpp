#pragma once

#include <compare>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rsos/context.hpp"
#include "rsos/entity.hpp"
#include "rsos/reaction.hpp"

namespace rsos {

/// One parallel component of a mixture: a reaction, an entity set D, or a
/// context process.
using Component = std::variant<Reaction, EntitySet, ContextExpr>;

/// Canonical mixture M: a duplicate-free sorted reaction set, the union of all
/// entity-set components, and the sorted multiset of contexts. Two mixtures
/// that are structurally congruent compare equal.
class Mixture {
 public:
  Mixture() : Mixture({}, {}, {}) {}
  Mixture(std::vector<Reaction> reactions, EntitySet state, std::vector<ContextExpr> contexts);

  const std::vector<Reaction>& reactions() const { return reactions_; }
  const EntitySet& state() const { return state_; }
  const std::vector<ContextExpr>& contexts() const { return contexts_; }

  /// Every entity mentioned by a reaction.
  EntitySet reaction_entities() const;

  std::size_t hash() const { return hash_; }
  bool operator==(const Mixture& other) const {
    return hash_ == other.hash_ && reactions_ == other.reactions_ && state_ == other.state_ &&
           contexts_ == other.contexts_;
  }
  std::strong_ordering operator<=>(const Mixture& other) const;

 private:
  std::vector<Reaction> reactions_;
  EntitySet state_;
  std::vector<ContextExpr> contexts_;
  std::size_t hash_ = 0;
};

/// Canonical form of the parallel composition of the given components:
/// entity sets unioned (the empty set is the unit), reactions deduplicated,
/// component order irrelevant.
Mixture normalize(std::span<const Component> components);
Mixture normalize(const Mixture& m);

/// M1 | M2.
Mixture parallel(const Mixture& left, const Mixture& right);

/// A system [M].
class Process {
 public:
  Process() = default;
  explicit Process(Mixture mixture) : mixture_(std::move(mixture)) {}

  const Mixture& mixture() const { return mixture_; }
  const std::vector<Reaction>& reactions() const { return mixture_.reactions(); }
  const EntitySet& state() const { return mixture_.state(); }
  const std::vector<ContextExpr>& contexts() const { return mixture_.contexts(); }

  std::size_t hash() const { return mixture_.hash(); }
  bool operator==(const Process&) const = default;
  std::strong_ordering operator<=>(const Process& other) const { return mixture_ <=> other.mixture_; }

 private:
  Mixture mixture_;
};

/// The process [ prod_{a in A} a | D_i | C_i.C_{i+1}...C_n.0 ] for step i of
/// an interactive process with context sequence gamma = C_0..C_n.
/// Throws IndexOutOfRange if i > n.
Process encode(std::span<const Reaction> reactions, std::span<const EntitySet> gamma,
               const EntitySet& state, std::size_t i);

/// C_0.C_1...C_n.0
ContextExpr sequence_context(std::span<const EntitySet> gamma);

std::string to_string(const Mixture& m, const Universe& universe);
std::string to_string(const Process& p, const Universe& universe);

}  // namespace rsos

template <>
struct std::hash<rsos::Process> {
  std::size_t operator()(const rsos::Process& p) const noexcept { return p.hash(); }
};
