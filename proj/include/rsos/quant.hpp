#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rsos/context.hpp"
#include "rsos/label.hpp"
#include "rsos/process.hpp"
#include "rsos/reaction.hpp"

namespace rsos {

/// Formal sum ⊕ n_a·a. Zero counts are never stored.
class EntityMultiset {
 public:
  EntityMultiset() = default;
  EntityMultiset(std::initializer_list<std::pair<const EntityId, std::uint64_t>> counts);

  std::uint64_t count(EntityId a) const;
  void add(EntityId a, std::uint64_t n);
  EntitySet support() const;
  bool empty() const { return counts_.empty(); }
  const std::map<EntityId, std::uint64_t>& counts() const { return counts_; }

  bool operator==(const EntityMultiset&) const = default;
  std::strong_ordering operator<=>(const EntityMultiset&) const = default;

 private:
  std::map<EntityId, std::uint64_t> counts_;
};

/// Pointwise sum of counts.
EntityMultiset mset_union(const EntityMultiset& a, const EntityMultiset& b);

/// Values for context variables; every variable ranges over positive naturals.
using Valuation = std::map<std::string, std::uint64_t>;

/// Σ k_i·x_i + h with natural coefficients. Zero coefficients are not stored.
struct LinExpr {
  std::map<std::string, std::uint64_t> coefficients;
  std::uint64_t constant = 0;

  static LinExpr number(std::uint64_t h) { return {{}, h}; }
  static LinExpr variable(std::string x, std::uint64_t k = 1);

  /// Since variables are positive, a non-zero expression denotes presence.
  bool is_zero() const { return coefficients.empty() && constant == 0; }
  bool is_constant() const { return coefficients.empty(); }
  std::set<std::string> variables() const;
  /// Throws MissingVariable.
  std::uint64_t evaluate(const Valuation& valuation) const;

  LinExpr& operator+=(const LinExpr& other);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  bool operator==(const LinExpr&) const = default;
  std::strong_ordering operator<=>(const LinExpr&) const = default;
};

/// "2*x+y+1", "x", "3".
std::string to_string(const LinExpr& e);

/// ⊕ e_a·a: what a quantitative prefix offers, and also the quantitative
/// state (all expressions constant there). Zero expressions are not stored.
struct QuantContext {
  std::map<EntityId, LinExpr> amounts;

  void add(EntityId a, const LinExpr& e);
  EntitySet support() const;
  LinExpr amount(EntityId a) const;
  bool empty() const { return amounts.empty(); }
  std::size_t hash() const;

  bool operator==(const QuantContext&) const = default;
  std::strong_ordering operator<=>(const QuantContext&) const = default;
};

QuantContext context_union(const QuantContext& a, const QuantContext& b);
QuantContext from_multiset(const EntityMultiset& m);

}  // namespace rsos

template <>
struct std::hash<rsos::QuantContext> {
  std::size_t operator()(const rsos::QuantContext& c) const noexcept { return c.hash(); }
};

namespace rsos {

using QuantContextExpr = BasicContext<QuantContext>;

/// Reaction with stoichiometric reactants and products; inhibitors stay a set.
class QuantReaction {
 public:
  QuantReaction(EntityMultiset reactants, EntitySet inhibitors, EntityMultiset products);

  const EntityMultiset& reactants() const { return reactants_; }
  const EntitySet& inhibitors() const { return inhibitors_; }
  const EntityMultiset& products() const { return products_; }
  /// The set-valued reaction obtained by dropping counts.
  const Reaction& erase() const { return erased_; }

  bool operator==(const QuantReaction& other) const {
    return reactants_ == other.reactants_ && inhibitors_ == other.inhibitors_ && products_ == other.products_;
  }
  std::strong_ordering operator<=>(const QuantReaction& other) const {
    if (auto c = reactants_ <=> other.reactants_; c != 0) return c;
    if (auto c = inhibitors_ <=> other.inhibitors_; c != 0) return c;
    return products_ <=> other.products_;
  }

 private:
  EntityMultiset reactants_;
  EntitySet inhibitors_;
  EntityMultiset products_;
  Reaction erased_;
};

/// Quantitative system [M]: reactions sorted and deduplicated, contexts
/// sorted, the state a quantity map.
class QuantProcess {
 public:
  QuantProcess() = default;
  QuantProcess(std::vector<QuantReaction> reactions, QuantContext state, std::vector<QuantContextExpr> contexts);

  const std::vector<QuantReaction>& reactions() const { return reactions_; }
  const QuantContext& state() const { return state_; }
  const std::vector<QuantContextExpr>& contexts() const { return contexts_; }

  /// The qualitative system: supports of every multiset and expression.
  Process erase() const;

  bool operator==(const QuantProcess&) const = default;
  std::strong_ordering operator<=>(const QuantProcess& other) const;

 private:
  std::vector<QuantReaction> reactions_;
  QuantContext state_;
  std::vector<QuantContextExpr> contexts_;
};

ContextExpr erase(const QuantContextExpr& k);

/// ⟨W ▷ R, I, P⟩ with W an expression map and R, P multisets.
struct QuantLabel {
  QuantContext w;
  EntityMultiset r;
  EntitySet i;
  EntityMultiset p;

  Label erase() const { return {w.support(), r.support(), i, p.support()}; }
  bool operator==(const QuantLabel&) const = default;
};

/// R(a) ≤ W(a) extracted from one transition.
struct Constraint {
  EntityId entity = 0;
  std::uint64_t lhs = 0;
  LinExpr rhs;
  std::size_t step = 0;

  bool operator==(const Constraint&) const = default;
  std::strong_ordering operator<=>(const Constraint&) const = default;
};

/// "hsf: 3 <= x".
std::string to_string(const Constraint& c, const Universe& universe);

enum class ConstraintSelection {
  /// Skip R(a) = 1: the qualitative check R ⊆ W already forces W(a) ≥ 1.
  nontrivial,
  /// One constraint for every entity with R(a) > 0.
  all,
};

struct QuantStep {
  QuantLabel label;
  QuantProcess target;
  std::vector<Constraint> constraints;
};

/// Dominant steps with the side conditions read on supports. Present
/// inhibitors enter R with count 1 unless already counted.
std::vector<QuantStep> quant_step(const QuantProcess& p, std::size_t step_index = 0,
                                  ConstraintSelection selection = ConstraintSelection::nontrivial);

enum class ConstraintStatus { always, never, depends };

/// Whether c holds for every, no, or only some positive valuation.
ConstraintStatus classify(const Constraint& c);

struct ConstraintReport {
  bool feasible = true;
  std::vector<Constraint> violated;
};

/// Throws MissingVariable for unbound variables and Error for zero values.
ConstraintReport evaluate_constraints(const std::vector<Constraint>& constraints, const Valuation& valuation);

std::string to_string(const QuantContext& c, const Universe& universe);
std::string to_string(const EntityMultiset& m, const Universe& universe);
std::string to_string(const QuantContextExpr& k, const Universe& universe);
std::string to_string(const QuantReaction& a, const Universe& universe);
std::string to_string(const QuantProcess& p, const Universe& universe);

}  // namespace rsos
