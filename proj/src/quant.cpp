#include "rsos/quant.hpp"

#include <algorithm>

#include "rsos/error.hpp"
#include "rsos/sos.hpp"

namespace rsos {

EntityMultiset::EntityMultiset(std::initializer_list<std::pair<const EntityId, std::uint64_t>> counts) {
  for (const auto& [a, n] : counts) add(a, n);
}

std::uint64_t EntityMultiset::count(EntityId a) const {
  auto it = counts_.find(a);
  return it == counts_.end() ? 0 : it->second;
}

void EntityMultiset::add(EntityId a, std::uint64_t n) {
  if (n) counts_[a] += n;
}

EntitySet EntityMultiset::support() const {
  EntitySet out;
  for (const auto& [a, n] : counts_) out.insert(a);
  return out;
}

EntityMultiset mset_union(const EntityMultiset& a, const EntityMultiset& b) {
  EntityMultiset out = a;
  for (const auto& [e, n] : b.counts()) out.add(e, n);
  return out;
}

LinExpr LinExpr::variable(std::string x, std::uint64_t k) {
  LinExpr e;
  if (k) e.coefficients.emplace(std::move(x), k);
  return e;
}

std::set<std::string> LinExpr::variables() const {
  std::set<std::string> out;
  for (const auto& [x, k] : coefficients) out.insert(x);
  return out;
}

std::uint64_t LinExpr::evaluate(const Valuation& valuation) const {
  std::uint64_t total = constant;
  for (const auto& [x, k] : coefficients) {
    auto it = valuation.find(x);
    if (it == valuation.end()) throw MissingVariable(x);
    total += k * it->second;
  }
  return total;
}

LinExpr& LinExpr::operator+=(const LinExpr& other) {
  for (const auto& [x, k] : other.coefficients) coefficients[x] += k;
  constant += other.constant;
  return *this;
}

std::string to_string(const LinExpr& e) {
  std::string out;
  for (const auto& [x, k] : e.coefficients) {
    if (!out.empty()) out += "+";
    if (k != 1) out += std::to_string(k) + "*";
    out += x;
  }
  if (e.constant || out.empty()) {
    if (!out.empty()) out += "+";
    out += std::to_string(e.constant);
  }
  return out;
}

void QuantContext::add(EntityId a, const LinExpr& e) {
  if (e.is_zero()) return;
  amounts[a] += e;
}

EntitySet QuantContext::support() const {
  EntitySet out;
  for (const auto& [a, e] : amounts) out.insert(a);
  return out;
}

LinExpr QuantContext::amount(EntityId a) const {
  auto it = amounts.find(a);
  return it == amounts.end() ? LinExpr{} : it->second;
}

std::size_t QuantContext::hash() const {
  std::size_t h = 0x51ed27;
  for (const auto& [a, e] : amounts) {
    h = hash_combine(h, a);
    h = hash_combine(h, e.constant);
    for (const auto& [x, k] : e.coefficients) h = hash_combine(hash_combine(h, std::hash<std::string>{}(x)), k);
  }
  return h;
}

QuantContext context_union(const QuantContext& a, const QuantContext& b) {
  QuantContext out = a;
  for (const auto& [e, amount] : b.amounts) out.add(e, amount);
  return out;
}

QuantContext from_multiset(const EntityMultiset& m) {
  QuantContext out;
  for (const auto& [a, n] : m.counts()) out.add(a, LinExpr::number(n));
  return out;
}

QuantReaction::QuantReaction(EntityMultiset reactants, EntitySet inhibitors, EntityMultiset products)
    : reactants_(std::move(reactants)),
      inhibitors_(std::move(inhibitors)),
      products_(std::move(products)),
      erased_(reactants_.support(), inhibitors_, products_.support()) {}

QuantProcess::QuantProcess(std::vector<QuantReaction> reactions, QuantContext state,
                           std::vector<QuantContextExpr> contexts)
    : reactions_(std::move(reactions)), state_(std::move(state)), contexts_(std::move(contexts)) {
  std::sort(reactions_.begin(), reactions_.end());
  reactions_.erase(std::unique(reactions_.begin(), reactions_.end()), reactions_.end());
  std::sort(contexts_.begin(), contexts_.end());
}

std::strong_ordering QuantProcess::operator<=>(const QuantProcess& other) const {
  if (auto c = std::lexicographical_compare_three_way(reactions_.begin(), reactions_.end(),
                                                      other.reactions_.begin(), other.reactions_.end());
      c != 0) {
    return c;
  }
  if (auto c = state_ <=> other.state_; c != 0) return c;
  return std::lexicographical_compare_three_way(contexts_.begin(), contexts_.end(), other.contexts_.begin(),
                                                other.contexts_.end());
}

ContextExpr erase(const QuantContextExpr& k) {
  return transform_offered(k, [](const QuantContext& c) { return c.support(); });
}

Process QuantProcess::erase() const {
  std::vector<Reaction> reactions;
  for (const auto& a : reactions_) reactions.push_back(a.erase());
  std::vector<ContextExpr> contexts;
  for (const auto& k : contexts_) contexts.push_back(rsos::erase(k));
  return Process(Mixture(std::move(reactions), state_.support(), std::move(contexts)));
}

std::string to_string(const Constraint& c, const Universe& universe) {
  return universe.name(c.entity) + ": " + std::to_string(c.lhs) + " <= " + to_string(c.rhs);
}

std::vector<QuantStep> quant_step(const QuantProcess& p, std::size_t step_index, ConstraintSelection selection) {
  // Context choices as in the qualitative engine, but over quantity maps.
  struct Choice {
    QuantContext w;
    std::vector<QuantContextExpr> continuations;
  };
  std::vector<Choice> choices{Choice{p.state(), {}}};
  for (const auto& k : p.contexts()) {
    const auto moves = context_moves(k);
    std::vector<Choice> next;
    for (const auto& partial : choices) {
      for (const auto& [offered, continuation] : moves) {
        Choice c{context_union(partial.w, offered), partial.continuations};
        c.continuations.push_back(continuation);
        next.push_back(std::move(c));
      }
    }
    choices = std::move(next);
  }

  std::vector<QuantStep> out;
  for (auto& choice : choices) {
    const EntitySet w = choice.w.support();
    QuantLabel label{choice.w, {}, {}, {}};
    EntitySet present_inhibitors;
    for (const auto& a : p.reactions()) {
      if (enabled(a.erase(), w)) {
        label.r = mset_union(label.r, a.reactants());
        label.i |= a.inhibitors();
        label.p = mset_union(label.p, a.products());
      } else {
        present_inhibitors |= a.inhibitors() & w;
        label.i |= a.reactants().support() - w;
      }
    }
    for (auto id : present_inhibitors.ids()) {
      if (!label.r.count(id)) label.r.add(id, 1);
    }
    std::vector<Constraint> constraints;
    const std::uint64_t threshold = selection == ConstraintSelection::nontrivial ? 2 : 1;
    for (const auto& [a, n] : label.r.counts()) {
      if (n >= threshold) constraints.push_back({a, n, label.w.amount(a), step_index});
    }
    QuantProcess target(p.reactions(), from_multiset(label.p), std::move(choice.continuations));
    out.push_back({std::move(label), std::move(target), std::move(constraints)});
  }
  std::sort(out.begin(), out.end(), [](const QuantStep& a, const QuantStep& b) { return a.target < b.target; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const QuantStep& a, const QuantStep& b) {
                          return a.target == b.target && a.label == b.label;
                        }),
            out.end());
  return out;
}

ConstraintStatus classify(const Constraint& c) {
  if (c.rhs.is_constant()) return c.lhs <= c.rhs.constant ? ConstraintStatus::always : ConstraintStatus::never;
  std::uint64_t least = c.rhs.constant;
  for (const auto& [x, k] : c.rhs.coefficients) least += k;
  return c.lhs <= least ? ConstraintStatus::always : ConstraintStatus::depends;
}

ConstraintReport evaluate_constraints(const std::vector<Constraint>& constraints, const Valuation& valuation) {
  for (const auto& [x, v] : valuation) {
    if (v == 0) throw Error("variable '" + x + "' must be positive");
  }
  ConstraintReport report;
  for (const auto& c : constraints) {
    if (c.lhs > c.rhs.evaluate(valuation)) {
      report.feasible = false;
      report.violated.push_back(c);
    }
  }
  return report;
}

namespace {

std::vector<std::pair<std::string, std::string>> sorted_terms(const QuantContext& c, const Universe& universe) {
  std::vector<std::pair<std::string, std::string>> terms;
  for (const auto& [a, e] : c.amounts) {
    std::string coefficient;
    if (!(e.is_constant() && e.constant == 1)) {
      coefficient = to_string(e);
      const bool single_variable = e.constant == 0 && e.coefficients.size() == 1 && e.coefficients.begin()->second == 1;
      const bool compound = !e.is_constant() && !single_variable;
      if (compound) coefficient = "(" + coefficient + ")";
      coefficient += "*";
    }
    terms.emplace_back(universe.name(a), coefficient + universe.name(a));
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

std::string join(const std::vector<std::pair<std::string, std::string>>& terms) {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) out += ",";
    out += terms[k].second;
  }
  return out;
}

}  // namespace

std::string to_string(const QuantContext& c, const Universe& universe) {
  return "{" + join(sorted_terms(c, universe)) + "}";
}

std::string to_string(const EntityMultiset& m, const Universe& universe) {
  return "[" + join(sorted_terms(from_multiset(m), universe)) + "]";
}

std::string to_string(const QuantContextExpr& k, const Universe& universe) {
  return to_string(k, [&](const QuantContext& c) { return to_string(c, universe); });
}

std::string to_string(const QuantReaction& a, const Universe& universe) {
  return "(" + to_string(a.reactants(), universe) + " -| " + bracket_set(a.inhibitors(), universe) + " -> " +
         to_string(a.products(), universe) + ")";
}

std::string to_string(const QuantProcess& p, const Universe& universe) {
  std::vector<std::string> items;
  for (const auto& a : p.reactions()) items.push_back(to_string(a, universe));
  if (!p.state().empty()) items.push_back(to_string(p.state(), universe));
  for (const auto& k : p.contexts()) items.push_back(to_string(k, universe));
  if (items.empty()) return "[{}]";
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += " | ";
    out += items[k];
  }
  return out + "]";
}

}  // namespace rsos
