#include "rsos/process.hpp"

#include <algorithm>

#include "rsos/error.hpp"

namespace rsos {

std::string to_string(const ContextExpr& k, const Universe& universe) {
  return to_string(k, [&](const EntitySet& c) { return brace_set(c, universe); });
}

Mixture::Mixture(std::vector<Reaction> reactions, EntitySet state, std::vector<ContextExpr> contexts)
    : reactions_(std::move(reactions)), state_(std::move(state)), contexts_(std::move(contexts)) {
  std::sort(reactions_.begin(), reactions_.end());
  reactions_.erase(std::unique(reactions_.begin(), reactions_.end()), reactions_.end());
  std::sort(contexts_.begin(), contexts_.end());
  std::size_t h = state_.hash();
  for (const auto& r : reactions_) h = hash_combine(h, r.hash());
  h = hash_combine(h, 0x7f4a7c15);
  for (const auto& k : contexts_) h = hash_combine(h, k.hash());
  hash_ = h;
}

EntitySet Mixture::reaction_entities() const {
  EntitySet out;
  for (const auto& r : reactions_) {
    out |= r.reactants();
    out |= r.inhibitors();
    out |= r.products();
  }
  return out;
}

std::strong_ordering Mixture::operator<=>(const Mixture& other) const {
  if (auto c = std::lexicographical_compare_three_way(reactions_.begin(), reactions_.end(),
                                                      other.reactions_.begin(), other.reactions_.end());
      c != 0) {
    return c;
  }
  if (auto c = state_ <=> other.state_; c != 0) return c;
  return std::lexicographical_compare_three_way(contexts_.begin(), contexts_.end(), other.contexts_.begin(),
                                                other.contexts_.end());
}

Mixture normalize(std::span<const Component> components) {
  std::vector<Reaction> reactions;
  EntitySet state;
  std::vector<ContextExpr> contexts;
  for (const auto& c : components) {
    if (const auto* r = std::get_if<Reaction>(&c)) {
      reactions.push_back(*r);
    } else if (const auto* d = std::get_if<EntitySet>(&c)) {
      state |= *d;
    } else {
      contexts.push_back(std::get<ContextExpr>(c));
    }
  }
  return Mixture(std::move(reactions), std::move(state), std::move(contexts));
}

Mixture normalize(const Mixture& m) { return Mixture(m.reactions(), m.state(), m.contexts()); }

Mixture parallel(const Mixture& left, const Mixture& right) {
  auto reactions = left.reactions();
  reactions.insert(reactions.end(), right.reactions().begin(), right.reactions().end());
  auto contexts = left.contexts();
  contexts.insert(contexts.end(), right.contexts().begin(), right.contexts().end());
  return Mixture(std::move(reactions), left.state() | right.state(), std::move(contexts));
}

ContextExpr sequence_context(std::span<const EntitySet> gamma) {
  ContextExpr k = ContextExpr::nil();
  for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) k = ContextExpr::prefix(*it, k);
  return k;
}

Process encode(std::span<const Reaction> reactions, std::span<const EntitySet> gamma, const EntitySet& state,
               std::size_t i) {
  if (gamma.empty() || i >= gamma.size()) {
    throw IndexOutOfRange("step index " + std::to_string(i) + " outside context sequence of length " +
                          std::to_string(gamma.size()));
  }
  std::vector<Reaction> soup(reactions.begin(), reactions.end());
  return Process(Mixture(std::move(soup), state, {sequence_context(gamma.subspan(i))}));
}

std::string to_string(const Mixture& m, const Universe& universe) {
  std::vector<std::string> items;
  for (const auto& r : m.reactions()) items.push_back(to_string(r, universe));
  if (!m.state().empty()) items.push_back(brace_set(m.state(), universe));
  for (const auto& k : m.contexts()) items.push_back(to_string(k, universe));
  if (items.empty()) return "{}";
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += " | ";
    out += items[k];
  }
  return out;
}

std::string to_string(const Process& p, const Universe& universe) {
  return "[" + to_string(p.mixture(), universe) + "]";
}

}  // namespace rsos
