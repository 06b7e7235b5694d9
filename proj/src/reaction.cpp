#include "rsos/reaction.hpp"

#include "rsos/error.hpp"

namespace rsos {

Reaction::Reaction(EntitySet reactants, EntitySet inhibitors, EntitySet products)
    : reactants_(std::move(reactants)), inhibitors_(std::move(inhibitors)), products_(std::move(products)) {
  if (reactants_.empty()) throw ReactionInvariantViolation("reaction has no reactants");
  if (inhibitors_.empty()) throw ReactionInvariantViolation("reaction has no inhibitors");
  if (products_.empty()) throw ReactionInvariantViolation("reaction has no products");
  if (reactants_.intersects(inhibitors_)) {
    throw ReactionInvariantViolation("reactants and inhibitors overlap");
  }
}

std::size_t Reaction::hash() const {
  return hash_combine(hash_combine(reactants_.hash(), inhibitors_.hash()), products_.hash());
}

std::string to_string(const Reaction& reaction, const Universe& universe) {
  return "(" + bracket_set(reaction.reactants(), universe) + " -| " +
         bracket_set(reaction.inhibitors(), universe) + " -> " +
         bracket_set(reaction.products(), universe) + ")";
}

}  // namespace rsos
