#pragma once

#include <memory>
#include <string>

#include "rsos/entity.hpp"
#include "rsos/label.hpp"

namespace rsos {

enum class Position { w, r, i, p };

char to_char(Position pos);

/// Query over a single transition label:
///   F ::= E ⊆ Pos | ? ∈ Pos | F ∨ F | F ∧ F | F ^ F | ¬F
class Assertion {
 public:
  enum class Kind { subset, nonempty, disjunction, conjunction, exclusive_or, negation };

  static Assertion subset(EntitySet entities, Position pos);
  static Assertion nonempty(Position pos);
  static Assertion disjunction(Assertion left, Assertion right);
  static Assertion conjunction(Assertion left, Assertion right);
  static Assertion exclusive_or(Assertion left, Assertion right);
  static Assertion negation(Assertion operand);

  Kind kind() const { return node_->kind; }
  const EntitySet& entities() const { return node_->entities; }
  Position position() const { return node_->pos; }
  const Assertion& left() const { return *node_->left; }
  const Assertion& right() const { return *node_->right; }
  const Assertion& operand() const { return *node_->left; }

  bool operator==(const Assertion& other) const;

 private:
  struct Node {
    Kind kind = Kind::nonempty;
    EntitySet entities;
    Position pos = Position::w;
    std::shared_ptr<const Assertion> left;
    std::shared_ptr<const Assertion> right;
  };
  explicit Assertion(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

const EntitySet& select(const Label& label, Position pos);

/// label ⊨ f
bool eval_assertion(const Label& label, const Assertion& f);

/// v ≡_F w: both labels agree on f.
inline bool label_equiv(const Assertion& f, const Label& v, const Label& w) {
  return eval_assertion(v, f) == eval_assertion(w, f);
}

/// Surface syntax, e.g. `(a in R) xor (c in R)`.
std::string to_string(const Assertion& f, const Universe& universe);

}  // namespace rsos
