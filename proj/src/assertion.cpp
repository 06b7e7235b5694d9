#include "rsos/assertion.hpp"

namespace rsos {

char to_char(Position pos) {
  switch (pos) {
    case Position::w: return 'W';
    case Position::r: return 'R';
    case Position::i: return 'I';
    case Position::p: return 'P';
  }
  return '?';
}

Assertion Assertion::subset(EntitySet entities, Position pos) {
  Node n;
  n.kind = Kind::subset;
  n.entities = std::move(entities);
  n.pos = pos;
  return Assertion(std::move(n));
}

Assertion Assertion::nonempty(Position pos) {
  Node n;
  n.kind = Kind::nonempty;
  n.pos = pos;
  return Assertion(std::move(n));
}

Assertion Assertion::disjunction(Assertion left, Assertion right) {
  Node n;
  n.kind = Kind::disjunction;
  n.left = std::make_shared<const Assertion>(std::move(left));
  n.right = std::make_shared<const Assertion>(std::move(right));
  return Assertion(std::move(n));
}

Assertion Assertion::conjunction(Assertion left, Assertion right) {
  Node n;
  n.kind = Kind::conjunction;
  n.left = std::make_shared<const Assertion>(std::move(left));
  n.right = std::make_shared<const Assertion>(std::move(right));
  return Assertion(std::move(n));
}

Assertion Assertion::exclusive_or(Assertion left, Assertion right) {
  Node n;
  n.kind = Kind::exclusive_or;
  n.left = std::make_shared<const Assertion>(std::move(left));
  n.right = std::make_shared<const Assertion>(std::move(right));
  return Assertion(std::move(n));
}

Assertion Assertion::negation(Assertion operand) {
  Node n;
  n.kind = Kind::negation;
  n.left = std::make_shared<const Assertion>(std::move(operand));
  return Assertion(std::move(n));
}

bool Assertion::operator==(const Assertion& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::subset:
      return entities() == other.entities() && position() == other.position();
    case Kind::nonempty:
      return position() == other.position();
    case Kind::negation:
      return operand() == other.operand();
    default:
      return left() == other.left() && right() == other.right();
  }
}

const EntitySet& select(const Label& label, Position pos) {
  switch (pos) {
    case Position::w: return label.w;
    case Position::r: return label.r;
    case Position::i: return label.i;
    case Position::p: return label.p;
  }
  return label.w;
}

bool eval_assertion(const Label& label, const Assertion& f) {
  using K = Assertion::Kind;
  switch (f.kind()) {
    case K::subset:
      return f.entities().subset_of(select(label, f.position()));
    case K::nonempty:
      return !select(label, f.position()).empty();
    case K::disjunction:
      return eval_assertion(label, f.left()) || eval_assertion(label, f.right());
    case K::conjunction:
      return eval_assertion(label, f.left()) && eval_assertion(label, f.right());
    case K::exclusive_or: {
      const bool a = eval_assertion(label, f.left());
      const bool b = eval_assertion(label, f.right());
      return (a && !b) || (!a && b);
    }
    case K::negation:
      return !eval_assertion(label, f.operand());
  }
  return false;
}

std::string to_string(const Assertion& f, const Universe& universe) {
  using K = Assertion::Kind;
  auto wrap = [&](const Assertion& g) {
    auto text = to_string(g, universe);
    const bool atomic = g.kind() == K::subset || g.kind() == K::nonempty || g.kind() == K::negation;
    return atomic ? text : "(" + text + ")";
  };
  switch (f.kind()) {
    case K::subset:
      if (f.entities().size() == 1) {
        return universe.name(f.entities().ids().front()) + " in " + to_char(f.position());
      }
      return brace_set(f.entities(), universe) + " subset " + to_char(f.position());
    case K::nonempty:
      return std::string("? in ") + to_char(f.position());
    case K::disjunction:
      return wrap(f.left()) + " or " + wrap(f.right());
    case K::conjunction:
      return wrap(f.left()) + " and " + wrap(f.right());
    case K::exclusive_or:
      return wrap(f.left()) + " xor " + wrap(f.right());
    case K::negation: {
      const auto& g = f.operand();
      if (g.kind() == K::negation) return "!" + to_string(g, universe);
      return "!(" + to_string(g, universe) + ")";
    }
  }
  return {};
}

}  // namespace rsos
