#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rsos/entity.hpp"
#include "rsos/error.hpp"

namespace rsos {

/// Context process term K ::= 0 | X | C.K | K + K | rec X. K, parameterized
/// over what a prefix offers (an EntitySet for plain contexts, a quantity map
/// for the stoichiometric extension).
///
/// Terms are immutable and shared. Choice is kept normalized: nested choices
/// are flattened, 0 summands dropped, summands sorted and deduplicated, so
/// K + K, K + 0 and reordered sums compare equal.
template <class Payload>
class BasicContext {
 public:
  enum class Kind : std::uint8_t { nil, var, prefix, choice, rec };

  BasicContext() : node_(nil_node()) {}

  static BasicContext nil() { return BasicContext(); }

  static BasicContext var(std::string name) {
    Node n;
    n.kind = Kind::var;
    n.name = std::move(name);
    return BasicContext(std::move(n));
  }

  static BasicContext prefix(Payload offered, BasicContext tail) {
    Node n;
    n.kind = Kind::prefix;
    n.payload = std::move(offered);
    n.children.push_back(std::move(tail));
    return BasicContext(std::move(n));
  }

  static BasicContext choice(BasicContext left, BasicContext right) {
    return choice(std::vector<BasicContext>{std::move(left), std::move(right)});
  }

  static BasicContext choice(std::vector<BasicContext> summands) {
    std::vector<BasicContext> flat;
    for (auto& s : summands) {
      if (s.kind() == Kind::choice) {
        for (const auto& inner : s.summands()) flat.push_back(inner);
      } else if (s.kind() != Kind::nil) {
        flat.push_back(std::move(s));
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return nil();
    if (flat.size() == 1) return flat.front();
    Node n;
    n.kind = Kind::choice;
    n.children = std::move(flat);
    return BasicContext(std::move(n));
  }

  static BasicContext rec(std::string variable, BasicContext body) {
    Node n;
    n.kind = Kind::rec;
    n.name = std::move(variable);
    n.children.push_back(std::move(body));
    return BasicContext(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  bool is_nil() const { return kind() == Kind::nil; }
  /// Variable name (var) or binder (rec).
  const std::string& name() const { return node_->name; }
  const Payload& offered() const { return node_->payload; }
  const BasicContext& tail() const { return node_->children.front(); }
  const BasicContext& body() const { return node_->children.front(); }
  const std::vector<BasicContext>& summands() const { return node_->children; }
  std::size_t hash() const { return node_->hash; }

  bool operator==(const BasicContext& other) const {
    if (node_ == other.node_) return true;
    if (hash() != other.hash()) return false;
    return (*this <=> other) == 0;
  }

  std::strong_ordering operator<=>(const BasicContext& other) const {
    if (node_ == other.node_) return std::strong_ordering::equal;
    if (auto c = kind() <=> other.kind(); c != 0) return c;
    switch (kind()) {
      case Kind::nil:
        return std::strong_ordering::equal;
      case Kind::var:
        return name() <=> other.name();
      case Kind::prefix:
        if (auto c = offered() <=> other.offered(); c != 0) return c;
        return tail() <=> other.tail();
      case Kind::rec:
        if (auto c = name() <=> other.name(); c != 0) return c;
        return body() <=> other.body();
      case Kind::choice:
        return std::lexicographical_compare_three_way(summands().begin(), summands().end(),
                                                      other.summands().begin(), other.summands().end());
    }
    return std::strong_ordering::equal;
  }

 private:
  struct Node {
    Kind kind = Kind::nil;
    std::string name;
    Payload payload{};
    std::vector<BasicContext> children;
    std::size_t hash = 0;
  };

  explicit BasicContext(Node n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b1U;
    h = hash_combine(h, std::hash<std::string>{}(n.name));
    if (n.kind == Kind::prefix) h = hash_combine(h, std::hash<Payload>{}(n.payload));
    for (const auto& c : n.children) h = hash_combine(h, c.hash());
    n.hash = h;
    node_ = std::make_shared<const Node>(std::move(n));
  }

  static const std::shared_ptr<const Node>& nil_node() {
    static const std::shared_ptr<const Node> nil = [] {
      auto n = std::make_shared<Node>();
      n->hash = 0x2545f491;
      return std::shared_ptr<const Node>(std::move(n));
    }();
    return nil;
  }

  std::shared_ptr<const Node> node_;
};

template <class Payload>
void collect_free_variables(const BasicContext<Payload>& k, std::set<std::string>& bound,
                            std::set<std::string>& out) {
  using K = BasicContext<Payload>;
  switch (k.kind()) {
    case K::Kind::nil:
      return;
    case K::Kind::var:
      if (!bound.contains(k.name())) out.insert(k.name());
      return;
    case K::Kind::prefix:
      collect_free_variables(k.tail(), bound, out);
      return;
    case K::Kind::choice:
      for (const auto& s : k.summands()) collect_free_variables(s, bound, out);
      return;
    case K::Kind::rec: {
      const bool fresh = bound.insert(k.name()).second;
      collect_free_variables(k.body(), bound, out);
      if (fresh) bound.erase(k.name());
      return;
    }
  }
}

template <class Payload>
std::set<std::string> free_variables(const BasicContext<Payload>& k) {
  std::set<std::string> bound, out;
  collect_free_variables(k, bound, out);
  return out;
}

template <class Payload>
bool is_closed(const BasicContext<Payload>& k) {
  return free_variables(k).empty();
}

/// k[r / x]: replaces the free occurrences of x in k by r. A binder for x
/// shadows; binders that would capture a free variable of r are renamed.
template <class Payload>
BasicContext<Payload> substitute(const BasicContext<Payload>& k, const std::string& x,
                                 const BasicContext<Payload>& r) {
  using K = BasicContext<Payload>;
  switch (k.kind()) {
    case K::Kind::nil:
      return k;
    case K::Kind::var:
      return k.name() == x ? r : k;
    case K::Kind::prefix:
      return K::prefix(k.offered(), substitute(k.tail(), x, r));
    case K::Kind::choice: {
      std::vector<K> parts;
      parts.reserve(k.summands().size());
      for (const auto& s : k.summands()) parts.push_back(substitute(s, x, r));
      return K::choice(std::move(parts));
    }
    case K::Kind::rec: {
      if (k.name() == x) return k;
      const auto body_free = free_variables(k.body());
      if (!body_free.contains(x)) return k;
      const auto r_free = free_variables(r);
      if (!r_free.contains(k.name())) return K::rec(k.name(), substitute(k.body(), x, r));
      std::string fresh = k.name();
      do {
        fresh += '\'';
      } while (fresh == x || r_free.contains(fresh) || body_free.contains(fresh));
      auto renamed = substitute(k.body(), k.name(), K::var(fresh));
      return K::rec(fresh, substitute(renamed, x, r));
    }
  }
  return k;
}

namespace detail {
template <class Payload>
void check_guarded(const BasicContext<Payload>& k, std::set<std::string>& unguarded) {
  using K = BasicContext<Payload>;
  switch (k.kind()) {
    case K::Kind::nil:
      return;
    case K::Kind::var:
      if (unguarded.contains(k.name())) throw UnguardedRecursion(k.name());
      return;
    case K::Kind::prefix: {
      std::set<std::string> none;
      check_guarded(k.tail(), none);
      return;
    }
    case K::Kind::choice:
      for (const auto& s : k.summands()) check_guarded(s, unguarded);
      return;
    case K::Kind::rec: {
      auto inner = unguarded;
      inner.insert(k.name());
      check_guarded(k.body(), inner);
      return;
    }
  }
}
}  // namespace detail

/// Throws UnguardedRecursion naming the first binder whose variable occurs
/// outside every prefix of its body.
template <class Payload>
void check_guarded(const BasicContext<Payload>& k) {
  std::set<std::string> unguarded;
  detail::check_guarded(k, unguarded);
}

/// True iff no reachable subterm is a choice. Recursion is followed
/// syntactically, so rec X. C.X counts as deterministic.
template <class Payload>
bool is_deterministic(const BasicContext<Payload>& k) {
  using K = BasicContext<Payload>;
  switch (k.kind()) {
    case K::Kind::nil:
    case K::Kind::var:
      return true;
    case K::Kind::prefix:
      return is_deterministic(k.tail());
    case K::Kind::rec:
      return is_deterministic(k.body());
    case K::Kind::choice:
      return false;
  }
  return true;
}

/// Rebuilds k with every prefix payload mapped through fn.
template <class Payload, class Fn>
auto transform_offered(const BasicContext<Payload>& k, Fn&& fn)
    -> BasicContext<std::decay_t<decltype(fn(k.offered()))>> {
  using K = BasicContext<Payload>;
  using Out = BasicContext<std::decay_t<decltype(fn(k.offered()))>>;
  switch (k.kind()) {
    case K::Kind::nil:
      return Out::nil();
    case K::Kind::var:
      return Out::var(k.name());
    case K::Kind::prefix:
      return Out::prefix(fn(k.offered()), transform_offered(k.tail(), fn));
    case K::Kind::choice: {
      std::vector<Out> parts;
      for (const auto& s : k.summands()) parts.push_back(transform_offered(s, fn));
      return Out::choice(std::move(parts));
    }
    case K::Kind::rec:
      return Out::rec(k.name(), transform_offered(k.body(), fn));
  }
  return Out::nil();
}

/// Moves (C, K') of a closed, guarded context under the prefix, choice and
/// recursion rules. Results are sorted and duplicate-free; 0 has none.
template <class Payload>
std::vector<std::pair<Payload, BasicContext<Payload>>> context_moves(const BasicContext<Payload>& k) {
  using K = BasicContext<Payload>;
  std::vector<std::pair<Payload, K>> out;
  switch (k.kind()) {
    case K::Kind::nil:
    case K::Kind::var:
      break;
    case K::Kind::prefix:
      out.emplace_back(k.offered(), k.tail());
      break;
    case K::Kind::choice:
      for (const auto& s : k.summands()) {
        auto moves = context_moves(s);
        out.insert(out.end(), moves.begin(), moves.end());
      }
      break;
    case K::Kind::rec:
      out = context_moves(substitute(k.body(), k.name(), k));
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {
template <class Payload>
bool ends_with_rec(const BasicContext<Payload>& k) {
  using K = BasicContext<Payload>;
  if (k.kind() == K::Kind::rec) return true;
  if (k.kind() == K::Kind::prefix) return ends_with_rec(k.tail());
  return false;
}
}  // namespace detail

/// Surface syntax; round-trips through the context parser.
template <class Payload, class Printer>
std::string to_string(const BasicContext<Payload>& k, Printer&& print_offered) {
  using K = BasicContext<Payload>;
  switch (k.kind()) {
    case K::Kind::nil:
      return "0";
    case K::Kind::var:
      return k.name();
    case K::Kind::prefix: {
      auto tail = to_string(k.tail(), print_offered);
      if (k.tail().kind() == K::Kind::choice) tail = "(" + tail + ")";
      return print_offered(k.offered()) + "." + tail;
    }
    case K::Kind::rec:
      return "rec " + k.name() + ". " + to_string(k.body(), print_offered);
    case K::Kind::choice: {
      std::string out;
      for (std::size_t i = 0; i < k.summands().size(); ++i) {
        const auto& s = k.summands()[i];
        auto text = to_string(s, print_offered);
        if (detail::ends_with_rec(s)) text = "(" + text + ")";
        if (i) out += " + ";
        out += text;
      }
      return out;
    }
  }
  return {};
}

using ContextExpr = BasicContext<EntitySet>;

std::string to_string(const ContextExpr& k, const Universe& universe);

}  // namespace rsos

template <class Payload>
struct std::hash<rsos::BasicContext<Payload>> {
  std::size_t operator()(const rsos::BasicContext<Payload>& k) const noexcept { return k.hash(); }
};
