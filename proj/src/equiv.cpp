#include "rsos/equiv.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rsos {

BioHML BioHML::tt() { return BioHML(Node{Kind::tt, false, {}, nullptr, nullptr}); }
BioHML BioHML::ff() { return BioHML(Node{Kind::ff, false, {}, nullptr, nullptr}); }

BioHML BioHML::conjunction(BioHML left, BioHML right) {
  return BioHML(Node{Kind::conjunction, false, {}, std::make_shared<const BioHML>(std::move(left)),
                     std::make_shared<const BioHML>(std::move(right))});
}

BioHML BioHML::disjunction(BioHML left, BioHML right) {
  return BioHML(Node{Kind::disjunction, false, {}, std::make_shared<const BioHML>(std::move(left)),
                     std::make_shared<const BioHML>(std::move(right))});
}

BioHML BioHML::diamond(bool negated, std::string assertion, BioHML operand) {
  return BioHML(
      Node{Kind::diamond, negated, std::move(assertion), std::make_shared<const BioHML>(std::move(operand)), nullptr});
}

BioHML BioHML::box(bool negated, std::string assertion, BioHML operand) {
  return BioHML(
      Node{Kind::box, negated, std::move(assertion), std::make_shared<const BioHML>(std::move(operand)), nullptr});
}

std::size_t BioHML::modal_depth() const {
  switch (kind()) {
    case Kind::tt:
    case Kind::ff:
      return 0;
    case Kind::conjunction:
    case Kind::disjunction:
      return std::max(left().modal_depth(), right().modal_depth());
    case Kind::diamond:
    case Kind::box:
      return 1 + operand().modal_depth();
  }
  return 0;
}

std::size_t BioHML::size() const {
  switch (kind()) {
    case Kind::tt:
    case Kind::ff:
      return 1;
    case Kind::conjunction:
    case Kind::disjunction:
      return 1 + left().size() + right().size();
    case Kind::diamond:
    case Kind::box:
      return 1 + operand().size();
  }
  return 1;
}

bool BioHML::operator==(const BioHML& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::tt:
    case Kind::ff:
      return true;
    case Kind::conjunction:
    case Kind::disjunction:
      return left() == other.left() && right() == other.right();
    case Kind::diamond:
    case Kind::box:
      return negated() == other.negated() && assertion() == other.assertion() && operand() == other.operand();
  }
  return false;
}

BioHML converse(const BioHML& g) {
  using K = BioHML::Kind;
  switch (g.kind()) {
    case K::tt: return BioHML::ff();
    case K::ff: return BioHML::tt();
    case K::conjunction: return BioHML::disjunction(converse(g.left()), converse(g.right()));
    case K::disjunction: return BioHML::conjunction(converse(g.left()), converse(g.right()));
    case K::diamond: return BioHML::box(g.negated(), g.assertion(), converse(g.operand()));
    case K::box: return BioHML::diamond(g.negated(), g.assertion(), converse(g.operand()));
  }
  return g;
}

std::string to_string(const BioHML& g) {
  using K = BioHML::Kind;
  switch (g.kind()) {
    case K::tt: return "tt";
    case K::ff: return "ff";
    case K::conjunction: return "(" + to_string(g.left()) + " and " + to_string(g.right()) + ")";
    case K::disjunction: return "(" + to_string(g.left()) + " or " + to_string(g.right()) + ")";
    case K::diamond:
    case K::box: {
      const bool diamond = g.kind() == K::diamond;
      std::string out = diamond ? "<" : "[";
      if (g.negated()) out += "!";
      out += g.assertion();
      out += diamond ? ">" : "]";
      const auto& inner = g.operand();
      if (inner.kind() != K::diamond && inner.kind() != K::box) out += " ";
      return out + to_string(inner);
    }
  }
  return {};
}

std::vector<std::vector<std::pair<bool, std::size_t>>> AbstractLts::successors() const {
  std::vector<std::vector<std::pair<bool, std::size_t>>> out(num_states);
  for (const auto& e : edges) out[e.from].emplace_back(e.positive, e.to);
  return out;
}

AbstractLts abstract_lts(const Lts& lts, const Assertion& f) {
  AbstractLts out;
  out.num_states = lts.states.size();
  for (const auto& t : lts.transitions) out.edges.push_back({t.from, eval_assertion(t.label, f), t.to});
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

AbstractLts disjoint_union(const AbstractLts& left, const AbstractLts& right) {
  AbstractLts out = left;
  out.num_states += right.num_states;
  for (const auto& e : right.edges) {
    out.edges.push_back({e.from + left.num_states, e.positive, e.to + left.num_states});
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Refinement refine(const AbstractLts& lts) {
  const auto succ = lts.successors();
  Refinement r;
  r.levels.emplace_back(lts.num_states, 0);
  std::size_t count = lts.num_states ? 1 : 0;
  while (true) {
    const auto& prev = r.levels.back();
    using Signature = std::pair<std::size_t, std::vector<std::pair<bool, std::size_t>>>;
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> next(lts.num_states);
    for (std::size_t s = 0; s < lts.num_states; ++s) {
      Signature sig{prev[s], {}};
      for (const auto& [pos, t] : succ[s]) sig.second.emplace_back(pos, prev[t]);
      std::sort(sig.second.begin(), sig.second.end());
      sig.second.erase(std::unique(sig.second.begin(), sig.second.end()), sig.second.end());
      next[s] = ids.try_emplace(std::move(sig), ids.size()).first->second;
    }
    if (ids.size() == count) break;
    count = ids.size();
    r.levels.push_back(std::move(next));
  }
  return r;
}

std::vector<bool> satisfying_states(const AbstractLts& lts, const BioHML& g, BoxReading reading) {
  using K = BioHML::Kind;
  const std::size_t n = lts.num_states;
  switch (g.kind()) {
    case K::tt: return std::vector<bool>(n, true);
    case K::ff: return std::vector<bool>(n, false);
    case K::conjunction:
    case K::disjunction: {
      auto a = satisfying_states(lts, g.left(), reading);
      const auto b = satisfying_states(lts, g.right(), reading);
      for (std::size_t s = 0; s < n; ++s) a[s] = g.kind() == K::conjunction ? (a[s] && b[s]) : (a[s] || b[s]);
      return a;
    }
    case K::diamond: {
      const auto inner = satisfying_states(lts, g.operand(), reading);
      const bool want = !g.negated();
      std::vector<bool> out(n, false);
      for (const auto& e : lts.edges) {
        if (e.positive == want && inner[e.to]) out[e.from] = true;
      }
      return out;
    }
    case K::box: {
      const auto inner = satisfying_states(lts, g.operand(), reading);
      const bool want = !g.negated();
      std::vector<bool> out(n, true);
      for (const auto& e : lts.edges) {
        if (e.positive == want) {
          if (!inner[e.to]) out[e.from] = false;
        } else if (reading == BoxReading::strict) {
          out[e.from] = false;
        }
      }
      return out;
    }
  }
  return std::vector<bool>(n, false);
}

namespace {

class Distinguisher {
 public:
  Distinguisher(const AbstractLts& lts, const Refinement& r, std::string assertion)
      : succ_(lts.successors()), levels_(r.levels), name_(std::move(assertion)) {}

  // A formula true at s and false at t. Requires the two states to be split
  // at some level.
  BioHML operator()(std::size_t s, std::size_t t) {
    if (auto it = memo_.find({s, t}); it != memo_.end()) return it->second;
    std::size_t k = 1;
    while (levels_[k][s] == levels_[k][t]) ++k;
    const auto& prev = levels_[k - 1];

    std::optional<BioHML> best;
    auto consider = [&](BioHML candidate) {
      if (!best || candidate.modal_depth() < best->modal_depth() ||
          (candidate.modal_depth() == best->modal_depth() && candidate.size() < best->size())) {
        best = std::move(candidate);
      }
    };
    auto has = [&](std::size_t state, bool pos, std::size_t block) {
      return std::any_of(succ_[state].begin(), succ_[state].end(),
                         [&](const auto& e) { return e.first == pos && prev[e.second] == block; });
    };

    // s has a move (pos, block) that t cannot match: <pos> of everything that
    // separates that successor from each of t's pos-successors.
    for (const auto& [pos, s1] : succ_[s]) {
      if (has(t, pos, prev[s1])) continue;
      consider(BioHML::diamond(!pos, name_, separate_from_all(s1, t, pos, prev, true)));
    }
    // t has a move s cannot match: [pos] of the disjunction of formulas that
    // hold at s's pos-successors but fail at that move's target.
    for (const auto& [pos, t1] : succ_[t]) {
      if (has(s, pos, prev[t1])) continue;
      consider(BioHML::box(!pos, name_, separate_from_all(t1, s, pos, prev, false)));
    }
    // Level 0 puts every state in one block, so the first split comes from an
    // unmatched move and best is always set.
    memo_.emplace(std::make_pair(s, t), *best);
    return *best;
  }

 private:
  // positive side: conjunction over u' in succ_pos(u) of dist(x, u')
  // negative side: disjunction over u' in succ_pos(u) of dist(u', x)
  BioHML separate_from_all(std::size_t x, std::size_t u, bool pos, const std::vector<std::size_t>& prev,
                           bool positive_side) {
    std::vector<BioHML> parts;
    std::vector<std::size_t> seen_blocks;
    for (const auto& [p, u1] : succ_[u]) {
      if (p != pos) continue;
      if (std::find(seen_blocks.begin(), seen_blocks.end(), prev[u1]) != seen_blocks.end()) continue;
      seen_blocks.push_back(prev[u1]);
      BioHML part = positive_side ? (*this)(x, u1) : (*this)(u1, x);
      if (std::find(parts.begin(), parts.end(), part) == parts.end()) parts.push_back(std::move(part));
    }
    if (parts.empty()) return positive_side ? BioHML::tt() : BioHML::ff();
    BioHML out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
      out = positive_side ? BioHML::conjunction(out, parts[k]) : BioHML::disjunction(out, parts[k]);
    }
    return out;
  }

  std::vector<std::vector<std::pair<bool, std::size_t>>> succ_;
  const std::vector<std::vector<std::size_t>>& levels_;
  std::string name_;
  std::map<std::pair<std::size_t, std::size_t>, BioHML> memo_;
};

}  // namespace

std::optional<BioHML> distinguishing_formula(const AbstractLts& lts, const Refinement& refinement, std::size_t s,
                                             std::size_t t, const std::string& assertion) {
  if (refinement.equivalent(s, t)) return std::nullopt;
  Distinguisher dist(lts, refinement, assertion);
  return dist(s, t);
}

namespace {

struct Union {
  AbstractLts lts;
  std::size_t offset;
};

Union joint(const Process& p, const Process& q, const Assertion& f, const BuildLimits& limits) {
  const auto left = abstract_lts(build_lts(p, StepMode::dominant, limits), f);
  const auto right = abstract_lts(build_lts(q, StepMode::dominant, limits), f);
  return {disjoint_union(left, right), left.num_states};
}

}  // namespace

bool bisimilar(const Process& p, const Process& q, const Assertion& f, const BuildLimits& limits) {
  const auto u = joint(p, q, f, limits);
  return refine(u.lts).equivalent(0, u.offset);
}

bool check_formula(const Process& p, const BioHML& g, const Assertion& f, const BuildLimits& limits,
                   BoxReading reading) {
  const auto lts = abstract_lts(build_lts(p, StepMode::dominant, limits), f);
  return satisfying_states(lts, g, reading)[0];
}

std::optional<BioHML> distinguishing_formula(const Process& p, const Process& q, const Assertion& f,
                                             const std::string& assertion, const BuildLimits& limits) {
  const auto u = joint(p, q, f, limits);
  return distinguishing_formula(u.lts, refine(u.lts), 0, u.offset, assertion);
}

}  // namespace rsos
