#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsos/assertion.hpp"
#include "rsos/lts.hpp"

namespace rsos {

/// bioHML: HML whose modalities are indexed by the polarity of one ambient
/// assertion F (χ ∈ {F, ¬F}). The assertion name is kept for printing only;
/// evaluation always uses the assertion supplied by the caller.
class BioHML {
 public:
  enum class Kind { tt, ff, conjunction, disjunction, diamond, box };

  static BioHML tt();
  static BioHML ff();
  static BioHML conjunction(BioHML left, BioHML right);
  static BioHML disjunction(BioHML left, BioHML right);
  /// <χ>G with χ = ¬F when negated.
  static BioHML diamond(bool negated, std::string assertion, BioHML operand);
  /// [χ]G with χ = ¬F when negated.
  static BioHML box(bool negated, std::string assertion, BioHML operand);

  Kind kind() const { return node_->kind; }
  bool negated() const { return node_->negated; }
  const std::string& assertion() const { return node_->assertion; }
  const BioHML& left() const { return *node_->left; }
  const BioHML& right() const { return *node_->right; }
  const BioHML& operand() const { return *node_->left; }

  std::size_t modal_depth() const;
  std::size_t size() const;

  bool operator==(const BioHML& other) const;

 private:
  struct Node {
    Kind kind = Kind::tt;
    bool negated = false;
    std::string assertion;
    std::shared_ptr<const BioHML> left;
    std::shared_ptr<const BioHML> right;
  };
  explicit BioHML(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

/// The dual formula Ḡ: p ⊨ Ḡ iff p ⊭ G (standard box reading).
BioHML converse(const BioHML& g);

/// e.g. `<!F1>[!F1]<!F1> tt`
std::string to_string(const BioHML& g);

/// How [χ]G treats edges of the opposite polarity.
enum class BoxReading {
  standard,  ///< ignored: every χ-edge must lead into ⟦G⟧
  strict,    ///< falsify: every edge must have polarity χ and lead into ⟦G⟧
};

struct AbstractEdge {
  std::size_t from = 0;
  bool positive = false;  ///< label satisfies F
  std::size_t to = 0;

  bool operator==(const AbstractEdge&) const = default;
  std::strong_ordering operator<=>(const AbstractEdge&) const = default;
};

/// An LTS relabelled over {F, ¬F}; parallel edges with equal polarity and
/// endpoints are merged.
struct AbstractLts {
  std::size_t num_states = 0;
  std::vector<AbstractEdge> edges;  ///< sorted, duplicate-free

  /// (polarity, target) pairs per state.
  std::vector<std::vector<std::pair<bool, std::size_t>>> successors() const;
};

AbstractLts abstract_lts(const Lts& lts, const Assertion& f);

/// States of `right` are shifted by left.num_states.
AbstractLts disjoint_union(const AbstractLts& left, const AbstractLts& right);

/// Partition refinement to the coarsest strong bisimulation. levels[k][s] is
/// the block of s after k refinement rounds; the last level is stable.
struct Refinement {
  std::vector<std::vector<std::size_t>> levels;
  const std::vector<std::size_t>& blocks() const { return levels.back(); }
  bool equivalent(std::size_t s, std::size_t t) const { return blocks()[s] == blocks()[t]; }
};

Refinement refine(const AbstractLts& lts);

/// ⟦g⟧ as a membership vector.
std::vector<bool> satisfying_states(const AbstractLts& lts, const BioHML& g,
                                    BoxReading reading = BoxReading::standard);

/// A formula satisfied by s and not by t, or none if they are bisimilar.
/// Built from the refinement history; modalities are named `assertion`.
std::optional<BioHML> distinguishing_formula(const AbstractLts& lts, const Refinement& refinement,
                                             std::size_t s, std::size_t t, const std::string& assertion);

/// p ~_F q over the dominant transition systems.
bool bisimilar(const Process& p, const Process& q, const Assertion& f, const BuildLimits& limits = {});

/// p ⊨ g with g read relative to f.
bool check_formula(const Process& p, const BioHML& g, const Assertion& f, const BuildLimits& limits = {},
                   BoxReading reading = BoxReading::standard);

/// None iff p ~_F q; otherwise G with p ⊨ G and q ⊭ G.
std::optional<BioHML> distinguishing_formula(const Process& p, const Process& q, const Assertion& f,
                                             const std::string& assertion = "F",
                                             const BuildLimits& limits = {});

}  // namespace rsos
