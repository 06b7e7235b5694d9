#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rsos/assertion.hpp"
#include "rsos/connector.hpp"
#include "rsos/equiv.hpp"
#include "rsos/error.hpp"
#include "rsos/process.hpp"
#include "rsos/quant.hpp"

namespace rsos {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourcePos&) const = default;
};

/// A diagnostic from the specification front-end. what() reads
/// "line:column: kind: message".
class SpecError : public Error {
 public:
  enum class Kind {
    syntax_error,
    unknown_entity,
    unknown_name,
    duplicate_name,
    reaction_invariant_violation,
    unguarded_recursion,
    unknown_position,
  };

  SpecError(Kind kind, SourcePos pos, std::string message);

  Kind kind() const { return kind_; }
  const SourcePos& pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  SourcePos pos_;
  std::string message_;
};

std::string_view to_string(SpecError::Kind kind);

struct ReactionDecl {
  std::string name;
  QuantReaction quant;
  SourcePos pos;

  const Reaction& reaction() const { return quant.erase(); }
};

struct ContextDecl {
  std::string name;
  QuantContextExpr quant;
  ContextExpr context;
  SourcePos pos;
};

struct SystemDecl {
  std::string name;
  QuantProcess quant;
  Process process;
  /// Some count differs from 1 or some amount mentions a variable.
  bool quantitative = false;
  SourcePos pos;
};

struct AssertionDecl {
  std::string name;
  Assertion assertion;
  SourcePos pos;
};

struct FormulaDecl {
  std::string name;
  BioHML formula;
  SourcePos pos;
};

struct LinkDecl {
  std::string name;
  ConnectedSystem system;
  SourcePos pos;
};

/// A fully resolved specification.
struct Spec {
  Universe universe;
  std::vector<ReactionDecl> reactions;
  std::vector<ContextDecl> contexts;
  std::vector<SystemDecl> systems;
  std::vector<AssertionDecl> assertions;
  std::vector<FormulaDecl> formulas;
  std::vector<LinkDecl> links;
  /// Context variables used in quantitative amounts.
  std::set<std::string> variables;

  const ReactionDecl* find_reaction(std::string_view name) const;
  const ContextDecl* find_context(std::string_view name) const;
  const SystemDecl* find_system(std::string_view name) const;
  const AssertionDecl* find_assertion(std::string_view name) const;
  const FormulaDecl* find_formula(std::string_view name) const;
  const LinkDecl* find_link(std::string_view name) const;
};

/// Throws SpecError at the first diagnostic.
Spec parse_spec(std::string_view text);

Assertion parse_assertion(std::string_view text, const Universe& universe);

/// `assertions` lists the names a modality may mention.
BioHML parse_formula(std::string_view text, const std::set<std::string>& assertions);

/// A bracketed set-valued system with inline reactions, as printed by
/// to_string(Process).
Process parse_process(std::string_view text, const Universe& universe);

ContextExpr parse_context(std::string_view text, const Universe& universe);

}  // namespace rsos
