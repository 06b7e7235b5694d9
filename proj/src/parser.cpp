#include "rsos/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>

namespace rsos {

SpecError::SpecError(Kind kind, SourcePos pos, std::string message)
    : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + std::string(to_string(kind)) +
            ": " + message),
      kind_(kind),
      pos_(pos),
      message_(std::move(message)) {}

std::string_view to_string(SpecError::Kind kind) {
  using K = SpecError::Kind;
  switch (kind) {
    case K::syntax_error: return "SyntaxError";
    case K::unknown_entity: return "UnknownEntity";
    case K::unknown_name: return "UnknownName";
    case K::duplicate_name: return "DuplicateName";
    case K::reaction_invariant_violation: return "ReactionInvariantViolation";
    case K::unguarded_recursion: return "UnguardedRecursion";
    case K::unknown_position: return "UnknownPosition";
  }
  return "Error";
}

namespace {

template <class Decl>
const Decl* find_named(const std::vector<Decl>& decls, std::string_view name) {
  for (const auto& d : decls) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

}  // namespace

const ReactionDecl* Spec::find_reaction(std::string_view name) const { return find_named(reactions, name); }
const ContextDecl* Spec::find_context(std::string_view name) const { return find_named(contexts, name); }
const SystemDecl* Spec::find_system(std::string_view name) const { return find_named(systems, name); }
const AssertionDecl* Spec::find_assertion(std::string_view name) const { return find_named(assertions, name); }
const FormulaDecl* Spec::find_formula(std::string_view name) const { return find_named(formulas, name); }
const LinkDecl* Spec::find_link(std::string_view name) const { return find_named(links, name); }

namespace {

using K = SpecError::Kind;

enum class TokenType { ident, number, symbol, end };

struct Token {
  TokenType type = TokenType::end;
  std::string text;
  std::uint64_t value = 0;
  SourcePos pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++k) {
      if (text[k] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (k < text.size()) {
    const char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (k < text.size() && text[k] != '\n') advance(1);
      continue;
    }
    Token t;
    t.pos = pos;
    if (ident_start(c)) {
      std::size_t e = k;
      while (e < text.size()) {
        if (ident_char(text[e])) {
          ++e;
        } else if (text[e] == ':' && e + 1 < text.size() && ident_start(text[e + 1])) {
          // complex names such as hsp:hsf
          e += 2;
        } else {
          break;
        }
      }
      t.type = TokenType::ident;
      t.text = std::string(text.substr(k, e - k));
      advance(e - k);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t e = k;
      while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) ++e;
      t.type = TokenType::number;
      t.text = std::string(text.substr(k, e - k));
      if (t.text.size() > 18) throw SpecError(K::syntax_error, pos, "number too large: " + t.text);
      t.value = std::stoull(t.text);
      advance(e - k);
    } else if (text.substr(k, 2) == "-|" || text.substr(k, 2) == "->") {
      t.type = TokenType::symbol;
      t.text = std::string(text.substr(k, 2));
      advance(2);
    } else if (std::string_view("[]{}(),;.+|*<>!?=:").find(c) != std::string_view::npos) {
      t.type = TokenType::symbol;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw SpecError(K::syntax_error, pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

std::string describe(const Token& t) {
  switch (t.type) {
    case TokenType::end: return "end of input";
    case TokenType::ident: return "'" + t.text + "'";
    case TokenType::number: return "number " + t.text;
    case TokenType::symbol: return "'" + t.text + "'";
  }
  return "token";
}

bool is_quantitative(const QuantContext& c) {
  return std::any_of(c.amounts.begin(), c.amounts.end(),
                     [](const auto& kv) { return !(kv.second.is_constant() && kv.second.constant == 1); });
}

bool is_quantitative(const EntityMultiset& m) {
  return std::any_of(m.counts().begin(), m.counts().end(), [](const auto& kv) { return kv.second != 1; });
}

bool is_quantitative(const QuantContextExpr& k) {
  using QK = QuantContextExpr::Kind;
  switch (k.kind()) {
    case QK::nil:
    case QK::var:
      return false;
    case QK::prefix:
      return is_quantitative(k.offered()) || is_quantitative(k.tail());
    case QK::rec:
      return is_quantitative(k.body());
    case QK::choice:
      return std::any_of(k.summands().begin(), k.summands().end(),
                         [](const QuantContextExpr& s) { return is_quantitative(s); });
  }
  return false;
}

class Parser {
 public:
  Parser(std::string_view text, Spec& spec, const std::set<std::string>* formula_names = nullptr)
      : tokens_(tokenize(text)), spec_(spec), formula_names_(formula_names) {}

  // ---- token helpers

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(idx_ + ahead, tokens_.size() - 1)]; }
  bool at_end() const { return peek().type == TokenType::end; }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).type == TokenType::symbol && peek(ahead).text == s;
  }
  bool is_keyword(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).type == TokenType::ident && peek(ahead).text == s;
  }
  const Token& next() { return tokens_[std::min(idx_++, tokens_.size() - 1)]; }
  bool accept(std::string_view s) {
    if (!is_symbol(s)) return false;
    ++idx_;
    return true;
  }
  [[noreturn]] void fail_expected(std::string_view what) const {
    throw SpecError(K::syntax_error, peek().pos, "expected " + std::string(what) + ", found " + describe(peek()));
  }
  const Token& expect(std::string_view s) {
    if (!is_symbol(s)) fail_expected("'" + std::string(s) + "'");
    return next();
  }
  const Token& expect_ident(std::string_view what) {
    if (peek().type != TokenType::ident) fail_expected(what);
    return next();
  }
  void expect_end() {
    if (!at_end()) fail_expected("end of input");
  }

  // ---- entities and quantities

  EntityId entity(const Token& t) const {
    if (auto id = spec_.universe.find(t.text)) return *id;
    throw SpecError(K::unknown_entity, t.pos, "entity '" + t.text + "' is not declared");
  }

  std::string variable(const Token& t) {
    if (spec_.universe.find(t.text)) {
      throw SpecError(K::duplicate_name, t.pos, "'" + t.text + "' is an entity and cannot be used as a variable");
    }
    spec_.variables.insert(t.text);
    return t.text;
  }

  // lterm := number ["*" ident] | ident
  LinExpr linexpr() {
    LinExpr e;
    do {
      if (peek().type == TokenType::number) {
        const std::uint64_t n = next().value;
        if (accept("*")) {
          e += LinExpr::variable(variable(expect_ident("a variable")), n);
        } else {
          e += LinExpr::number(n);
        }
      } else if (peek().type == TokenType::ident) {
        e += LinExpr::variable(variable(next()));
      } else {
        fail_expected("a number or variable");
      }
    } while (accept("+"));
    return e;
  }

  // cterm := [coefficient "*"] ident, coefficient := number | ident | "(" linexpr ")"
  void context_term(QuantContext& c) {
    LinExpr amount = LinExpr::number(1);
    if (peek().type == TokenType::number) {
      amount = LinExpr::number(next().value);
      expect("*");
    } else if (accept("(")) {
      amount = linexpr();
      expect(")");
      expect("*");
    } else if (peek().type == TokenType::ident && is_symbol("*", 1)) {
      amount = LinExpr::variable(variable(next()));
      expect("*");
    }
    const Token& name = expect_ident("an entity name");
    const EntityId id = entity(name);
    if (amount.is_zero()) throw SpecError(K::syntax_error, name.pos, "zero amount for '" + name.text + "'");
    c.add(id, amount);
  }

  QuantContext cset() {
    expect("{");
    QuantContext c;
    if (!is_symbol("}")) {
      do {
        context_term(c);
      } while (accept(","));
    }
    expect("}");
    return c;
  }

  // eset := "[" [rterm {"," rterm}] "]", rterm := [number "*"] ident
  EntityMultiset eset() {
    expect("[");
    EntityMultiset m;
    if (!is_symbol("]")) {
      do {
        std::uint64_t n = 1;
        if (peek().type == TokenType::number) {
          n = next().value;
          expect("*");
        }
        const Token& name = expect_ident("an entity name");
        if (n == 0) throw SpecError(K::syntax_error, name.pos, "zero count for '" + name.text + "'");
        m.add(entity(name), n);
      } while (accept(","));
    }
    expect("]");
    return m;
  }

  QuantReaction reaction_body(SourcePos pos) {
    auto r = eset();
    expect("-|");
    const SourcePos ipos = peek().pos;
    auto i = eset();
    if (is_quantitative(i)) throw SpecError(K::syntax_error, ipos, "inhibitors form a plain set; counts not allowed");
    expect("->");
    auto p = eset();
    try {
      return QuantReaction(std::move(r), i.support(), std::move(p));
    } catch (const ReactionInvariantViolation& e) {
      throw SpecError(K::reaction_invariant_violation, pos,
                      std::string(e.what()) + " (a reaction needs non-empty R, I, P with R and I disjoint)");
    }
  }

  // ---- contexts

  // sum := seq {"+" seq}
  QuantContextExpr ctx_sum() {
    std::vector<QuantContextExpr> parts{ctx_seq()};
    while (accept("+")) parts.push_back(ctx_seq());
    return parts.size() == 1 ? parts.front() : QuantContextExpr::choice(std::move(parts));
  }

  // seq := "0" | ident | cset "." seq | "rec" ident "." sum | "(" sum ")"
  QuantContextExpr ctx_seq() {
    const Token& t = peek();
    if (t.type == TokenType::number) {
      if (t.value != 0) fail_expected("a context");
      next();
      return QuantContextExpr::nil();
    }
    if (is_keyword("rec")) {
      next();
      const Token& x = expect_ident("a recursion variable");
      expect(".");
      bound_.push_back(x.text);
      auto body = ctx_sum();
      bound_.pop_back();
      return QuantContextExpr::rec(x.text, std::move(body));
    }
    if (t.type == TokenType::ident) {
      next();
      if (std::find(bound_.begin(), bound_.end(), t.text) != bound_.end()) return QuantContextExpr::var(t.text);
      if (const auto* k = spec_.find_context(t.text)) return k->quant;
      throw SpecError(K::unknown_name, t.pos, "'" + t.text + "' is neither a bound variable nor a context");
    }
    if (is_symbol("{")) {
      auto c = cset();
      expect(".");
      return QuantContextExpr::prefix(std::move(c), ctx_seq());
    }
    if (accept("(")) {
      auto k = ctx_sum();
      expect(")");
      return k;
    }
    fail_expected("a context");
  }

  QuantContextExpr guarded_context() {
    const SourcePos pos = peek().pos;
    auto k = ctx_sum();
    try {
      check_guarded(k);
    } catch (const UnguardedRecursion& e) {
      throw SpecError(K::unguarded_recursion, pos, e.what());
    }
    return k;
  }

  // ---- mixtures

  // item := ident | cset | ctx | "(" eset "-|" eset "->" eset ")"
  QuantProcess mixture() {
    std::vector<QuantReaction> reactions;
    QuantContext state;
    std::vector<QuantContextExpr> contexts;
    do {
      if (is_symbol("(") && is_symbol("[", 1)) {
        const SourcePos pos = next().pos;
        reactions.push_back(reaction_body(pos));
        expect(")");
      } else if (is_symbol("{")) {
        const std::size_t mark = idx_;
        auto d = cset();
        if (is_symbol(".")) {
          idx_ = mark;
          contexts.push_back(guarded_context());
        } else {
          state = context_union(state, d);
        }
      } else if (peek().type == TokenType::ident && spec_.find_reaction(peek().text)) {
        reactions.push_back(spec_.find_reaction(next().text)->quant);
      } else {
        contexts.push_back(guarded_context());
      }
    } while (accept("|"));
    for (const auto& [a, e] : state.amounts) {
      if (!e.is_constant()) {
        throw SpecError(K::syntax_error, peek().pos, "state amounts must be numbers; variables belong in contexts");
      }
    }
    return QuantProcess(std::move(reactions), std::move(state), std::move(contexts));
  }

  QuantProcess system() {
    expect("[");
    auto p = mixture();
    expect("]");
    return p;
  }

  // ---- assertions

  Position position() {
    const Token& t = expect_ident("a position (W, R, I or P)");
    if (t.text == "W" || t.text == "E") return Position::w;
    if (t.text == "R") return Position::r;
    if (t.text == "I") return Position::i;
    if (t.text == "P") return Position::p;
    throw SpecError(K::unknown_position, t.pos, "'" + t.text + "' is not one of W, R, I, P");
  }

  Assertion assertion() {
    auto f = asrt_xor();
    while (is_keyword("or")) {
      next();
      f = Assertion::disjunction(std::move(f), asrt_xor());
    }
    return f;
  }

  Assertion asrt_xor() {
    auto f = asrt_and();
    while (is_keyword("xor")) {
      next();
      f = Assertion::exclusive_or(std::move(f), asrt_and());
    }
    return f;
  }

  Assertion asrt_and() {
    auto f = asrt_unary();
    while (is_keyword("and")) {
      next();
      f = Assertion::conjunction(std::move(f), asrt_unary());
    }
    return f;
  }

  Assertion asrt_unary() {
    if (accept("!")) return Assertion::negation(asrt_unary());
    if (accept("(")) {
      auto f = assertion();
      expect(")");
      return f;
    }
    if (accept("?")) {
      if (!is_keyword("in")) fail_expected("'in'");
      next();
      return Assertion::nonempty(position());
    }
    if (is_symbol("{")) {
      const SourcePos pos = peek().pos;
      const auto c = cset();
      if (is_quantitative(c)) throw SpecError(K::syntax_error, pos, "assertions take plain entity sets");
      if (!is_keyword("subset") && !is_keyword("in")) fail_expected("'subset'");
      next();
      return Assertion::subset(c.support(), position());
    }
    const Token& t = expect_ident("an assertion");
    if (is_keyword("in") || is_keyword("subset")) {
      next();
      EntitySet e;
      e.insert(entity(t));
      return Assertion::subset(std::move(e), position());
    }
    if (const auto* a = spec_.find_assertion(t.text)) return a->assertion;
    throw SpecError(K::syntax_error, peek().pos, "expected 'in' or 'subset' after '" + t.text + "'");
  }

  // ---- formulas

  bool assertion_known(const std::string& name) const {
    if (formula_names_) return formula_names_->count(name) > 0;
    return spec_.find_assertion(name) != nullptr;
  }

  BioHML formula() {
    auto g = fml_and();
    while (is_keyword("or")) {
      next();
      g = BioHML::disjunction(std::move(g), fml_and());
    }
    return g;
  }

  BioHML fml_and() {
    auto g = fml_unary();
    while (is_keyword("and")) {
      next();
      g = BioHML::conjunction(std::move(g), fml_unary());
    }
    return g;
  }

  std::pair<bool, std::string> chi() {
    const bool negated = accept("!");
    const Token& t = expect_ident("an assertion name");
    if (!assertion_known(t.text)) throw SpecError(K::unknown_name, t.pos, "assertion '" + t.text + "' is not declared");
    return {negated, t.text};
  }

  BioHML fml_unary() {
    if (is_keyword("tt")) {
      next();
      return BioHML::tt();
    }
    if (is_keyword("ff")) {
      next();
      return BioHML::ff();
    }
    if (accept("<")) {
      auto [negated, name] = chi();
      expect(">");
      return BioHML::diamond(negated, name, fml_unary());
    }
    if (accept("[")) {
      auto [negated, name] = chi();
      expect("]");
      return BioHML::box(negated, name, fml_unary());
    }
    if (accept("(")) {
      auto g = formula();
      expect(")");
      return g;
    }
    if (is_symbol("!")) {
      throw SpecError(K::syntax_error, peek().pos, "bioHML has no negation; use the converse formula instead");
    }
    fail_expected("a formula");
  }

  // ---- declarations

  void check_fresh(const Token& name, bool system_namespace) {
    const bool taken = system_namespace ? (spec_.find_system(name.text) || spec_.find_link(name.text))
                                        : (spec_.find_reaction(name.text) || spec_.find_context(name.text));
    if (taken) throw SpecError(K::duplicate_name, name.pos, "'" + name.text + "' is already declared");
  }

  void declaration() {
    const Token& kw = expect_ident("a declaration");
    if (kw.text == "entities") {
      do {
        const Token& t = expect_ident("an entity name");
        if (spec_.variables.count(t.text)) {
          throw SpecError(K::duplicate_name, t.pos, "'" + t.text + "' is already used as a variable");
        }
        spec_.universe.add(t.text);
      } while (accept(","));
    } else if (kw.text == "reaction") {
      const Token& name = expect_ident("a reaction name");
      check_fresh(name, false);
      expect(":");
      auto r = reaction_body(name.pos);
      spec_.reactions.push_back({name.text, std::move(r), name.pos});
    } else if (kw.text == "context") {
      const Token& name = expect_ident("a context name");
      check_fresh(name, false);
      expect("=");
      auto k = guarded_context();
      auto set_form = erase(k);
      spec_.contexts.push_back({name.text, std::move(k), std::move(set_form), name.pos});
    } else if (kw.text == "system") {
      const Token& name = expect_ident("a system name");
      check_fresh(name, true);
      expect("=");
      auto q = system();
      SystemDecl d{name.text, q, q.erase(), false, name.pos};
      d.quantitative = !is_quantitative_free(q);
      spec_.systems.push_back(std::move(d));
    } else if (kw.text == "assert") {
      const Token& name = expect_ident("an assertion name");
      if (spec_.find_assertion(name.text)) {
        throw SpecError(K::duplicate_name, name.pos, "'" + name.text + "' is already declared");
      }
      expect("=");
      auto f = assertion();
      spec_.assertions.push_back({name.text, std::move(f), name.pos});
    } else if (kw.text == "formula") {
      const Token& name = expect_ident("a formula name");
      if (spec_.find_formula(name.text)) {
        throw SpecError(K::duplicate_name, name.pos, "'" + name.text + "' is already declared");
      }
      expect("=");
      auto g = formula();
      spec_.formulas.push_back({name.text, std::move(g), name.pos});
    } else if (kw.text == "link") {
      link(kw.pos);
    } else {
      throw SpecError(K::syntax_error, kw.pos, "unknown declaration '" + kw.text + "'");
    }
  }

  static bool is_quantitative_free(const QuantProcess& q) {
    if (is_quantitative(q.state())) return false;
    for (const auto& a : q.reactions()) {
      if (is_quantitative(a.reactants()) || is_quantitative(a.products())) return false;
    }
    for (const auto& k : q.contexts()) {
      if (is_quantitative(k)) return false;
    }
    return true;
  }

  const SystemDecl& system_ref() {
    const Token& t = expect_ident("a system name");
    if (const auto* s = spec_.find_system(t.text)) return *s;
    throw SpecError(K::unknown_name, t.pos, "system '" + t.text + "' is not declared");
  }

  // link [NAME "="] SYS cset SYS {cset SYS}
  void link(SourcePos pos) {
    std::optional<Token> name;
    if (peek().type == TokenType::ident && is_symbol("=", 1)) {
      name = next();
      next();
    }
    const SystemDecl& first = system_ref();
    std::string derived = first.name;
    std::variant<Process, std::shared_ptr<const ConnectedSystem>> left = first.process;
    do {
      const SourcePos lpos = peek().pos;
      const auto l = cset();
      if (is_quantitative(l)) throw SpecError(K::syntax_error, lpos, "link sets take plain entities");
      const SystemDecl& right = system_ref();
      derived += "_" + right.name;
      left = std::make_shared<const ConnectedSystem>(ConnectedSystem{left, l.support(), right.process});
    } while (is_symbol("{"));
    Token label;
    label.text = name ? name->text : derived;
    label.pos = name ? name->pos : pos;
    check_fresh(label, true);
    spec_.links.push_back({label.text, *std::get<1>(left), label.pos});
  }

  void document() {
    while (!at_end()) {
      declaration();
      expect(";");
    }
  }

  std::size_t idx_ = 0;

 private:
  std::vector<Token> tokens_;
  Spec& spec_;
  const std::set<std::string>* formula_names_;
  std::vector<std::string> bound_;
};

Spec with_universe(const Universe& universe) {
  Spec spec;
  spec.universe = universe;
  return spec;
}

}  // namespace

Spec parse_spec(std::string_view text) {
  Spec spec;
  Parser parser(text, spec);
  parser.document();
  return spec;
}

Assertion parse_assertion(std::string_view text, const Universe& universe) {
  Spec spec = with_universe(universe);
  Parser parser(text, spec);
  auto f = parser.assertion();
  parser.expect_end();
  return f;
}

BioHML parse_formula(std::string_view text, const std::set<std::string>& assertions) {
  Spec spec;
  Parser parser(text, spec, &assertions);
  auto g = parser.formula();
  parser.expect_end();
  return g;
}

Process parse_process(std::string_view text, const Universe& universe) {
  Spec spec = with_universe(universe);
  Parser parser(text, spec);
  auto q = parser.system();
  parser.expect_end();
  return q.erase();
}

ContextExpr parse_context(std::string_view text, const Universe& universe) {
  Spec spec = with_universe(universe);
  Parser parser(text, spec);
  auto k = parser.guarded_context();
  parser.expect_end();
  return erase(k);
}

}  // namespace rsos
