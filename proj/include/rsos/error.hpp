#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Empty R, I or P, or R and I overlapping.
class ReactionInvariantViolation : public Error {
 public:
  using Error::Error;
};

class UnguardedRecursion : public Error {
 public:
  explicit UnguardedRecursion(std::string variable)
      : Error("unguarded recursion on variable '" + variable + "'"), variable_(std::move(variable)) {}
  const std::string& variable() const { return variable_; }

 private:
  std::string variable_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Raw transition enumeration exceeded its combination cap.
class StateSpaceGuard : public Error {
 public:
  StateSpaceGuard(std::size_t cap)
      : Error("raw step enumeration exceeded " + std::to_string(cap) + " justification combinations"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class LimitExceeded : public Error {
 public:
  enum class Kind { max_states, max_depth };
  LimitExceeded(Kind kind, std::size_t limit, std::size_t frontier)
      : Error(std::string(kind == Kind::max_states ? "max_states" : "max_depth") + " limit " +
              std::to_string(limit) + " exceeded with " + std::to_string(frontier) +
              " states on the frontier"),
        kind_(kind),
        frontier_(frontier) {}
  Kind kind() const { return kind_; }
  std::size_t frontier() const { return frontier_; }

 private:
  Kind kind_;
  std::size_t frontier_;
};

class MissingVariable : public Error {
 public:
  explicit MissingVariable(std::string name)
      : Error("valuation has no value for variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace rsos
