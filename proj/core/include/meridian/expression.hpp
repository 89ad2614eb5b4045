#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "meridian/errors.hpp"
#include "meridian/jet.hpp"

namespace meridian {

// A scalar function of one real variable that can report its value and
// first three derivatives at a point.
class JetFunction {
 public:
  virtual ~JetFunction() = default;

  virtual ScalarJet jet(double t) const = 0;
  virtual std::string describe() const = 0;

  double operator()(double t) const { return jet(t).value; }
};

using FunctionRef = std::shared_ptr<const JetFunction>;

// Jet of `fn` at `t`. DomainErrors are rethrown carrying `t`.
ScalarJet jet_eval(const JetFunction& fn, double t);

// fn(arg(.)) to third order, given the jet of the inner function.
ScalarJet compose(const JetFunction& fn, const ScalarJet& arg);

// Wraps a callable that maps a jet argument to a jet result, e.g. a
// closed-form right-hand side built from jet arithmetic.
class LambdaFunction final : public JetFunction {
 public:
  using Body = std::function<ScalarJet(const ScalarJet&)>;

  LambdaFunction(Body body, std::string description)
      : body_(std::move(body)), description_(std::move(description)) {}

  ScalarJet jet(double t) const override { return body_(ScalarJet::variable(t)); }
  ScalarJet apply(const ScalarJet& x) const { return body_(x); }
  std::string describe() const override { return description_; }

 private:
  Body body_;
  std::string description_;
};

// Thrown for malformed expression text. The message names the offending
// token and its byte offset.
class ParseError : public SpecError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : SpecError(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Expression over one variable. Grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?
//   primary := number | 'pi' | var | func '(' expr ')' | '(' expr ')'
//   var     := 't' | 'u' | 'v' | 'x'
//   func    := sin cos tan sec sinh cosh exp log sqrt
//
// '^' is right associative and binds tighter than unary minus, so
// -u^2 = -(u^2). Only one variable symbol may appear in an expression.
class Expression final : public JetFunction {
 public:
  struct Node;

  static std::shared_ptr<const Expression> parse(std::string_view text);

  ScalarJet jet(double t) const override;
  ScalarJet apply(const ScalarJet& x) const;
  std::string describe() const override { return text_; }

  const std::string& text() const { return text_; }
  bool is_constant() const;

 private:
  Expression(std::string text, std::shared_ptr<const Node> root)
      : text_(std::move(text)), root_(std::move(root)) {}

  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace meridian
