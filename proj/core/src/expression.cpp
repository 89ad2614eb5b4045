#include "meridian/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace meridian {

ScalarJet jet_eval(const JetFunction& fn, double t) {
  try {
    return fn.jet(t);
  } catch (const DomainError& e) {
    if (e.at() == t) throw;
    throw DomainError(fn.describe() + ": " + e.reason(), t);
  }
}

ScalarJet compose(const JetFunction& fn, const ScalarJet& arg) {
  const ScalarJet g = fn.jet(arg.value);
  return meridian::compose(arg, g.value, g.d1, g.d2, g.d3);
}

enum class Func { Sin, Cos, Tan, Sec, Sinh, Cosh, Exp, Log, Sqrt };

struct Expression::Node {
  enum class Kind { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Call };

  Kind kind = Kind::Constant;
  double value = 0.0;
  Func func = Func::Sin;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  bool constant = true;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

struct FuncName {
  std::string_view name;
  Func func;
};

constexpr std::array<FuncName, 9> kFunctions{{{"sin", Func::Sin},
                                              {"cos", Func::Cos},
                                              {"tan", Func::Tan},
                                              {"sec", Func::Sec},
                                              {"sinh", Func::Sinh},
                                              {"cosh", Func::Cosh},
                                              {"exp", Func::Exp},
                                              {"log", Func::Log},
                                              {"sqrt", Func::Sqrt}}};

bool is_variable_name(std::string_view s) {
  return s == "t" || s == "u" || s == "v" || s == "x";
}

NodePtr make_constant(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Constant;
  n->value = v;
  return n;
}

NodePtr make_unary(Node::Kind kind, NodePtr arg, Func f = Func::Sin) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->func = f;
  n->constant = arg->constant;
  n->lhs = std::move(arg);
  return n;
}

NodePtr make_binary(Node::Kind kind, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->constant = a->constant && b->constant;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", 0);
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail_at_token("unexpected token");
    return root;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        lhs = make_binary(Node::Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make_binary(Node::Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        lhs = make_binary(Node::Kind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make_binary(Node::Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    skip_space();
    if (accept('-')) return make_unary(Node::Kind::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    skip_space();
    if (accept('^')) return make_binary(Node::Kind::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      skip_space();
      if (!accept(')')) fail_at_token("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail_at_token("unexpected token");
  }

  NodePtr number() {
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) fail_at_token("invalid number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return make_constant(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "pi") return make_constant(std::numbers::pi);
    if (is_variable_name(name)) {
      if (variable_ && *variable_ != name)
        throw ParseError("expression mixes variables '" + std::string(*variable_) + "' and '" +
                             std::string(name) + "'",
                         start);
      variable_ = name;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Variable;
      n->constant = false;
      return n;
    }
    for (const auto& f : kFunctions) {
      if (f.name == name) {
        skip_space();
        if (!accept('(')) fail_at_token("expected '(' after function name");
        NodePtr arg = expr();
        skip_space();
        if (!accept(')')) fail_at_token("expected ')'");
        return make_unary(Node::Kind::Call, arg, f.func);
      }
    }
    throw ParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  [[noreturn]] void fail_at_token(const std::string& why) {
    if (pos_ >= text_.size()) throw ParseError(why + " at end of expression", pos_);
    std::size_t end = pos_ + 1;
    if (std::isalnum(static_cast<unsigned char>(text_[pos_])))
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    throw ParseError(why + " '" + std::string(text_.substr(pos_, end - pos_)) + "' at offset " +
                         std::to_string(pos_),
                     pos_);
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<std::string_view> variable_;
};

ScalarJet apply_func(Func f, const ScalarJet& x) {
  switch (f) {
    case Func::Sin: return sin(x);
    case Func::Cos: return cos(x);
    case Func::Tan: return tan(x);
    case Func::Sec: return sec(x);
    case Func::Sinh: return sinh(x);
    case Func::Cosh: return cosh(x);
    case Func::Exp: return exp(x);
    case Func::Log: return log(x);
    case Func::Sqrt: return sqrt(x);
  }
  return x;
}

ScalarJet evaluate(const Node& n, const ScalarJet& x) {
  switch (n.kind) {
    case Node::Kind::Constant: return ScalarJet::constant(n.value);
    case Node::Kind::Variable: return x;
    case Node::Kind::Neg: return -evaluate(*n.lhs, x);
    case Node::Kind::Add: return evaluate(*n.lhs, x) + evaluate(*n.rhs, x);
    case Node::Kind::Sub: return evaluate(*n.lhs, x) - evaluate(*n.rhs, x);
    case Node::Kind::Mul: return evaluate(*n.lhs, x) * evaluate(*n.rhs, x);
    case Node::Kind::Div: return evaluate(*n.lhs, x) / evaluate(*n.rhs, x);
    case Node::Kind::Pow:
      if (n.rhs->constant) return pow(evaluate(*n.lhs, x), evaluate(*n.rhs, x).value);
      return pow(evaluate(*n.lhs, x), evaluate(*n.rhs, x));
    case Node::Kind::Call: return apply_func(n.func, evaluate(*n.lhs, x));
  }
  return x;
}

}  // namespace

std::shared_ptr<const Expression> Expression::parse(std::string_view text) {
  Parser parser(text);
  NodePtr root = parser.parse();
  return std::shared_ptr<const Expression>(new Expression(std::string(text), std::move(root)));
}

ScalarJet Expression::jet(double t) const {
  try {
    return evaluate(*root_, ScalarJet::variable(t));
  } catch (const DomainError& e) {
    throw DomainError(text_ + ": " + e.reason(), t);
  }
}

ScalarJet Expression::apply(const ScalarJet& x) const { return evaluate(*root_, x); }

bool Expression::is_constant() const { return root_->constant; }

}  // namespace meridian
