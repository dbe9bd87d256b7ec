#pragma once

// Expression DSL for surface components, curve coordinates and dilation
// factors.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | name | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// Names resolve to a declared variable first, then to the constants `pi`
// and `e`. Functions: sin cos tan sinh cosh tanh exp log sqrt atan (one
// argument) and atan2 (two arguments).

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/jet.hpp"

namespace darboux::expr {

enum class Func { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt, Atan, Atan2 };

std::string_view function_name(Func f);
std::size_t function_arity(Func f);

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
  double value;
};
struct Constant {
  std::string name;
  double value;
};
struct Variable {
  std::string name;
  std::size_t slot;  // index into the declared variable list
};
struct Negate {
  NodePtr operand;
};
struct Binary {
  char op;  // one of + - * / ^
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  Func fn;
  std::vector<NodePtr> args;
};

struct Node {
  std::variant<Number, Constant, Variable, Negate, Binary, Call> kind;
  SourceSpan span;
};

bool structurally_equal(const Node& a, const Node& b);

/// Immutable parsed expression; copies share the tree.
class Expr {
 public:
  static Expr parse(std::string_view text, std::vector<std::string> variables);

  const std::string& source() const noexcept { return source_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const Node& root() const noexcept { return *root_; }

  /// Fully parenthesised rendering; re-parses to a structurally equal tree.
  std::string to_string() const;

  /// Evaluate with one jet per declared variable, in declaration order.
  template <JetLike J>
  J eval(std::span<const J> values) const;

  /// Plain value evaluation; variables bound in declaration order.
  double value(std::span<const double> values) const;

 private:
  Expr(std::string source, std::vector<std::string> variables, NodePtr root)
      : source_(std::move(source)), variables_(std::move(variables)), root_(std::move(root)) {}

  std::string source_;
  std::vector<std::string> variables_;
  NodePtr root_;
};

namespace detail {

template <JetLike J>
J apply(Func fn, std::span<const J> args) {
  switch (fn) {
    case Func::Sin: return sin(args[0]);
    case Func::Cos: return cos(args[0]);
    case Func::Tan: return tan(args[0]);
    case Func::Sinh: return sinh(args[0]);
    case Func::Cosh: return cosh(args[0]);
    case Func::Tanh: return tanh(args[0]);
    case Func::Exp: return exp(args[0]);
    case Func::Log: return log(args[0]);
    case Func::Sqrt: return sqrt(args[0]);
    case Func::Atan: return atan(args[0]);
    case Func::Atan2: return atan2(args[0], args[1]);
  }
  return J(0.0);
}

template <JetLike J>
J eval_node(const Node& node, std::span<const J> values, int order) {
  struct Visitor {
    std::span<const J> values;
    int order;
    const Node& node;

    J operator()(const Number& n) const { return J(n.value, order); }
    J operator()(const Constant& c) const { return J(c.value, order); }
    J operator()(const Variable& v) const { return values[v.slot]; }
    J operator()(const Negate& n) const { return -eval_node(*n.operand, values, order); }
    J operator()(const Binary& b) const {
      const J lhs = eval_node(*b.lhs, values, order);
      const J rhs = eval_node(*b.rhs, values, order);
      try {
        switch (b.op) {
          case '+': return lhs + rhs;
          case '-': return lhs - rhs;
          case '*': return lhs * rhs;
          case '/': return lhs / rhs;
          default: return pow(lhs, rhs);
        }
      } catch (const JetDomainError& e) {
        throw EvalError(e.what(), node.span);
      }
    }
    J operator()(const Call& c) const {
      std::vector<J> args;
      args.reserve(c.args.size());
      for (const auto& a : c.args) args.push_back(eval_node(*a, values, order));
      try {
        return apply<J>(c.fn, std::span<const J>(args));
      } catch (const JetDomainError& e) {
        throw EvalError(e.what(), node.span);
      }
    }
  };
  return std::visit(Visitor{values, order, node}, node.kind);
}

}  // namespace detail

template <JetLike J>
J Expr::eval(std::span<const J> values) const {
  if (values.size() != variables_.size())
    throw Error("expression '" + source_ + "' expects " + std::to_string(variables_.size()) +
                " bound variables, got " + std::to_string(values.size()));
  int order = J().order();
  for (const J& v : values) order = std::min(order, v.order());
  try {
    return detail::eval_node(*root_, values, order);
  } catch (const EvalError& e) {
    const auto span = e.span();
    const auto end = std::min(span.end, source_.size());
    const auto begin = std::min(span.begin, end);
    throw EvalError(std::string(e.what()) + " in '" + source_.substr(begin, end - begin) +
                        "' (columns " + std::to_string(span.begin) + "-" +
                        std::to_string(span.end) + " of '" + source_ + "')",
                    span);
  }
}

}  // namespace darboux::expr
