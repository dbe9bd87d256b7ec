#include "darboux/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <system_error>

namespace darboux::expr {
namespace {

constexpr std::size_t kMaxDepth = 200;

struct FunctionInfo {
  std::string_view name;
  Func fn;
  std::size_t arity;
};

constexpr std::array<FunctionInfo, 11> kFunctions{{
    {"sin", Func::Sin, 1},
    {"cos", Func::Cos, 1},
    {"tan", Func::Tan, 1},
    {"sinh", Func::Sinh, 1},
    {"cosh", Func::Cosh, 1},
    {"tanh", Func::Tanh, 1},
    {"exp", Func::Exp, 1},
    {"log", Func::Log, 1},
    {"sqrt", Func::Sqrt, 1},
    {"atan", Func::Atan, 1},
    {"atan2", Func::Atan2, 2},
}};

std::optional<FunctionInfo> lookup_function(std::string_view name) {
  for (const auto& f : kFunctions)
    if (f.name == name) return f;
  return std::nullopt;
}

std::optional<double> lookup_constant(std::string_view name) {
  if (name == "pi") return std::numbers::pi;
  if (name == "e") return std::numbers::e;
  return std::nullopt;
}

enum class Tok { End, Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma };

struct Token {
  Tok kind = Tok::End;
  std::size_t begin = 0;
  std::size_t end = 0;
  double number = 0.0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Token t;
    t.begin = pos_;
    if (pos_ >= text_.size()) {
      t.end = pos_;
      return t;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(t);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      t.kind = Tok::Name;
      t.end = pos_;
      return t;
    }
    ++pos_;
    t.end = pos_;
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ',': t.kind = Tok::Comma; break;
      default: throw ParseError("unexpected character '" + printable(c) + "'", t.begin);
    }
    return t;
  }

 private:
  static std::string printable(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) return std::string(1, c);
    static constexpr char kHex[] = "0123456789abcdef";
    const auto b = static_cast<unsigned char>(c);
    return std::string("\\x") + kHex[b >> 4] + kHex[b & 0xf];
  }

  bool digit_at(std::size_t i) const {
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }

  Token number(Token t) {
    std::size_t i = pos_;
    bool digits = false;
    while (digit_at(i)) ++i, digits = true;
    if (i < text_.size() && text_[i] == '.') {
      ++i;
      while (digit_at(i)) ++i, digits = true;
    }
    if (!digits) throw ParseError("malformed number", t.begin);
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      // `2e` followed by a non-digit is the number 2 times the constant e.
      if (digit_at(j)) {
        i = j;
        while (digit_at(i)) ++i;
      }
    }
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + i, value);
    if (ec == std::errc::result_out_of_range || (ec == std::errc() && !std::isfinite(value)))
      throw ParseError("number out of range", t.begin);
    if (ec != std::errc() || ptr != text_.data() + i) throw ParseError("malformed number", t.begin);
    pos_ = i;
    t.kind = Tok::Number;
    t.end = i;
    t.number = value;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables)
      : text_(text), variables_(variables), lexer_(text) {
    advance();
  }

  NodePtr parse() {
    NodePtr root = expression();
    if (cur_.kind != Tok::End) throw ParseError("unexpected trailing input", cur_.begin);
    return root;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) throw ParseError(std::string("expected ") + what, cur_.begin);
    advance();
  }

  static NodePtr make(Node node) { return std::make_shared<const Node>(std::move(node)); }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) throw ParseError("expression nested too deeply", p.cur_.begin);
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  NodePtr expression() {
    DepthGuard guard(*this);
    NodePtr lhs = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const char op = cur_.kind == Tok::Plus ? '+' : '-';
      advance();
      NodePtr rhs = term();
      lhs = binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const char op = cur_.kind == Tok::Star ? '*' : '/';
      advance();
      NodePtr rhs = unary();
      lhs = binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr unary() {
    DepthGuard guard(*this);
    if (cur_.kind == Tok::Minus) {
      const std::size_t begin = cur_.begin;
      advance();
      NodePtr operand = unary();
      const std::size_t end = operand->span.end;
      return make(Node{Negate{std::move(operand)}, {begin, end}});
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (cur_.kind == Tok::Caret) {
      advance();
      NodePtr exponent = unary();
      return binary('^', std::move(base), std::move(exponent));
    }
    return base;
  }

  NodePtr primary() {
    const Token tok = cur_;
    switch (tok.kind) {
      case Tok::Number:
        advance();
        return make(Node{Number{tok.number}, {tok.begin, tok.end}});
      case Tok::LParen: {
        advance();
        NodePtr inner = expression();
        const std::size_t close = cur_.end;
        expect(Tok::RParen, "')'");
        // Widen the span over the parentheses so error excerpts stay balanced.
        return make(Node{inner->kind, {tok.begin, close}});
      }
      case Tok::Name: return name(tok);
      case Tok::End: throw ParseError("unexpected end of input", tok.begin);
      default: throw ParseError("unexpected token", tok.begin);
    }
  }

  NodePtr name(const Token& tok) {
    const std::string ident(text_.substr(tok.begin, tok.end - tok.begin));
    advance();
    if (cur_.kind == Tok::LParen) {
      const auto info = lookup_function(ident);
      if (!info) throw ParseError("unknown function '" + ident + "'", tok.begin);
      advance();
      std::vector<NodePtr> args;
      args.push_back(expression());
      while (cur_.kind == Tok::Comma) {
        advance();
        args.push_back(expression());
      }
      const std::size_t close = cur_.end;
      expect(Tok::RParen, "')' or ','");
      if (args.size() != info->arity)
        throw ParseError("function '" + ident + "' takes " + std::to_string(info->arity) +
                             " argument(s), got " + std::to_string(args.size()),
                         tok.begin);
      return make(Node{Call{info->fn, std::move(args)}, {tok.begin, close}});
    }
    const auto var = std::find(variables_.begin(), variables_.end(), ident);
    if (var != variables_.end())
      return make(Node{Variable{ident, static_cast<std::size_t>(var - variables_.begin())},
                       {tok.begin, tok.end}});
    if (const auto c = lookup_constant(ident))
      return make(Node{Constant{ident, *c}, {tok.begin, tok.end}});
    if (lookup_function(ident))
      throw ParseError("function '" + ident + "' used without arguments", tok.begin);
    std::string allowed;
    for (const auto& v : variables_) allowed += (allowed.empty() ? "" : ", ") + v;
    throw ParseError("unknown identifier '" + ident + "' (allowed variables: {" + allowed + "})",
                     tok.begin);
  }

  static NodePtr binary(char op, NodePtr lhs, NodePtr rhs) {
    const SourceSpan span{lhs->span.begin, rhs->span.end};
    return make(Node{Binary{op, std::move(lhs), std::move(rhs)}, span});
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  Lexer lexer_;
  Token cur_;
  std::size_t depth_ = 0;
};

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

void print(const Node& node, std::string& out) {
  std::visit(
      [&out](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          out += format_number(n.value);
        } else if constexpr (std::is_same_v<T, Constant>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Variable>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          out += "(-";
          print(*n.operand, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, Binary>) {
          out += '(';
          print(*n.lhs, out);
          out += ' ';
          out += n.op;
          out += ' ';
          print(*n.rhs, out);
          out += ')';
        } else {
          out += function_name(n.fn);
          out += '(';
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) out += ", ";
            print(*n.args[i], out);
          }
          out += ')';
        }
      },
      node.kind);
}

}  // namespace

std::string_view function_name(Func f) {
  for (const auto& info : kFunctions)
    if (info.fn == f) return info.name;
  return "?";
}

std::size_t function_arity(Func f) {
  for (const auto& info : kFunctions)
    if (info.fn == f) return info.arity;
  return 0;
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind.index() != b.kind.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.kind);
        if constexpr (std::is_same_v<T, Number>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Constant>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Variable>) {
          return x.name == y.name && x.slot == y.slot;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return structurally_equal(*x.operand, *y.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) &&
                 structurally_equal(*x.rhs, *y.rhs);
        } else {
          if (x.fn != y.fn || x.args.size() != y.args.size()) return false;
          for (std::size_t i = 0; i < x.args.size(); ++i)
            if (!structurally_equal(*x.args[i], *y.args[i])) return false;
          return true;
        }
      },
      a.kind);
}

Expr Expr::parse(std::string_view text, std::vector<std::string> variables) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw ParseError("empty expression", 0);
  Parser parser(text, variables);
  NodePtr root = parser.parse();
  return Expr(std::string(text), std::move(variables), std::move(root));
}

std::string Expr::to_string() const {
  std::string out;
  print(*root_, out);
  return out;
}

double Expr::value(std::span<const double> values) const {
  std::vector<Jet1> jets;
  jets.reserve(values.size());
  for (double v : values) jets.emplace_back(v, 1);
  return eval<Jet1>(std::span<const Jet1>(jets)).value();
}

}  // namespace darboux::expr
