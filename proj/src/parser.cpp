#include "hbarkit/parser.hpp"

#include <algorithm>
#include <cctype>

namespace hbarkit {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

namespace {

enum class Tok { ident, integer, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::integer, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '/': kind = Tok::slash; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default: throw ParseError(i, "unexpected character");
    }
    out.push_back({kind, i, std::string(1, static_cast<char>(c))});
    ++i;
  }
  out.push_back({Tok::end, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  ExprAst parse() {
    ExprAst e = expr();
    if (peek().kind != Tok::end) throw ParseError(peek().offset, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  ExprAst expr() {
    ExprAst lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = next();
      ExprAst node;
      node.kind = op.kind == Tok::plus ? ExprAst::Kind::sum : ExprAst::Kind::difference;
      node.offset = op.offset;
      node.children.push_back(std::move(lhs));
      node.children.push_back(term());
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprAst term() {
    ExprAst lhs = factor();
    while (peek().kind == Tok::star) {
      const Token& op = next();
      ExprAst node;
      node.kind = ExprAst::Kind::product;
      node.offset = op.offset;
      node.children.push_back(std::move(lhs));
      node.children.push_back(factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprAst factor() {
    if (peek().kind == Tok::minus) {
      if (++depth_ > kMaxDepth) throw ParseError(peek().offset, "nesting too deep");
      ExprAst node;
      node.kind = ExprAst::Kind::negate;
      node.offset = next().offset;
      node.children.push_back(factor());
      --depth_;
      return node;
    }
    ExprAst b = base();
    if (peek().kind != Tok::caret) return b;
    const Token& caret = next();
    const Token& e = peek();
    if (e.kind == Tok::minus) throw ParseError(e.offset, "negative exponent");
    if (e.kind != Tok::integer) throw ParseError(e.offset, "expected a non-negative integer exponent");
    next();
    if (e.text.size() > 4 || std::stoul(e.text) > kMaxExponent)
      throw ParseError(e.offset, "exponent larger than " + std::to_string(kMaxExponent));
    ExprAst node;
    node.kind = ExprAst::Kind::power;
    node.offset = caret.offset;
    node.exponent = static_cast<unsigned>(std::stoul(e.text));
    node.children.push_back(std::move(b));
    return node;
  }

  ExprAst base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::ident: {
        next();
        ExprAst node;
        node.kind = ExprAst::Kind::identifier;
        node.offset = t.offset;
        node.name = t.text;
        return node;
      }
      case Tok::integer: {
        next();
        ExprAst node;
        node.kind = ExprAst::Kind::rational;
        node.offset = t.offset;
        std::string text = t.text;
        if (peek().kind == Tok::slash) {
          next();
          const Token& d = peek();
          if (d.kind != Tok::integer) throw ParseError(d.offset, "expected a denominator");
          next();
          if (std::all_of(d.text.begin(), d.text.end(), [](char ch) { return ch == '0'; }))
            throw ParseError(d.offset, "zero denominator");
          text += "/" + d.text;
        }
        node.value = parse_rational(text);
        return node;
      }
      case Tok::lparen: {
        if (++depth_ > kMaxDepth) throw ParseError(t.offset, "nesting too deep");
        next();
        ExprAst inner = expr();
        --depth_;
        if (peek().kind != Tok::rparen) throw ParseError(peek().offset, "expected ')'");
        next();
        return inner;
      }
      case Tok::end:
        throw ParseError(t.offset, "unexpected end of input");
      default:
        throw ParseError(t.offset, "unexpected '" + t.text + "'");
    }
  }

  static constexpr int kMaxDepth = 200;

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// Folds an AST over an algebra given leaf evaluation and a product.
template <typename T, typename Leaf, typename Mul, typename One>
T fold(const ExprAst& e, const Leaf& leaf, const Mul& mul, const One& one) {
  switch (e.kind) {
    case ExprAst::Kind::sum:
      return fold<T>(e.children[0], leaf, mul, one) + fold<T>(e.children[1], leaf, mul, one);
    case ExprAst::Kind::difference:
      return fold<T>(e.children[0], leaf, mul, one) - fold<T>(e.children[1], leaf, mul, one);
    case ExprAst::Kind::product:
      return mul(fold<T>(e.children[0], leaf, mul, one), fold<T>(e.children[1], leaf, mul, one));
    case ExprAst::Kind::negate:
      return -fold<T>(e.children[0], leaf, mul, one);
    case ExprAst::Kind::power: {
      const T b = fold<T>(e.children[0], leaf, mul, one);
      T out = one();
      for (unsigned i = 0; i < e.exponent; ++i) out = mul(out, b);
      return out;
    }
    case ExprAst::Kind::identifier:
    case ExprAst::Kind::rational:
      return leaf(e);
  }
  return one();
}

}  // namespace

ExprAst parse_expr(std::string_view text) {
  constexpr std::size_t kMaxLength = 20000;
  if (text.size() > kMaxLength) throw ParseError(kMaxLength, "input too long");
  return Parser(text).parse();
}

QOperator evaluate_operator(const ExprAst& ast) {
  auto leaf = [](const ExprAst& e) -> QOperator {
    if (e.kind == ExprAst::Kind::rational) return QOperator(HbarScalar(e.value));
    if (e.name == "a") return QOperator::a();
    if (e.name == "ad") return QOperator::ad();
    if (e.name == "h") return QOperator(HbarScalar::hbar());
    throw ParseError(e.offset, "unknown identifier '" + e.name + "'");
  };
  return fold<QOperator>(ast, leaf, normal_order_product, [] { return QOperator(HbarScalar(1)); });
}

QOperator parse_operator_expr(std::string_view text) { return evaluate_operator(parse_expr(text)); }

MultiPoly evaluate_commutative(const ExprAst& ast, const std::vector<std::string>& variables) {
  auto leaf = [&](const ExprAst& e) -> MultiPoly {
    if (e.kind == ExprAst::Kind::rational) return MultiPoly::constant(variables, e.value);
    if (std::find(variables.begin(), variables.end(), e.name) == variables.end())
      throw ParseError(e.offset, "unknown identifier '" + e.name + "'");
    return MultiPoly::variable(variables, e.name);
  };
  auto mul = [](const MultiPoly& x, const MultiPoly& y) { return x * y; };
  return fold<MultiPoly>(ast, leaf, mul, [&] { return MultiPoly::constant(variables, 1); });
}

MultiPoly parse_commutative_poly(std::string_view text, const std::vector<std::string>& variables) {
  return evaluate_commutative(parse_expr(text), variables);
}

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace hbarkit
