#include "sl2sym/expr.hpp"

#include <cctype>

namespace sl2sym {

namespace {

bool equal_ptr(const ExprPtr& a, const ExprPtr& b) { return a && b ? *a == *b : a == b; }

struct NodeEqual {
  bool operator()(const Expr::Literal& a, const Expr::Literal& b) const { return a.value == b.value; }
  bool operator()(const Expr::Atom& a, const Expr::Atom& b) const {
    return a.kind == b.kind && a.indices == b.indices;
  }
  bool operator()(const Expr::Negate& a, const Expr::Negate& b) const { return equal_ptr(a.operand, b.operand); }
  bool operator()(const Expr::Binary& a, const Expr::Binary& b) const {
    return a.op == b.op && equal_ptr(a.lhs, b.lhs) && equal_ptr(a.rhs, b.rhs);
  }
  bool operator()(const Expr::Power& a, const Expr::Power& b) const {
    return a.exponent == b.exponent && equal_ptr(a.base, b.base);
  }
  template <typename A, typename B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

}  // namespace

bool operator==(const Expr& a, const Expr& b) { return std::visit(NodeEqual{}, a.node, b.node); }

ExprPtr make_literal(Rational value) { return std::make_shared<const Expr>(Expr{Expr::Literal{std::move(value)}}); }
ExprPtr make_atom(AtomKind kind, std::vector<int> indices) {
  return std::make_shared<const Expr>(Expr{Expr::Atom{kind, std::move(indices)}});
}
ExprPtr make_negate(ExprPtr operand) { return std::make_shared<const Expr>(Expr{Expr::Negate{std::move(operand)}}); }
ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Expr::Binary{op, std::move(lhs), std::move(rhs)}});
}
ExprPtr make_power(ExprPtr base, unsigned exponent) {
  return std::make_shared<const Expr>(Expr{Expr::Power{std::move(base), exponent}});
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : InvalidInput("syntax error at position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("expected operator or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_ + 1, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected natural number");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_nat() {
    const std::size_t start = pos_;
    const std::string s = digits();
    if (s.size() > 6) {
      pos_ = start;
      skip_space();
      fail("number too large");
    }
    return std::stoi(s);
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_binary('+', lhs, term());
      } else if (accept('-')) {
        lhs = make_binary('-', lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (accept('*')) lhs = make_binary('*', lhs, factor());
    return lhs;
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (accept('^')) return make_power(b, static_cast<unsigned>(small_nat()));
    return b;
  }

  ExprPtr base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return make_negate(factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (c == 's' || c == 'p' || c == 'e' || c == 'h' || c == 'y') return atom();
    if (c == '\0') fail("unexpected end of input; expected number, atom, '(' or '-'");
    fail(std::string("unexpected character '") + c + "'; expected number, atom, '(' or '-'");
  }

  ExprPtr rational() {
    const BigInt num(digits());
    BigInt den = 1;
    if (accept('/')) {
      const std::size_t at = pos_;
      den = BigInt(digits());
      if (den == 0) {
        pos_ = at;
        skip_space();
        fail("zero denominator");
      }
    }
    return make_literal(make_rational(num, den));
  }

  ExprPtr atom() {
    const char letter = text_[pos_++];
    const std::size_t atomStart = pos_;
    expect('[');
    std::vector<int> indices;
    if (!(letter == 's' || letter == 'y') || peek() != ']') {
      indices.push_back(small_nat());
      while (accept(',')) indices.push_back(small_nat());
    }
    expect(']');
    switch (letter) {
      case 's':
      case 'y':
        for (std::size_t k = 0; k < indices.size(); ++k) {
          if (indices[k] == 0) throw ParseError(atomStart, "partition parts must be positive");
          if (k > 0 && indices[k] > indices[k - 1]) throw ParseError(atomStart, "partition not weakly decreasing");
        }
        return make_atom(letter == 's' ? AtomKind::schur : AtomKind::diagram, std::move(indices));
      default:
        if (indices.size() != 1) throw ParseError(atomStart, std::string(1, letter) + "[k] takes exactly one index");
        return make_atom(letter == 'p'   ? AtomKind::power_sum
                         : letter == 'e' ? AtomKind::elementary
                                         : AtomKind::homogeneous,
                         std::move(indices));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

char atom_letter(AtomKind k) {
  switch (k) {
    case AtomKind::schur: return 's';
    case AtomKind::power_sum: return 'p';
    case AtomKind::elementary: return 'e';
    case AtomKind::homogeneous: return 'h';
    case AtomKind::diagram: return 'y';
  }
  return '?';
}

struct Printer {
  std::string operator()(const Expr::Literal& l) const { return to_short_string(l.value); }
  std::string operator()(const Expr::Atom& a) const {
    std::string s(1, atom_letter(a.kind));
    s += "[";
    for (std::size_t k = 0; k < a.indices.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(a.indices[k]);
    }
    return s + "]";
  }
  std::string operator()(const Expr::Negate& n) const { return "(-" + print(*n.operand) + ")"; }
  std::string operator()(const Expr::Binary& b) const {
    return "(" + print(*b.lhs) + " " + b.op + " " + print(*b.rhs) + ")";
  }
  std::string operator()(const Expr::Power& p) const {
    return "(" + print(*p.base) + "^" + std::to_string(p.exponent) + ")";
  }
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) { return std::visit(Printer{}, e.node); }

Rational parse_rational(std::string_view text) {
  ExprPtr e = parse(text);
  bool negative = false;
  if (const auto* n = std::get_if<Expr::Negate>(&e->node)) {
    negative = true;
    e = n->operand;
  }
  const auto* lit = std::get_if<Expr::Literal>(&e->node);
  if (!lit) throw InvalidInput("expected a rational number, got '" + std::string(text) + "'");
  return negative ? Rational(-lit->value) : lit->value;
}

namespace {

std::vector<int> one_column(int k) { return std::vector<int>(static_cast<std::size_t>(k), 1); }

struct SchurEvaluator {
  int n;

  SchurVector operator()(const Expr::Literal& l) const { return SchurVector::unit(n) * l.value; }
  SchurVector operator()(const Expr::Atom& a) const {
    switch (a.kind) {
      case AtomKind::schur: return SchurVector::basis(Partition(a.indices), n);
      case AtomKind::power_sum: return power_sum_schur(a.indices[0], n);
      case AtomKind::elementary: return elementary_schur(a.indices[0], n);
      case AtomKind::homogeneous: return homogeneous_schur(a.indices[0], n);
      case AtomKind::diagram: throw InvalidInput("y-atoms are only valid in diagram mode");
    }
    throw InternalError("unknown atom");
  }
  SchurVector operator()(const Expr::Negate& e) const { return -evaluate_schur(*e.operand, n); }
  SchurVector operator()(const Expr::Binary& b) const {
    SchurVector lhs = evaluate_schur(*b.lhs, n);
    SchurVector rhs = evaluate_schur(*b.rhs, n);
    if (b.op == '+') return lhs + rhs;
    if (b.op == '-') return lhs - rhs;
    return multiply(lhs, rhs);
  }
  SchurVector operator()(const Expr::Power& p) const { return pow(evaluate_schur(*p.base, n), p.exponent); }
};

struct DiagramEvaluator {
  std::optional<int> rowBound;

  DiagramVector operator()(const Expr::Literal& l) const {
    return DiagramVector::diagram(Partition{}, rowBound) * l.value;
  }
  DiagramVector operator()(const Expr::Atom& a) const {
    switch (a.kind) {
      case AtomKind::schur:
      case AtomKind::diagram: return DiagramVector::diagram(Partition(a.indices), rowBound);
      case AtomKind::power_sum: {
        const int k = a.indices[0];
        if (rowBound) return pi_k(k, *rowBound);
        DiagramVector out;
        const DiagramVector hooks = pi_k(k, std::max(k, 1));
        for (const auto& [l, c] : hooks.terms()) out.add_term(l, c);
        return out;
      }
      case AtomKind::elementary:
        if (rowBound && a.indices[0] > *rowBound) throw InvalidInput("e_i requires 0 <= i <= n");
        return DiagramVector::diagram(Partition(one_column(a.indices[0])), rowBound);
      case AtomKind::homogeneous: return DiagramVector::diagram(Partition({a.indices[0]}), rowBound);
    }
    throw InternalError("unknown atom");
  }
  DiagramVector operator()(const Expr::Negate& e) const { return -evaluate_diagram(*e.operand, rowBound); }
  DiagramVector operator()(const Expr::Binary& b) const {
    DiagramVector lhs = evaluate_diagram(*b.lhs, rowBound);
    DiagramVector rhs = evaluate_diagram(*b.rhs, rowBound);
    if (b.op == '+') return lhs + rhs;
    if (b.op == '-') return lhs - rhs;
    return diagram_multiply(lhs, rhs);
  }
  DiagramVector operator()(const Expr::Power& p) const {
    DiagramVector base = evaluate_diagram(*p.base, rowBound);
    DiagramVector result = DiagramVector::diagram(Partition{}, rowBound);
    for (unsigned k = 0; k < p.exponent; ++k) result = diagram_multiply(result, base);
    return result;
  }
};

}  // namespace

SchurVector evaluate_schur(const Expr& e, int n) { return std::visit(SchurEvaluator{n}, e.node); }

DiagramVector evaluate_diagram(const Expr& e, std::optional<int> rowBound) {
  return std::visit(DiagramEvaluator{rowBound}, e.node);
}

}  // namespace sl2sym
