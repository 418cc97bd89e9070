#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sl2sym/errors.hpp"
#include "sl2sym/rational.hpp"
#include "sl2sym/symfunc.hpp"
#include "sl2sym/young.hpp"

namespace sl2sym {

/// Basis atoms of the input language: s[λ], p[k], e[k], h[k], y[λ].
enum class AtomKind { schur, power_sum, elementary, homogeneous, diagram };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Abstract syntax for inputs such as "3*p[2] - p[1]^2".
struct Expr {
  struct Literal {
    Rational value;  // nonnegative; signs are Negate nodes
  };
  struct Atom {
    AtomKind kind;
    std::vector<int> indices;  // the partition for s/y, a single index for p/e/h
  };
  struct Negate {
    ExprPtr operand;
  };
  struct Binary {
    char op;  // '+', '-', '*'
    ExprPtr lhs;
    ExprPtr rhs;
  };
  struct Power {
    ExprPtr base;
    unsigned exponent;
  };

  std::variant<Literal, Atom, Negate, Binary, Power> node;
};

bool operator==(const Expr& a, const Expr& b);

ExprPtr make_literal(Rational value);
ExprPtr make_atom(AtomKind kind, std::vector<int> indices);
ExprPtr make_negate(ExprPtr operand);
ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_power(ExprPtr base, unsigned exponent);

/// Syntax error carrying the 1-based character position.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | atom | '(' expr ')' | '-' factor
///   atom   := ('s'|'p'|'e'|'h'|'y') '[' nat (',' nat)* ']' | ('s'|'y') '[' ']'
///   rational := int ('/' nat)?
/// Whitespace is ignored.
ExprPtr parse(std::string_view text);

/// Prints an expression so that parse(print(e)) == e; every compound
/// subexpression is parenthesized.
std::string print(const Expr& e);

enum class EvalMode { schur, diagram };

/// Evaluates in Λₙ. y-atoms are rejected.
SchurVector evaluate_schur(const Expr& e, int n);
/// Evaluates in ℚ𝒴ₙ (rowBound = n) or ℚ𝒴 (nullopt). s-atoms and y-atoms both
/// denote diagrams; p/e/h use their transported expansions.
DiagramVector evaluate_diagram(const Expr& e, std::optional<int> rowBound);

/// Parses "3", "-2/5".
Rational parse_rational(std::string_view text);

}  // namespace sl2sym
