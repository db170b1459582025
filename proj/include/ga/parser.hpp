#pragma once

// Expression front end: tokenizer, recursive-descent parser and evaluator
// for multivector expressions like "exp(0.5*e12)" or "2+4e1-5e2-e12".
// Every failure is a ga::error carrying a character offset into the source.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ga/core.hpp"
#include "ga/functions.hpp"

namespace ga {

enum class TokenKind {
  number,
  basis,  // e1, e2, e12
  ident,
  plus,
  minus,
  star,
  slash,
  caret,
  lparen,
  rparen,
  comma,
  end,
};

struct Token {
  TokenKind kind;
  std::size_t pos;
  std::string text;
  double value = 0.0;  // number tokens
  int basis = 0;       // 1, 2 or 12 for basis tokens
};

// A number's exponent is consumed only when explicitly signed ("1e-07",
// "1e+21"), so "4e1" lexes as the number 4 followed by the basis e1.
std::vector<Token> tokenize(std::string_view src);

struct Expr {
  enum class Kind { number, basis, neg, add, sub, mul, div, pow, call };

  Kind kind;
  std::size_t pos;
  double value = 0.0;   // number
  int basis = 0;        // basis
  long ipow = 0;        // pow: non-negative integer exponent
  std::string fn;       // call
  std::unique_ptr<Expr> lhs, rhs;
};

using ExprPtr = std::unique_ptr<Expr>;

// Grammar (precedence loose to tight): + - | * / and number-basis
// juxtaposition | unary - | ^ with an integer literal exponent | atoms.
// Callable names are checked here; see docs/grammar.md for the EBNF.
ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse_expression(std::string_view src);

// Evaluation result: arithmetic yields a plain multivector; a top-level
// log(...) or sqrt(...) keeps its structured result. Structured values
// consumed by further arithmetic collapse to the principal branch / first
// isolated root, recorded in notes.
using EvalValue = std::variant<Multivector, LogResult, SqrtResult>;

struct EvalOutcome {
  EvalValue value;
  std::vector<std::string> notes;
};

EvalOutcome eval_ast(const Expr& e, const Signature& sig);

}  // namespace ga
