#include <cmath>
#include <string>
#include <variant>

#include "doctest.h"
#include "ga/core.hpp"
#include "ga/functions.hpp"
#include "ga/parser.hpp"

using namespace ga;

namespace {

EvalOutcome eval_str(std::string_view src, const Signature& sig) {
  const ExprPtr ast = parse_expression(src);
  return eval_ast(*ast, sig);
}

Multivector eval_mv(std::string_view src, const Signature& sig) {
  return std::get<Multivector>(eval_str(src, sig).value);
}

errc thrown_code(std::string_view src, const Signature& sig = cl20) {
  try {
    (void)eval_str(src, sig);
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected ga::error from " << std::string(src));
  return errc::parse_error;
}

}  // namespace

TEST_CASE("numbers with signed exponents lex as one token") {
  const std::vector<Token> t = tokenize("1e-07");
  REQUIRE(t.size() == 2);  // number + end
  CHECK(t[0].kind == TokenKind::number);
  CHECK(t[0].value == doctest::Approx(1e-7));
  CHECK(t.back().kind == TokenKind::end);

  const std::vector<Token> u = tokenize("2E+3");
  REQUIRE(u.size() == 2);
  CHECK(u[0].value == doctest::Approx(2000.0));
}

TEST_CASE("an unsigned exponent-looking suffix is a basis element") {
  const std::vector<Token> t = tokenize("4e1");
  REQUIRE(t.size() == 3);
  CHECK(t[0].kind == TokenKind::number);
  CHECK(t[0].value == 4.0);
  CHECK(t[1].kind == TokenKind::basis);
  CHECK(t[1].basis == 1);

  const std::vector<Token> u = tokenize("3e12");
  REQUIRE(u.size() == 3);
  CHECK(u[1].basis == 12);
}

TEST_CASE("tokenizer reports the offending character") {
  try {
    (void)tokenize("2 @ 3");
    FAIL("expected a lex error");
  } catch (const error& e) {
    CHECK(e.code() == errc::lex_error);
    CHECK(e.position() == 2);
  }
}

TEST_CASE("multivector literals combine by juxtaposition") {
  CHECK(max_abs_diff(eval_mv("2+4e1-5e2-e12", cl11), mv(cl11, 2, 4, -5, -1)) ==
        0.0);
  CHECK(max_abs_diff(eval_mv("0.5*e1", cl20), mv(cl20, 0, 0.5, 0, 0)) == 0.0);
  CHECK(max_abs_diff(eval_mv(" 2 + 3 * e12 ", cl20), mv(cl20, 2, 0, 0, 3)) ==
        0.0);
}

TEST_CASE("product precedence binds tighter than sums") {
  CHECK(max_abs_diff(eval_mv("2+3*e1", cl10), mv(cl10, 2, 3)) == 0.0);
  CHECK(max_abs_diff(eval_mv("(2+e1)*(2-e1)", cl10), scalar_mv(cl10, 3.0)) <=
        1e-15);
}

TEST_CASE("power applies to the signed factor and needs an integer literal") {
  CHECK(eval_mv("-2^2", cl20).a0 == 4.0);
  CHECK(max_abs_diff(eval_mv("4e1^2", cl10), scalar_mv(cl10, 4.0)) == 0.0);
  CHECK(max_abs_diff(eval_mv("4e1^2", cl02), scalar_mv(cl02, -4.0)) == 0.0);
  CHECK(eval_mv("2^10", cl20).a0 == 1024.0);
  CHECK(eval_mv("2^0", cl20).a0 == 1.0);
  CHECK(thrown_code("2^-1") == errc::parse_error);
  CHECK(thrown_code("2^e1") == errc::parse_error);
}

TEST_CASE("unary minus nests and unary plus does not exist") {
  CHECK(eval_mv("-(-3)", cl20).a0 == 3.0);
  CHECK(thrown_code("+3") == errc::parse_error);
  CHECK(thrown_code("2++3") == errc::parse_error);
}

TEST_CASE("division uses the clifford inverse") {
  CHECK(max_abs_diff(eval_mv("6/2", cl20), scalar_mv(cl20, 3.0)) == 0.0);
  CHECK(max_abs_diff(eval_mv("1/(2+e1)", cl10),
                     mv(cl10, 2.0 / 3.0, -1.0 / 3.0)) <= 1e-15);
  CHECK(thrown_code("1/(1+e1)", cl10) == errc::singular_division);
  CHECK(thrown_code("1/0") == errc::singular_division);
}

TEST_CASE("involution and norm callables evaluate") {
  CHECK(max_abs_diff(eval_mv("rev(2+3e12)", cl20), mv(cl20, 2, 0, 0, -3)) ==
        0.0);
  CHECK(max_abs_diff(eval_mv("gradeinv(1+2e1+3e12)", cl20),
                     mv(cl20, 1, -2, 0, 3)) == 0.0);
  CHECK(max_abs_diff(eval_mv("conj(1+2e1+3e12)", cl20),
                     mv(cl20, 1, -2, 0, -3)) == 0.0);
  CHECK(max_abs_diff(eval_mv("inv(2+e1)*(2+e1)", cl10), scalar_mv(cl10, 1.0)) <=
        1e-15);
  CHECK(eval_mv("norm(3+4e1)", cl20).a0 == doctest::Approx(std::sqrt(7.0)));
  CHECK(eval_mv("det(3+4e1)", cl20).a0 == doctest::Approx(-7.0));
}

TEST_CASE("closed-form callables compose") {
  const Multivector rot = eval_mv("exp(0.5*e12)", cl20);
  CHECK(max_abs_diff(rot, mv(cl20, std::cos(0.5), 0, 0, std::sin(0.5))) <=
        1e-15);

  const EvalOutcome nested = eval_str("exp(log(2+e12))", cl20);
  CHECK(max_abs_diff(std::get<Multivector>(nested.value), mv(cl20, 2, 0, 0, 1)) <=
        1e-12);
  CHECK(!nested.notes.empty());  // the inner log collapsed to a branch

  const EvalOutcome folded = eval_str("sqrt(4)+0", cl20);
  CHECK(std::get<Multivector>(folded.value).a0 == doctest::Approx(2.0));
  CHECK(!folded.notes.empty());
}

TEST_CASE("top-level log and sqrt keep their structure") {
  const EvalOutcome lg = eval_str("log(2+4e1-5e2-e12)", cl02);
  const auto& lr = std::get<LogResult>(lg.value);
  CHECK(lr.kind == LogKind::winding);
  CHECK(lg.notes.empty());

  const EvalOutcome nope = eval_str("log(-3+2e1)", cl10);
  CHECK(std::get<LogResult>(nope.value).kind == LogKind::no_solution);

  const EvalOutcome rt = eval_str("sqrt(3+2e1)", cl10);
  CHECK(std::get<SqrtResult>(rt.value).isolated.size() == 4);
}

TEST_CASE("basis elements outside the algebra dimension are rejected") {
  try {
    (void)eval_str("e2", cl10);
    FAIL("expected a dimension error");
  } catch (const error& e) {
    CHECK(e.code() == errc::basis_out_of_dimension);
    CHECK(e.position() == 0);
  }
  CHECK(thrown_code("1+e12", cl01) == errc::basis_out_of_dimension);
  CHECK(max_abs_diff(eval_mv("1+2e1", cl01), mv(cl01, 1, 2)) == 0.0);
}

TEST_CASE("malformed expressions raise positioned parse errors") {
  for (const char* bad : {"2+", "log(2", ")", "log()", "2*", "e", "1e+",
                          "(2", "2 2e1 e2"}) {
    try {
      (void)parse_expression(bad);
      FAIL("expected a parse error from " << bad);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse_error);
      CHECK(e.position() != error::npos);
    }
  }
  CHECK(thrown_code("foo(2)") == errc::parse_error);
  CHECK(thrown_code("log(2,3)") == errc::parse_error);
}
