#include "ga/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace ga {

namespace {

bool is_word_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      const std::size_t start = i;
      while (i < src.size() && is_digit(src[i])) ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        while (i < src.size() && is_digit(src[i])) ++i;
      }
      // Exponent only with an explicit sign, so "4e1" stays 4 * e1.
      if (i + 2 < src.size() && (src[i] == 'e' || src[i] == 'E') &&
          (src[i + 1] == '+' || src[i + 1] == '-') && is_digit(src[i + 2])) {
        i += 3;
        while (i < src.size() && is_digit(src[i])) ++i;
      }
      const std::string_view text = src.substr(start, i - start);
      double value = 0.0;
      std::from_chars(text.data(), text.data() + text.size(), value);
      out.push_back(Token{TokenKind::number, start, std::string(text), value, 0});
      continue;
    }
    if (is_word_start(c)) {
      const std::size_t start = i;
      while (i < src.size() && is_word_char(src[i])) ++i;
      const std::string word(src.substr(start, i - start));
      if (word == "e1" || word == "e2" || word == "e12") {
        out.push_back(Token{TokenKind::basis, start, word, 0.0,
                            word == "e1" ? 1 : (word == "e2" ? 2 : 12)});
      } else {
        out.push_back(Token{TokenKind::ident, start, word, 0.0, 0});
      }
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '/': kind = TokenKind::slash; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      case ',': kind = TokenKind::comma; break;
      default:
        throw error(errc::lex_error,
                    std::string("unexpected character '") + c + "'", i);
    }
    out.push_back(Token{kind, i, std::string(1, c), 0.0, 0});
    ++i;
  }
  out.push_back(Token{TokenKind::end, src.size(), "", 0.0, 0});
  return out;
}

namespace {

const char* const kCallables[] = {"exp",  "log",  "sqrt", "inv", "rev",
                                  "gradeinv", "conj", "norm", "det"};

bool is_callable(const std::string& name) {
  for (const char* c : kCallables) {
    if (name == c) return true;
  }
  return false;
}

ExprPtr make(Expr::Kind kind, std::size_t pos) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->pos = pos;
  return e;
}

struct Parser {
  const std::vector<Token>& toks;
  std::size_t at = 0;

  const Token& peek() const { return toks[at]; }
  const Token& take() { return toks[at++]; }

  [[noreturn]] static void fail(const std::string& msg, std::size_t pos) {
    throw error(errc::parse_error, msg, pos);
  }

  ExprPtr expression() {
    ExprPtr lhs = term();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const Token& op = take();
      ExprPtr node = make(op.kind == TokenKind::plus ? Expr::Kind::add
                                                     : Expr::Kind::sub,
                          op.pos);
      node->lhs = std::move(lhs);
      node->rhs = term();
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
      const Token& op = take();
      ExprPtr node = make(op.kind == TokenKind::star ? Expr::Kind::mul
                                                     : Expr::Kind::div,
                          op.pos);
      node->lhs = std::move(lhs);
      node->rhs = factor();
      lhs = std::move(node);
    }
    return lhs;
  }

  // A factor is a power, possibly juxtaposed with a following basis power
  // when it is a (negated) number literal: "4e1", "-4e1^2".
  ExprPtr factor() {
    ExprPtr e = power();
    const Expr* core = e.get();
    while (core->kind == Expr::Kind::neg) core = core->lhs.get();
    if (core->kind == Expr::Kind::number && peek().kind == TokenKind::basis) {
      ExprPtr node = make(Expr::Kind::mul, peek().pos);
      node->lhs = std::move(e);
      node->rhs = power();
      return node;
    }
    return e;
  }

  ExprPtr power() {
    ExprPtr base = unary();
    if (peek().kind == TokenKind::caret) {
      const Token& op = take();
      if (peek().kind != TokenKind::number) {
        fail("expected a non-negative integer literal after '^'", peek().pos);
      }
      const Token& num = take();
      const double v = num.value;
      if (!(v >= 0.0) || v != std::floor(v) || v > 1e9) {
        fail("exponent must be a non-negative integer literal", num.pos);
      }
      ExprPtr node = make(Expr::Kind::pow, op.pos);
      node->ipow = static_cast<long>(v);
      node->lhs = std::move(base);
      return node;
    }
    return base;
  }

  ExprPtr unary() {
    if (peek().kind == TokenKind::minus) {
      const Token& op = take();
      ExprPtr node = make(Expr::Kind::neg, op.pos);
      node->lhs = unary();
      return node;
    }
    return atom();
  }

  ExprPtr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::number: {
        take();
        ExprPtr e = make(Expr::Kind::number, tok.pos);
        e->value = tok.value;
        return e;
      }
      case TokenKind::basis: {
        take();
        ExprPtr e = make(Expr::Kind::basis, tok.pos);
        e->basis = tok.basis;
        return e;
      }
      case TokenKind::ident: {
        if (!is_callable(tok.text)) {
          fail("unknown function '" + tok.text + "'", tok.pos);
        }
        take();
        if (peek().kind != TokenKind::lparen) {
          fail("expected '(' after function name", peek().pos);
        }
        take();
        ExprPtr e = make(Expr::Kind::call, tok.pos);
        e->fn = tok.text;
        e->lhs = expression();
        if (peek().kind != TokenKind::rparen) {
          fail("expected ')' to close the call", peek().pos);
        }
        take();
        return e;
      }
      case TokenKind::lparen: {
        take();
        ExprPtr e = expression();
        if (peek().kind != TokenKind::rparen) {
          fail("expected ')'", peek().pos);
        }
        take();
        return e;
      }
      default:
        fail("expected a number, basis element, function call or '('",
             tok.pos);
    }
  }
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) {
  Parser p{tokens};
  ExprPtr e = p.expression();
  if (p.peek().kind != TokenKind::end) {
    Parser::fail("unexpected token '" + p.peek().text + "'", p.peek().pos);
  }
  return e;
}

ExprPtr parse_expression(std::string_view src) {
  return parse(tokenize(src));
}

namespace {

struct Evaluator {
  const Signature& sig;
  std::vector<std::string>& notes;

  Multivector as_mv(EvalValue&& v, std::size_t pos) {
    if (auto* m = std::get_if<Multivector>(&v)) return *m;
    if (auto* lr = std::get_if<LogResult>(&v)) {
      if (lr->kind == LogKind::no_solution) {
        throw error(errc::no_logarithm, "log has no solution here", pos);
      }
      if (lr->kind == LogKind::asymptotic) {
        throw error(errc::no_logarithm,
                    "asymptotic log has no finite value for arithmetic", pos);
      }
      notes.push_back("nested log collapsed to its principal branch");
      return *lr->principal;
    }
    auto& sr = std::get<SqrtResult>(v);
    if (sr.isolated.empty()) {
      throw error(errc::no_real_root, "sqrt produced no real root", pos);
    }
    notes.push_back("nested sqrt collapsed to its first isolated root");
    return sr.isolated.front();
  }

  Multivector arg_mv(const Expr& e) { return as_mv(eval(e), e.pos); }

  EvalValue eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::number:
        return scalar_mv(sig, e.value);
      case Expr::Kind::basis: {
        if (e.basis != 1 && sig.dim() < 2) {
          throw error(errc::basis_out_of_dimension,
                      "basis element not present in this algebra", e.pos);
        }
        return Multivector{sig, 0.0, e.basis == 1 ? 1.0 : 0.0,
                           e.basis == 2 ? 1.0 : 0.0, e.basis == 12 ? 1.0 : 0.0};
      }
      case Expr::Kind::neg:
        return -arg_mv(*e.lhs);
      case Expr::Kind::add:
        return arg_mv(*e.lhs) + arg_mv(*e.rhs);
      case Expr::Kind::sub:
        return arg_mv(*e.lhs) - arg_mv(*e.rhs);
      case Expr::Kind::mul:
        return gp(arg_mv(*e.lhs), arg_mv(*e.rhs));
      case Expr::Kind::div: {
        const Multivector num = arg_mv(*e.lhs);
        const Multivector den = arg_mv(*e.rhs);
        try {
          return gp(num, inverse(den));
        } catch (const error& err) {
          if (err.code() == errc::singular_multivector) {
            throw error(errc::singular_division,
                        "division by a (near-)singular multivector", e.pos);
          }
          throw;
        }
      }
      case Expr::Kind::pow: {
        Multivector base = arg_mv(*e.lhs);
        Multivector acc = scalar_mv(sig, 1.0);
        long n = e.ipow;
        while (n > 0) {
          if (n & 1) acc = gp(acc, base);
          n >>= 1;
          if (n > 0) base = gp(base, base);
        }
        return acc;
      }
      case Expr::Kind::call:
        return call(e);
    }
    throw error(errc::parse_error, "corrupt expression tree", e.pos);
  }

  EvalValue call(const Expr& e) {
    try {
      const Multivector a = arg_mv(*e.lhs);
      if (e.fn == "exp") return ga::exp(a);
      if (e.fn == "log") return ga::log(a);
      if (e.fn == "sqrt") return sqrt_all(a);
      if (e.fn == "inv") return inverse(a);
      if (e.fn == "rev") return involute(a, Involution::reverse);
      if (e.fn == "gradeinv") return involute(a, Involution::grade_involute);
      if (e.fn == "conj") return involute(a, Involution::clifford_conjugate);
      if (e.fn == "norm") return scalar_mv(sig, norms(a).seminorm_b);
      if (e.fn == "det") return scalar_mv(sig, norms(a).det);
    } catch (const error& err) {
      if (err.position() == error::npos) {
        throw error(err.code(), err.what(), e.pos);
      }
      throw;
    }
    throw error(errc::parse_error, "unknown function '" + e.fn + "'", e.pos);
  }
};

}  // namespace

EvalOutcome eval_ast(const Expr& e, const Signature& sig) {
  EvalOutcome out{scalar_mv(sig, 0.0), {}};
  Evaluator ev{sig, out.notes};
  out.value = ev.eval(e);
  return out;
}

}  // namespace ga
