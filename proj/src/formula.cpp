#include "agw/formula.hpp"

#include <cctype>
#include <sstream>

namespace agw {

namespace {

struct Token {
  enum class Kind : uint8_t { ident, star, bar, limp, caret, lparen, rparen, end };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    int line = line_, col = col_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::Kind::end, "", line, col};
      return;
    }
    char c = text_[pos_];
    auto one = [&](Token::Kind k) {
      tok_ = {k, std::string(1, c), line, col};
      ++pos_;
      ++col_;
    };
    switch (c) {
      case '*': one(Token::Kind::star); return;
      case '|': one(Token::Kind::bar); return;
      case '^': one(Token::Kind::caret); return;
      case '(': one(Token::Kind::lparen); return;
      case ')': one(Token::Kind::rparen); return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == 'o') {
          tok_ = {Token::Kind::limp, "-o", line, col};
          pos_ += 2;
          col_ += 2;
          return;
        }
        throw parse_error("syntax error at line " + std::to_string(line) + ", col " +
                              std::to_string(col) + ": stray '-'",
                          line);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      tok_ = {Token::Kind::ident, text_.substr(start, pos_ - start), line, col};
      return;
    }
    throw parse_error("syntax error at line " + std::to_string(line) + ", col " +
                          std::to_string(col) + ": unexpected character '" + std::string(1, c) +
                          "'",
                      line);
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_{Token::Kind::end, "", 1, 1};
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Formula parse() {
    Formula f = limp();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::end) fail(t, "expected end of formula");
    return f;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& what) {
    throw parse_error("syntax error at line " + std::to_string(t.line) + ", col " +
                          std::to_string(t.col) + ": " + what,
                      t.line);
  }

  Formula limp() {
    Formula lhs = par();
    if (lex_.peek().kind == Token::Kind::limp) {
      lex_.take();
      Formula rhs = limp();
      Formula f;
      f.op = Formula::Op::limp;
      f.kids = {std::move(lhs), std::move(rhs)};
      return f;
    }
    return lhs;
  }

  Formula par() {
    Formula lhs = tensor();
    while (lex_.peek().kind == Token::Kind::bar) {
      lex_.take();
      Formula rhs = tensor();
      Formula f;
      f.op = Formula::Op::par;
      f.kids = {std::move(lhs), std::move(rhs)};
      lhs = std::move(f);
    }
    return lhs;
  }

  Formula tensor() {
    Formula lhs = unary();
    while (lex_.peek().kind == Token::Kind::star) {
      lex_.take();
      Formula rhs = unary();
      Formula f;
      f.op = Formula::Op::tensor;
      f.kids = {std::move(lhs), std::move(rhs)};
      lhs = std::move(f);
    }
    return lhs;
  }

  Formula unary() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::ident && (t.text == "up" || t.text == "dn")) {
      bool is_up = t.text == "up";
      lex_.take();
      Formula inner = unary();
      Formula f;
      f.op = is_up ? Formula::Op::up : Formula::Op::down;
      f.kids = {std::move(inner)};
      return f;
    }
    return postfix();
  }

  Formula postfix() {
    Formula f = primary();
    while (lex_.peek().kind == Token::Kind::caret) {
      lex_.take();
      Formula d;
      d.op = Formula::Op::dual;
      d.kids = {std::move(f)};
      f = std::move(d);
    }
    return f;
  }

  Formula primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::lparen: {
        Formula f = limp();
        const Token& close = lex_.peek();
        if (close.kind != Token::Kind::rparen) fail(close, "expected ')'");
        lex_.take();
        return f;
      }
      case Token::Kind::ident: {
        Formula f;
        if (t.text == "one") {
          f.op = Formula::Op::one;
        } else if (t.text == "bot") {
          f.op = Formula::Op::bot;
        } else {
          f.op = Formula::Op::var;
          f.name = t.text;
        }
        return f;
      }
      default:
        fail(t, "expected a formula");
    }
  }

  Lexer lex_;
};

int precedence(Formula::Op op) {
  switch (op) {
    case Formula::Op::limp: return 0;
    case Formula::Op::par: return 1;
    case Formula::Op::tensor: return 2;
    case Formula::Op::up:
    case Formula::Op::down: return 3;
    default: return 4;
  }
}

void print_rec(const Formula& f, int parent_prec, std::ostream& os) {
  int prec = precedence(f.op);
  bool paren = prec < parent_prec;
  if (paren) os << '(';
  switch (f.op) {
    case Formula::Op::one: os << "one"; break;
    case Formula::Op::bot: os << "bot"; break;
    case Formula::Op::var: os << f.name; break;
    case Formula::Op::dual:
      // postfix binds tighter than everything else
      print_rec(f.kids[0], 4, os);
      os << '^';
      break;
    case Formula::Op::tensor:
      print_rec(f.kids[0], 2, os);
      os << " * ";
      print_rec(f.kids[1], 3, os);
      break;
    case Formula::Op::par:
      print_rec(f.kids[0], 1, os);
      os << " | ";
      print_rec(f.kids[1], 2, os);
      break;
    case Formula::Op::limp:
      print_rec(f.kids[0], 1, os);
      os << " -o ";
      print_rec(f.kids[1], 0, os);
      break;
    case Formula::Op::up:
      os << "up ";
      print_rec(f.kids[0], 3, os);
      break;
    case Formula::Op::down:
      os << "dn ";
      print_rec(f.kids[0], 3, os);
      break;
  }
  if (paren) os << ')';
}

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  print_rec(f, 0, os);
  return os.str();
}

Game interpret_formula(const Formula& f, const GameEnv& env) {
  switch (f.op) {
    case Formula::Op::one:
    case Formula::Op::bot:
      return empty_game();
    case Formula::Op::var: {
      auto it = env.find(f.name);
      if (it == env.end()) throw precondition_error("unbound identifier '" + f.name + "'");
      return it->second;
    }
    case Formula::Op::dual: return dual(interpret_formula(f.kids[0], env));
    case Formula::Op::tensor:
      return product(interpret_formula(f.kids[0], env), interpret_formula(f.kids[1], env),
                     TileLabel::tensor);
    case Formula::Op::par:
      return product(interpret_formula(f.kids[0], env), interpret_formula(f.kids[1], env),
                     TileLabel::par);
    case Formula::Op::limp:
      return limp(interpret_formula(f.kids[0], env), interpret_formula(f.kids[1], env));
    case Formula::Op::up:
      return lift(interpret_formula(f.kids[0], env), "u", Polarity::opponent);
    case Formula::Op::down:
      return lift(interpret_formula(f.kids[0], env), "d", Polarity::proponent);
  }
  throw precondition_error("malformed formula tree");
}

Formula normalize_duals(const Formula& f, bool negate) {
  auto mk = [](Formula::Op op, std::vector<Formula> kids) {
    Formula r;
    r.op = op;
    r.kids = std::move(kids);
    return r;
  };
  switch (f.op) {
    case Formula::Op::one: return mk(negate ? Formula::Op::bot : Formula::Op::one, {});
    case Formula::Op::bot: return mk(negate ? Formula::Op::one : Formula::Op::bot, {});
    case Formula::Op::var:
      throw precondition_error("formula is not closed: identifier '" + f.name + "'");
    case Formula::Op::dual: return normalize_duals(f.kids[0], !negate);
    case Formula::Op::tensor:
      return mk(negate ? Formula::Op::par : Formula::Op::tensor,
                {normalize_duals(f.kids[0], negate), normalize_duals(f.kids[1], negate)});
    case Formula::Op::par:
      return mk(negate ? Formula::Op::tensor : Formula::Op::par,
                {normalize_duals(f.kids[0], negate), normalize_duals(f.kids[1], negate)});
    case Formula::Op::limp:
      return mk(negate ? Formula::Op::tensor : Formula::Op::par,
                {normalize_duals(f.kids[0], !negate), normalize_duals(f.kids[1], negate)});
    case Formula::Op::up:
      return mk(negate ? Formula::Op::down : Formula::Op::up, {normalize_duals(f.kids[0], negate)});
    case Formula::Op::down:
      return mk(negate ? Formula::Op::up : Formula::Op::down, {normalize_duals(f.kids[0], negate)});
  }
  throw precondition_error("malformed formula tree");
}

}  // namespace agw
