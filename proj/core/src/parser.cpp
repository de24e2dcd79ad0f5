#include "kbound/parser.hpp"

#include "kbound/errors.hpp"
#include "kbound/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kbound {

namespace {

constexpr unsigned long kMaxExponent = 10000;

enum class Tok { Number, Ident, Op, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view s, int line, int col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = col0 + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && (s[j] == '.' || s[j] == 'e' || s[j] == 'E')) {
        throw ParseError(line, col, "decimal literals are not allowed, write p/q");
      }
      if (j < s.size() && ident_start(s[j])) {
        throw ParseError(line, col0 + static_cast<int>(j), "implicit multiplication is not allowed, use '*'");
      }
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (c == '.') {
      throw ParseError(line, col, "decimal literals are not allowed, write p/q");
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Tok::Op, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", col0 + static_cast<int>(s.size())});
  return out;
}

struct Context {
  const std::set<std::string>* allowed = nullptr;  // nullptr accepts any identifier
  std::string param;
  std::set<std::string> reserved;
  std::vector<SectionSpec>* sections = nullptr;
};

class ExprParser {
 public:
  ExprParser(std::string_view text, int line, int col0, Context& ctx)
      : toks_(tokenize(text, line, col0)), line_(line), ctx_(ctx) {}

  MultiPoly parse() {
    if (peek().kind == Tok::End) fail(peek(), "empty expression");
    MultiPoly p = expr();
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::Ident || peek().kind == Tok::Number || is_op(peek(), "(")) {
        fail(peek(), "implicit multiplication is not allowed, use '*'");
      }
      fail(peek(), "unexpected '" + peek().text + "'");
    }
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  static bool is_op(const Token& t, const char* op) { return t.kind == Tok::Op && t.text == op; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (is_op(peek(), "+") || is_op(peek(), "-")) {
      bool plus = take().text == "+";
      MultiPoly rhs = term();
      acc = plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (is_op(peek(), "*") || is_op(peek(), "/")) {
      const Token& op = take();
      MultiPoly rhs = unary();
      if (op.text == "*") {
        acc = acc * rhs;
        continue;
      }
      if (!rhs.is_constant()) fail(op, "division by a non-constant expression");
      if (rhs.is_zero()) fail(op, "division by zero");
      acc = acc * (Rational(1) / rhs.constant_value());
    }
    return acc;
  }

  MultiPoly unary() {
    if (is_op(peek(), "-")) {
      take();
      return -unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (!is_op(peek(), "^")) return base;
    const Token& op = take();
    const Token& e = peek();
    if (e.kind != Tok::Number) {
      if (e.kind == Tok::End) fail(op, "dangling '^': expected an integer exponent");
      fail(e, "exponent must be a nonnegative integer literal");
    }
    take();
    if (e.text.size() > 6 || std::stoul(e.text) > kMaxExponent) fail(e, "exponent too large");
    MultiPoly r = pow(base, static_cast<long>(std::stoul(e.text)));
    if (is_op(peek(), "^")) fail(peek(), "chained '^' is ambiguous, use parentheses");
    return r;
  }

  MultiPoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        take();
        return MultiPoly(Rational(Integer(t.text)));
      case Tok::Ident:
        take();
        if (t.text == "sqrt") return sqrt_call(t);
        if (ctx_.allowed != nullptr && ctx_.allowed->count(t.text) == 0) fail(t, "unknown identifier '" + t.text + "'");
        return MultiPoly::variable(t.text);
      case Tok::Op:
        if (t.text == "(") {
          take();
          MultiPoly inner = expr();
          expect_close(t);
          return inner;
        }
        fail(t, "expected an operand, found '" + t.text + "'");
      case Tok::End:
        break;
    }
    if (pos_ > 0) fail(toks_[pos_ - 1], "dangling '" + toks_[pos_ - 1].text + "': expected an operand");
    fail(t, "expected an operand");
  }

  void expect_close(const Token& open) {
    if (is_op(peek(), ")")) {
      take();
      return;
    }
    if (peek().kind == Tok::End) fail(open, "unclosed '('");
    fail(peek(), "expected ')'");
  }

  MultiPoly sqrt_call(const Token& name) {
    if (ctx_.sections == nullptr) fail(name, "sqrt is not allowed here");
    if (!is_op(peek(), "(")) fail(name, "sqrt must be followed by '('");
    const Token& open = take();
    MultiPoly r = expr();
    expect_close(open);
    if (r.depends_on(ctx_.param)) fail(name, "sqrt radicand must not contain the parameter " + ctx_.param);
    for (const auto& s : *ctx_.sections) {
      if (r.depends_on(s.aux)) fail(name, "nested sqrt is not supported");
    }
    for (const auto& s : *ctx_.sections) {
      if (s.radicand == r) return MultiPoly::variable(s.aux);
    }
    std::string aux = "u";
    for (int i = 2; ctx_.reserved.count(aux) != 0; ++i) aux = "u" + std::to_string(i);
    ctx_.reserved.insert(aux);
    ctx_.sections->push_back({aux, r});
    return MultiPoly::variable(aux);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
  Context& ctx_;
};

std::string_view trim(std::string_view s, int& col) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++col;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  return !s.empty() && ident_start(s.front()) && std::all_of(s.begin(), s.end(), ident_char);
}

struct Field {
  std::string_view value;
  int line = 0;
  int column = 0;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text) {
  Context ctx;
  return ExprParser(text, 1, 1, ctx).parse();
}

ProblemSpec parse_problem(std::string_view text) {
  std::optional<Field> direction, parameter, objective, vars;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    int col = 1;
    line = trim(line, col);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, col, "expected 'key: value'");
    int key_col = col;
    std::string_view key = trim(line.substr(0, colon), key_col);
    int value_col = col + static_cast<int>(colon) + 1;
    std::string_view value = trim(line.substr(colon + 1), value_col);
    std::optional<Field>* slot = nullptr;
    if (key == "direction") slot = &direction;
    if (key == "parameter") slot = &parameter;
    if (key == "objective") slot = &objective;
    if (key == "vars") slot = &vars;
    if (slot == nullptr) throw ParseError(line_no, key_col, "unknown key '" + std::string(key) + "'");
    if (slot->has_value()) throw ParseError(line_no, key_col, "duplicate '" + std::string(key) + "' line");
    if (value.empty()) throw ParseError(line_no, value_col, "missing value for '" + std::string(key) + "'");
    *slot = Field{value, line_no, value_col};
  }
  const int last = std::max(line_no, 1);
  if (!parameter) throw ParseError(last, 1, "missing 'parameter' line");
  if (!objective) throw ParseError(last, 1, "missing 'objective' line");
  if (!vars) throw ParseError(last, 1, "missing 'vars' line");

  ProblemSpec spec;
  if (direction) {
    if (direction->value == "max") {
      spec.direction = Direction::Maximize;
    } else if (direction->value == "min") {
      spec.direction = Direction::Minimize;
    } else {
      throw ParseError(direction->line, direction->column, "direction must be 'max' or 'min'");
    }
  }
  if (!is_identifier(parameter->value) || parameter->value == "sqrt") {
    throw ParseError(parameter->line, parameter->column, "parameter must be a single identifier");
  }
  spec.param = std::string(parameter->value);

  std::set<std::string> allowed{spec.param};
  std::string_view list = vars->value;
  int offset = 0;
  while (true) {
    std::size_t comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    int item_col = vars->column + offset;
    item = trim(item, item_col);
    std::size_t colon = item.find(':');
    int name_col = item_col;
    std::string_view name = trim(item.substr(0, colon == std::string_view::npos ? item.size() : colon), name_col);
    if (!is_identifier(name) || name == "sqrt") throw ParseError(vars->line, name_col, "expected a variable name");
    if (colon == std::string_view::npos) throw ParseError(vars->line, name_col, "expected '<name>:real' or '<name>:nonneg'");
    int dom_col = item_col + static_cast<int>(colon) + 1;
    std::string_view dom = trim(item.substr(colon + 1), dom_col);
    Domain d;
    if (dom == "real") {
      d = Domain::Real;
    } else if (dom == "nonneg") {
      d = Domain::Nonneg;
    } else {
      throw ParseError(vars->line, dom_col, "domain must be 'real' or 'nonneg'");
    }
    std::string n(name);
    if (n == spec.param) throw ParseError(vars->line, name_col, "the parameter cannot be a variable");
    if (!allowed.insert(n).second) throw ParseError(vars->line, name_col, "variable '" + n + "' declared twice");
    spec.var_domains.push_back({n, d});
    if (comma == std::string_view::npos) break;
    offset += static_cast<int>(comma) + 1;
    list = list.substr(comma + 1);
  }

  Context ctx;
  ctx.allowed = &allowed;
  ctx.param = spec.param;
  ctx.reserved = allowed;
  ctx.sections = &spec.sections;
  for (const auto& t : tokenize(objective->value, objective->line, objective->column)) {
    if (t.kind == Tok::Ident) ctx.reserved.insert(t.text);
  }
  ExprParser parser(objective->value, objective->line, objective->column, ctx);
  spec.objective = parser.parse();
  if (!spec.objective.depends_on(spec.param)) {
    throw ParseError(objective->line, objective->column, "objective does not depend on the parameter " + spec.param);
  }
  return spec;
}

}  // namespace kbound
