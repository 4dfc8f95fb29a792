#include "ctreals/fnexpr.hpp"

#include <cctype>

namespace ctreals {

namespace {

struct Parser {
  std::string text;
  std::size_t pos = 0;
  int level = 1;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw FnExprError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
  }

  bool eat_word(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) != 0) return false;
    std::size_t end = pos + w.size();
    if (end < text.size() &&
        (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
      return false;
    pos = end;
    return true;
  }

  std::shared_ptr<FnExpr> parse_expr() {
    auto left = parse_atom();
    while (eat('+')) {
      auto node = std::make_shared<FnExpr>();
      node->kind = FnExpr::Kind::add;
      node->children = {left, parse_atom()};
      left = node;
    }
    return left;
  }

  std::shared_ptr<FnExpr> parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw FnExprError("unexpected end of expression");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      nat v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<nat>(text[pos] - '0');
        ++pos;
      }
      auto node = std::make_shared<FnExpr>();
      node->kind = FnExpr::Kind::literal;
      node->value = v;
      return node;
    }
    if (eat_word("succ")) {
      expect('(');
      auto node = std::make_shared<FnExpr>();
      node->kind = FnExpr::Kind::succ;
      node->children = {parse_expr()};
      expect(')');
      return node;
    }
    if (eat_word("if")) {
      auto node = std::make_shared<FnExpr>();
      node->kind = FnExpr::Kind::cond;
      node->children.push_back(parse_expr());
      skip_ws();
      if (text.compare(pos, 2, "==") != 0)
        throw FnExprError("expected '==' at offset " + std::to_string(pos));
      pos += 2;
      node->children.push_back(parse_expr());
      if (!eat_word("then")) throw FnExprError("expected 'then' at offset " + std::to_string(pos));
      node->children.push_back(parse_expr());
      if (!eat_word("else")) throw FnExprError("expected 'else' at offset " + std::to_string(pos));
      node->children.push_back(parse_expr());
      return node;
    }
    if (eat_word("x")) {
      if (eat('(')) {
        if (level != 2)
          throw FnExprError("x(...) applies the level-2 function argument; at level 1, x is a number");
        auto node = std::make_shared<FnExpr>();
        node->kind = FnExpr::Kind::apply;
        node->children = {parse_expr()};
        expect(')');
        return node;
      }
      if (level != 1)
        throw FnExprError("bare x denotes the level-1 argument; at level 2, apply it as x(...)");
      auto node = std::make_shared<FnExpr>();
      node->kind = FnExpr::Kind::variable;
      return node;
    }
    if (eat('(')) {
      auto node = parse_expr();
      expect(')');
      return node;
    }
    throw FnExprError(std::string("unexpected character '") + c + "' at offset " +
                      std::to_string(pos));
  }
};

}  // namespace

std::shared_ptr<FnExpr> parse_fnexpr(const std::string& text, int level) {
  if (level != 1 && level != 2) throw FnExprError("level must be 1 or 2");
  Parser p{text, 0, level};
  auto e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw FnExprError("trailing input at offset " + std::to_string(p.pos));
  return e;
}

namespace {

template <typename ApplyVar>
nat eval_node(const FnExpr& e, const ApplyVar& var) {
  switch (e.kind) {
    case FnExpr::Kind::literal:
      return e.value;
    case FnExpr::Kind::variable:
    case FnExpr::Kind::apply:
      return var(e);
    case FnExpr::Kind::succ:
      return eval_node(*e.children[0], var) + 1;
    case FnExpr::Kind::add:
      return eval_node(*e.children[0], var) + eval_node(*e.children[1], var);
    case FnExpr::Kind::cond:
      return eval_node(*e.children[0], var) == eval_node(*e.children[1], var)
                 ? eval_node(*e.children[2], var)
                 : eval_node(*e.children[3], var);
  }
  throw FnExprError("malformed expression node");
}

}  // namespace

nat eval_fnexpr1(const FnExpr& e, nat x) {
  return eval_node(e, [&](const FnExpr& node) -> nat {
    if (node.kind != FnExpr::Kind::variable)
      throw FnExprError("x(...) used in a level-1 expression");
    return x;
  });
}

nat eval_fnexpr2(const FnExpr& e, const TotalFn1& x) {
  std::function<nat(const FnExpr&)> var = [&](const FnExpr& node) -> nat {
    if (node.kind != FnExpr::Kind::apply)
      throw FnExprError("bare x used in a level-2 expression");
    return x(eval_node(*node.children[0], var));
  };
  return eval_node(e, var);
}

TotalFn1 fn1_from_expr(const std::string& text) {
  auto e = parse_fnexpr(text, 1);
  return TotalFn1([e](nat x) { return eval_fnexpr1(*e, x); });
}

TotalFn2 fn2_from_expr(const std::string& text) {
  auto e = parse_fnexpr(text, 2);
  return TotalFn2([e](const TotalFn1& f) { return eval_fnexpr2(*e, f); });
}

std::string to_string(const FnExpr& e) {
  switch (e.kind) {
    case FnExpr::Kind::literal:
      return std::to_string(e.value);
    case FnExpr::Kind::variable:
      return "x";
    case FnExpr::Kind::apply:
      return "x(" + to_string(*e.children[0]) + ")";
    case FnExpr::Kind::succ:
      return "succ(" + to_string(*e.children[0]) + ")";
    case FnExpr::Kind::add:
      return "(" + to_string(*e.children[0]) + " + " + to_string(*e.children[1]) + ")";
    case FnExpr::Kind::cond:
      return "if " + to_string(*e.children[0]) + " == " + to_string(*e.children[1]) +
             " then " + to_string(*e.children[2]) + " else " + to_string(*e.children[3]);
  }
  return "?";
}

}  // namespace ctreals
