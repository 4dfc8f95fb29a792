#ifndef CTREALS_FNEXPR_HPP
#define CTREALS_FNEXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctreals/kk.hpp"

namespace ctreals {

/// A tiny total-by-construction language for the functionals fed to the
/// kernel. Grammar (level selects what the variable x denotes):
///
///   expr  := atom ('+' atom)*
///   atom  := NAT
///          | 'x'                      (level 1: the natural argument)
///          | 'x' '(' expr ')'         (level 2: the function argument)
///          | 'succ' '(' expr ')'
///          | 'if' expr '==' expr 'then' expr 'else' expr
///          | '(' expr ')'
///
/// There is no recursion, so every well-typed expression denotes a total
/// functional; composition is nesting.
struct FnExpr {
  enum class Kind { literal, variable, apply, succ, add, cond };
  Kind kind = Kind::literal;
  nat value = 0;
  std::vector<std::shared_ptr<FnExpr>> children;
};

class FnExprError : public std::runtime_error {
 public:
  explicit FnExprError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses at the given level (1 or 2); throws FnExprError naming the offence.
std::shared_ptr<FnExpr> parse_fnexpr(const std::string& text, int level);

nat eval_fnexpr1(const FnExpr& e, nat x);
nat eval_fnexpr2(const FnExpr& e, const TotalFn1& x);

TotalFn1 fn1_from_expr(const std::string& text);
TotalFn2 fn2_from_expr(const std::string& text);

std::string to_string(const FnExpr& e);

}  // namespace ctreals

#endif
