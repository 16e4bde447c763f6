// Copyright 2026 The hmiforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hmiforge/feature/feature_expr.hpp"

namespace hmiforge {

FeatureExpr FeatureExpr::feature(std::string name, SourceSpan span) {
  return FeatureExpr{Op::feature, std::move(name), std::move(span), {}};
}

FeatureExpr FeatureExpr::negation(FeatureExpr operand) {
  SourceSpan span = operand.span;
  FeatureExpr e{Op::negation, {}, std::move(span), {}};
  e.operands.push_back(std::move(operand));
  return e;
}

FeatureExpr FeatureExpr::conjunction(FeatureExpr lhs, FeatureExpr rhs) {
  FeatureExpr e{Op::conjunction, {}, join(lhs.span, rhs.span), {}};
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

FeatureExpr FeatureExpr::disjunction(FeatureExpr lhs, FeatureExpr rhs) {
  FeatureExpr e{Op::disjunction, {}, join(lhs.span, rhs.span), {}};
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

namespace {

FeatureExpr parse_or(TokenStream& ts);

FeatureExpr parse_not(TokenStream& ts) {
  if (ts.at(TokenKind::bang)) {
    const Token bang = ts.next();
    FeatureExpr inner = parse_not(ts);
    FeatureExpr e = FeatureExpr::negation(std::move(inner));
    e.span = join(bang.span, e.operands.front().span);
    return e;
  }
  if (ts.at(TokenKind::lparen)) {
    const Token open = ts.next();
    FeatureExpr inner = parse_or(ts);
    const Token close = ts.expect(TokenKind::rparen, "')'");
    inner.span = join(open.span, close.span);
    return inner;
  }
  const Token id = ts.expect(TokenKind::identifier, "feature name");
  return FeatureExpr::feature(id.text, id.span);
}

FeatureExpr parse_and(TokenStream& ts) {
  FeatureExpr lhs = parse_not(ts);
  while (ts.accept(TokenKind::amp)) lhs = FeatureExpr::conjunction(std::move(lhs), parse_not(ts));
  return lhs;
}

FeatureExpr parse_or(TokenStream& ts) {
  FeatureExpr lhs = parse_and(ts);
  while (ts.accept(TokenKind::pipe)) lhs = FeatureExpr::disjunction(std::move(lhs), parse_and(ts));
  return lhs;
}

int precedence(FeatureExpr::Op op) {
  switch (op) {
    case FeatureExpr::Op::disjunction:
      return 1;
    case FeatureExpr::Op::conjunction:
      return 2;
    case FeatureExpr::Op::negation:
      return 3;
    case FeatureExpr::Op::feature:
      return 4;
  }
  return 4;
}

void print(const FeatureExpr& e, int min_prec, std::string& out) {
  const int prec = precedence(e.op);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (e.op) {
    case FeatureExpr::Op::feature:
      out += e.name;
      break;
    case FeatureExpr::Op::negation:
      out += '!';
      print(e.operands[0], 3, out);
      break;
    case FeatureExpr::Op::conjunction:
      print(e.operands[0], 2, out);
      out += " & ";
      print(e.operands[1], 3, out);
      break;
    case FeatureExpr::Op::disjunction:
      print(e.operands[0], 1, out);
      out += " | ";
      print(e.operands[1], 2, out);
      break;
  }
  if (parens) out += ')';
}

void collect(const FeatureExpr& e, std::vector<const FeatureExpr*>& out) {
  if (e.op == FeatureExpr::Op::feature) {
    out.push_back(&e);
    return;
  }
  for (const auto& o : e.operands) collect(o, out);
}

}  // namespace

FeatureExpr parse_feature_expr(TokenStream& tokens) { return parse_or(tokens); }

Parsed<FeatureExpr> parse_feature_expr(std::string_view text, const std::string& file) {
  Parsed<FeatureExpr> result;
  auto tokens = tokenize(text, file, result.diagnostics);
  TokenStream ts(std::move(tokens), {});
  try {
    FeatureExpr e = parse_or(ts);
    if (!ts.at_end()) ts.fail("unexpected '" + ts.peek().text + "' after expression");
    if (!has_errors(result.diagnostics)) result.value = std::move(e);
  } catch (const SyntaxError& err) {
    result.diagnostics.push_back(err.diagnostic());
  }
  return result;
}

std::string to_string(const FeatureExpr& expr) {
  std::string out;
  print(expr, 1, out);
  return out;
}

bool eval_feature_expr(const FeatureExpr& expr, const std::set<std::string>& selected) {
  switch (expr.op) {
    case FeatureExpr::Op::feature:
      return selected.count(expr.name) != 0;
    case FeatureExpr::Op::negation:
      return !eval_feature_expr(expr.operands[0], selected);
    case FeatureExpr::Op::conjunction:
      return eval_feature_expr(expr.operands[0], selected) &&
             eval_feature_expr(expr.operands[1], selected);
    case FeatureExpr::Op::disjunction:
      return eval_feature_expr(expr.operands[0], selected) ||
             eval_feature_expr(expr.operands[1], selected);
  }
  return false;
}

std::vector<const FeatureExpr*> feature_refs(const FeatureExpr& expr) {
  std::vector<const FeatureExpr*> out;
  collect(expr, out);
  return out;
}

bool same_structure(const FeatureExpr& a, const FeatureExpr& b) {
  if (a.op != b.op || a.name != b.name || a.operands.size() != b.operands.size()) return false;
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (!same_structure(a.operands[i], b.operands[i])) return false;
  }
  return true;
}

}  // namespace hmiforge
