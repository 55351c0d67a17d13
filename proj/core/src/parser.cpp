/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "skyline/parser.hpp"

#include "skyline/error.hpp"

namespace skyline {

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token> &tokens) : tokens_(tokens) {}

  QueryAst parse_query() {
    QueryAst ast;
    expect_keyword(Keyword::Select, "expected SELECT");
    parse_select_list(ast);
    expect_keyword(Keyword::From, "expected FROM");
    ast.from_table = expect_identifier("expected table name after FROM");
    reject_unsupported_after_from();

    if (accept_keyword(Keyword::Where)) {
      ast.where = parse_or();
    }
    if (peek().is_keyword(Keyword::Skyline)) {
      advance();
      ast.skyline = parse_skyline_clause();
    }
    if (accept_keyword(Keyword::Order)) {
      expect_keyword(Keyword::By, "expected BY after ORDER");
      OrderByAst order;
      order.column = expect_identifier("expected column name after ORDER BY");
      if (accept_keyword(Keyword::Asc)) {
        order.ascending = true;
      } else if (accept_keyword(Keyword::Desc)) {
        order.ascending = false;
      }
      ast.order_by = order;
    }
    while (peek().kind == TokenKind::Semicolon) {
      advance();
    }
    if (peek().kind != TokenKind::End) {
      const Token &tok = peek();
      if (tok.is_keyword(Keyword::Skyline)) {
        throw ParseError("SKYLINE OF must come before ORDER BY", tok.offset);
      }
      if (tok.is_keyword(Keyword::Group)) {
        throw ParseError("unsupported feature: GROUP BY", tok.offset);
      }
      if (tok.is_keyword(Keyword::Having)) {
        throw ParseError("unsupported feature: HAVING", tok.offset);
      }
      if (tok.is_keyword(Keyword::Join)) {
        throw ParseError("unsupported feature: JOIN", tok.offset);
      }
      throw ParseError("unexpected trailing input '" + tok.text + "'", tok.offset);
    }
    return ast;
  }

 private:
  void parse_select_list(QueryAst &ast) {
    if (peek().kind == TokenKind::Star) {
      advance();
      ast.select_all = true;
      return;
    }
    for (;;) {
      std::string name = expect_identifier("expected column name or * in select list");
      if (peek().kind == TokenKind::LParen) {
        throw ParseError("unsupported feature: expressions in the select list", peek().offset);
      }
      ast.select_list.push_back(std::move(name));
      if (peek().kind != TokenKind::Comma) {
        break;
      }
      advance();
    }
  }

  void reject_unsupported_after_from() {
    const Token &tok = peek();
    if (tok.kind == TokenKind::Comma) {
      throw ParseError("unsupported feature: multiple tables in FROM (joins)", tok.offset);
    }
    if (tok.is_keyword(Keyword::Join)) {
      throw ParseError("unsupported feature: JOIN", tok.offset);
    }
  }

  std::unique_ptr<PredicateAst> parse_or() {
    auto node = parse_and();
    while (accept_keyword(Keyword::Or)) {
      auto parent = std::make_unique<PredicateAst>();
      parent->kind = PredicateAst::Kind::Or;
      parent->left = std::move(node);
      parent->right = parse_and();
      node = std::move(parent);
    }
    return node;
  }

  std::unique_ptr<PredicateAst> parse_and() {
    auto node = parse_not();
    while (accept_keyword(Keyword::And)) {
      auto parent = std::make_unique<PredicateAst>();
      parent->kind = PredicateAst::Kind::And;
      parent->left = std::move(node);
      parent->right = parse_not();
      node = std::move(parent);
    }
    return node;
  }

  std::unique_ptr<PredicateAst> parse_not() {
    if (accept_keyword(Keyword::Not)) {
      auto node = std::make_unique<PredicateAst>();
      node->kind = PredicateAst::Kind::Not;
      node->left = parse_not();
      return node;
    }
    return parse_primary();
  }

  std::unique_ptr<PredicateAst> parse_primary() {
    if (peek().kind == TokenKind::LParen) {
      advance();
      auto node = parse_or();
      if (peek().kind != TokenKind::RParen) {
        throw ParseError("expected ')'", peek().offset);
      }
      advance();
      return node;
    }
    return parse_comparison();
  }

  std::unique_ptr<PredicateAst> parse_comparison() {
    auto node = std::make_unique<PredicateAst>();
    node->kind = PredicateAst::Kind::Comparison;
    const Token &first = peek();
    if (first.kind == TokenKind::Identifier) {
      node->column = first.text;
      advance();
      node->op = expect_cmp_op();
      node->literal = expect_literal();
    } else {
      // literal <op> column normalizes to column <flipped-op> literal
      Value literal = expect_literal();
      CmpOp op = expect_cmp_op();
      node->column = expect_identifier("expected column name in comparison");
      node->op = flip(op);
      node->literal = std::move(literal);
    }
    return node;
  }

  static CmpOp flip(CmpOp op) {
    switch (op) {
      case CmpOp::Lt: return CmpOp::Gt;
      case CmpOp::LtEq: return CmpOp::GtEq;
      case CmpOp::Gt: return CmpOp::Lt;
      case CmpOp::GtEq: return CmpOp::LtEq;
      default: return op;
    }
  }

  CmpOp expect_cmp_op() {
    const Token &tok = peek();
    switch (tok.kind) {
      case TokenKind::Eq: advance(); return CmpOp::Eq;
      case TokenKind::NotEq: advance(); return CmpOp::NotEq;
      case TokenKind::Lt: advance(); return CmpOp::Lt;
      case TokenKind::LtEq: advance(); return CmpOp::LtEq;
      case TokenKind::Gt: advance(); return CmpOp::Gt;
      case TokenKind::GtEq: advance(); return CmpOp::GtEq;
      default:
        throw ParseError("expected comparison operator, got '" + tok.text + "'", tok.offset);
    }
  }

  Value expect_literal() {
    const Token &tok = peek();
    switch (tok.kind) {
      case TokenKind::IntLiteral:
        advance();
        return Value::integer(tok.int_value);
      case TokenKind::FloatLiteral:
        advance();
        return Value::floating(tok.float_value);
      case TokenKind::StringLiteral:
        advance();
        return Value::text(tok.string_value);
      case TokenKind::BoolLiteral:
        advance();
        return Value::boolean(tok.bool_value);
      case TokenKind::Minus: {
        advance();
        const Token &num = peek();
        if (num.kind == TokenKind::IntLiteral) {
          advance();
          return Value::integer(-num.int_value);
        }
        if (num.kind == TokenKind::FloatLiteral) {
          advance();
          return Value::floating(-num.float_value);
        }
        throw ParseError("expected numeric literal after '-'", num.offset);
      }
      case TokenKind::Plus: {
        advance();
        const Token &num = peek();
        if (num.kind == TokenKind::IntLiteral) {
          advance();
          return Value::integer(num.int_value);
        }
        if (num.kind == TokenKind::FloatLiteral) {
          advance();
          return Value::floating(num.float_value);
        }
        throw ParseError("expected numeric literal after '+'", num.offset);
      }
      default:
        throw ParseError("expected literal, got '" + tok.text + "'", tok.offset);
    }
  }

  SkylineClauseAst parse_skyline_clause() {
    expect_keyword(Keyword::Of, "expected OF after SKYLINE");
    SkylineClauseAst clause;
    if (accept_keyword(Keyword::Distinct)) {
      clause.distinct = true;
    }
    if (accept_keyword(Keyword::Complete)) {
      clause.complete = true;
    }
    if (peek().is_keyword(Keyword::Distinct)) {
      throw ParseError(clause.distinct ? "duplicate DISTINCT"
                                       : "DISTINCT must come before COMPLETE",
                       peek().offset);
    }
    if (peek().is_keyword(Keyword::Complete)) {
      throw ParseError("duplicate COMPLETE", peek().offset);
    }
    for (;;) {
      std::string column = expect_identifier("expected skyline dimension (column name)");
      const Token &kind_tok = peek();
      DimKind kind;
      if (kind_tok.is_keyword(Keyword::Min)) {
        kind = DimKind::Min;
      } else if (kind_tok.is_keyword(Keyword::Max)) {
        kind = DimKind::Max;
      } else if (kind_tok.is_keyword(Keyword::Diff)) {
        kind = DimKind::Diff;
      } else {
        throw ParseError("expected MIN, MAX or DIFF after skyline dimension '" + column + "'",
                         kind_tok.offset);
      }
      advance();
      clause.items.emplace_back(std::move(column), kind);
      if (peek().kind != TokenKind::Comma) {
        break;
      }
      advance();
    }
    return clause;
  }

  const Token &peek() const { return tokens_[pos_]; }
  void advance() {
    if (tokens_[pos_].kind != TokenKind::End) {
      ++pos_;
    }
  }

  bool accept_keyword(Keyword kw) {
    if (peek().is_keyword(kw)) {
      advance();
      return true;
    }
    return false;
  }

  void expect_keyword(Keyword kw, const char *message) {
    const Token &tok = peek();
    if (!tok.is_keyword(kw)) {
      if (tok.is_keyword(Keyword::Group)) {
        throw ParseError("unsupported feature: GROUP BY", tok.offset);
      }
      if (tok.is_keyword(Keyword::Having)) {
        throw ParseError("unsupported feature: HAVING", tok.offset);
      }
      throw ParseError(std::string(message) + ", got '" + tok.text + "'", tok.offset);
    }
    advance();
  }

  std::string expect_identifier(const char *message) {
    const Token &tok = peek();
    if (tok.kind != TokenKind::Identifier) {
      if (tok.is_keyword(Keyword::Group)) {
        throw ParseError("unsupported feature: GROUP BY", tok.offset);
      }
      if (tok.is_keyword(Keyword::Having)) {
        throw ParseError("unsupported feature: HAVING", tok.offset);
      }
      if (tok.is_keyword(Keyword::Join)) {
        throw ParseError("unsupported feature: JOIN", tok.offset);
      }
      throw ParseError(std::string(message) + ", got '" + tok.text + "'", tok.offset);
    }
    std::string name = tok.text;
    advance();
    return name;
  }

  const std::vector<Token> &tokens_;
  size_t pos_ = 0;
};

}  // namespace

QueryAst parse(const std::vector<Token> &tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::End) {
    throw EngineDefect("token stream must end with an End token");
  }
  Parser parser(tokens);
  return parser.parse_query();
}

QueryAst parse_query(std::string_view text) { return parse(tokenize(text)); }

}  // namespace skyline
