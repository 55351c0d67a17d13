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
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace skyline {

enum class Keyword : uint8_t {
  Select, From, Where, Skyline, Of, Distinct, Complete,
  Min, Max, Diff, Order, By, And, Or, Not, Asc, Desc,
  // Recognized only to reject them with a targeted message.
  Group, Having, Join,
};

const char *keyword_name(Keyword kw);

enum class TokenKind : uint8_t {
  KeywordTok, Identifier, IntLiteral, FloatLiteral, StringLiteral, BoolLiteral,
  Comma, Star, LParen, RParen, Semicolon,
  Eq, NotEq, Lt, LtEq, Gt, GtEq, Minus, Plus,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  size_t offset = 0;     // byte offset into the query text
  std::string text;      // original spelling (identifiers keep their case)
  Keyword keyword = Keyword::Select;
  int64_t int_value = 0;
  double float_value = 0.0;
  bool bool_value = false;
  std::string string_value;

  bool is_keyword(Keyword kw) const { return kind == TokenKind::KeywordTok && keyword == kw; }
};

/// Splits query text into tokens. Keywords are case-insensitive; TRUE/FALSE
/// become bool literals. String literals are single-quoted with '' as the
/// escape for a quote. Throws ParseError with the byte offset on illegal
/// input. The last token is always TokenKind::End.
std::vector<Token> tokenize(std::string_view text);

}  // namespace skyline
