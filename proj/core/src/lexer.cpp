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
#include "skyline/lexer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "skyline/error.hpp"
#include "skyline/value.hpp"

namespace skyline {

const char *keyword_name(Keyword kw) {
  switch (kw) {
    case Keyword::Select: return "SELECT";
    case Keyword::From: return "FROM";
    case Keyword::Where: return "WHERE";
    case Keyword::Skyline: return "SKYLINE";
    case Keyword::Of: return "OF";
    case Keyword::Distinct: return "DISTINCT";
    case Keyword::Complete: return "COMPLETE";
    case Keyword::Min: return "MIN";
    case Keyword::Max: return "MAX";
    case Keyword::Diff: return "DIFF";
    case Keyword::Order: return "ORDER";
    case Keyword::By: return "BY";
    case Keyword::And: return "AND";
    case Keyword::Or: return "OR";
    case Keyword::Not: return "NOT";
    case Keyword::Asc: return "ASC";
    case Keyword::Desc: return "DESC";
    case Keyword::Group: return "GROUP";
    case Keyword::Having: return "HAVING";
    case Keyword::Join: return "JOIN";
  }
  return "?";
}

namespace {

const std::unordered_map<std::string, Keyword> &keyword_table() {
  static const std::unordered_map<std::string, Keyword> table = {
      {"select", Keyword::Select},   {"from", Keyword::From},
      {"where", Keyword::Where},     {"skyline", Keyword::Skyline},
      {"of", Keyword::Of},           {"distinct", Keyword::Distinct},
      {"complete", Keyword::Complete}, {"min", Keyword::Min},
      {"max", Keyword::Max},         {"diff", Keyword::Diff},
      {"order", Keyword::Order},     {"by", Keyword::By},
      {"and", Keyword::And},         {"or", Keyword::Or},
      {"not", Keyword::Not},         {"asc", Keyword::Asc},
      {"desc", Keyword::Desc},       {"group", Keyword::Group},
      {"having", Keyword::Having},   {"join", Keyword::Join},
  };
  return table;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_part(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t pos = 0;
  auto push = [&](TokenKind kind, size_t offset, std::string spelled) {
    Token tok;
    tok.kind = kind;
    tok.offset = offset;
    tok.text = std::move(spelled);
    tokens.push_back(std::move(tok));
    return &tokens.back();
  };

  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
      continue;
    }
    size_t start = pos;

    if (is_ident_start(c)) {
      while (pos < text.size() && is_ident_part(text[pos])) {
        ++pos;
      }
      std::string word(text.substr(start, pos - start));
      std::string lowered = to_lower(word);
      if (lowered == "true" || lowered == "false") {
        Token *tok = push(TokenKind::BoolLiteral, start, std::move(word));
        tok->bool_value = (lowered == "true");
      } else if (auto it = keyword_table().find(lowered); it != keyword_table().end()) {
        Token *tok = push(TokenKind::KeywordTok, start, std::move(word));
        tok->keyword = it->second;
      } else {
        push(TokenKind::Identifier, start, std::move(word));
      }
      continue;
    }

    if (is_digit(c)) {
      bool is_float = false;
      while (pos < text.size() && is_digit(text[pos])) {
        ++pos;
      }
      if (pos < text.size() && text[pos] == '.') {
        is_float = true;
        ++pos;
        while (pos < text.size() && is_digit(text[pos])) {
          ++pos;
        }
      }
      if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        size_t exp_start = pos + 1;
        size_t probe = exp_start;
        if (probe < text.size() && (text[probe] == '+' || text[probe] == '-')) {
          ++probe;
        }
        if (probe < text.size() && is_digit(text[probe])) {
          is_float = true;
          pos = probe;
          while (pos < text.size() && is_digit(text[pos])) {
            ++pos;
          }
        }
        (void)exp_start;
      }
      std::string spelled(text.substr(start, pos - start));
      if (is_float) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(spelled.data(), spelled.data() + spelled.size(), v);
        if (ec != std::errc{} || ptr != spelled.data() + spelled.size() || std::isnan(v)) {
          throw ParseError("invalid float literal '" + spelled + "'", start);
        }
        Token *tok = push(TokenKind::FloatLiteral, start, std::move(spelled));
        tok->float_value = v;
      } else {
        int64_t v = 0;
        auto [ptr, ec] = std::from_chars(spelled.data(), spelled.data() + spelled.size(), v);
        if (ec != std::errc{} || ptr != spelled.data() + spelled.size()) {
          throw ParseError("integer literal '" + spelled + "' out of range", start);
        }
        Token *tok = push(TokenKind::IntLiteral, start, std::move(spelled));
        tok->int_value = v;
      }
      continue;
    }

    if (c == '\'') {
      std::string content;
      ++pos;
      bool closed = false;
      while (pos < text.size()) {
        if (text[pos] == '\'') {
          if (pos + 1 < text.size() && text[pos + 1] == '\'') {
            content.push_back('\'');
            pos += 2;
            continue;
          }
          ++pos;
          closed = true;
          break;
        }
        content.push_back(text[pos]);
        ++pos;
      }
      if (!closed) {
        throw ParseError("unterminated string literal", start);
      }
      Token *tok = push(TokenKind::StringLiteral, start, std::string(text.substr(start, pos - start)));
      tok->string_value = std::move(content);
      continue;
    }

    switch (c) {
      case ',': push(TokenKind::Comma, start, ","); ++pos; continue;
      case '*': push(TokenKind::Star, start, "*"); ++pos; continue;
      case '(': push(TokenKind::LParen, start, "("); ++pos; continue;
      case ')': push(TokenKind::RParen, start, ")"); ++pos; continue;
      case ';': push(TokenKind::Semicolon, start, ";"); ++pos; continue;
      case '=': push(TokenKind::Eq, start, "="); ++pos; continue;
      case '+': push(TokenKind::Plus, start, "+"); ++pos; continue;
      case '-': push(TokenKind::Minus, start, "-"); ++pos; continue;
      case '<':
        if (pos + 1 < text.size() && text[pos + 1] == '=') {
          push(TokenKind::LtEq, start, "<=");
          pos += 2;
        } else if (pos + 1 < text.size() && text[pos + 1] == '>') {
          push(TokenKind::NotEq, start, "<>");
          pos += 2;
        } else {
          push(TokenKind::Lt, start, "<");
          ++pos;
        }
        continue;
      case '>':
        if (pos + 1 < text.size() && text[pos + 1] == '=') {
          push(TokenKind::GtEq, start, ">=");
          pos += 2;
        } else {
          push(TokenKind::Gt, start, ">");
          ++pos;
        }
        continue;
      case '!':
        if (pos + 1 < text.size() && text[pos + 1] == '=') {
          push(TokenKind::NotEq, start, "!=");
          pos += 2;
          continue;
        }
        throw ParseError("unexpected character '!'", start);
      default:
        throw ParseError(std::string("illegal character '") + c + "'", start);
    }
  }

  push(TokenKind::End, text.size(), "");
  return tokens;
}

}  // namespace skyline
