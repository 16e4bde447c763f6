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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hmiforge/core/diagnostic.hpp"

namespace hmiforge {

enum class TokenKind {
  identifier,
  string,  // text holds the unescaped value
  lbrace,
  rbrace,
  lparen,
  rparen,
  comma,
  equals,
  arrow,
  amp,
  pipe,
  bang,
  end,
};

std::string_view describe(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  SourceSpan span;
};

/// Shared lexical layer of every hmiforge notation: identifiers
/// `[A-Za-z_][A-Za-z0-9_]*`, double-quoted strings with `\"` and `\\`
/// escapes, `//` line comments, and the punctuation `{ } ( ) , = -> & | !`.
/// Lexical errors are appended to `diagnostics` as E_SYNTAX and the offending
/// character is skipped. The result always ends with a TokenKind::end token.
std::vector<Token> tokenize(std::string_view source, const std::string& file,
                            Diagnostics& diagnostics);

bool is_identifier(std::string_view text);

/// Thrown by TokenStream on the first grammar violation; parsers catch it at
/// their entry point and turn it into the returned diagnostic list.
class SyntaxError : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

class TokenStream {
 public:
  TokenStream(std::vector<Token> tokens, std::vector<std::string_view> reserved);

  const Token& peek(std::size_t ahead = 0) const;
  const Token& previous() const;
  Token next();

  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view keyword) const;
  bool at_end() const { return at(TokenKind::end); }

  Token expect(TokenKind kind, std::string_view what);
  Token expect_keyword(std::string_view keyword);
  /// An identifier that is not one of the notation's reserved words.
  Token expect_name(std::string_view what);
  bool accept(TokenKind kind);
  bool accept_keyword(std::string_view keyword);

  [[noreturn]] void fail(std::string message) const;
  [[noreturn]] void fail_at(const Token& token, std::string message) const;

  bool is_reserved(std::string_view word) const;

 private:
  std::vector<Token> tokens_;
  std::vector<std::string_view> reserved_;
  std::size_t pos_ = 0;
};

/// Canonical quoting for pretty printers: the inverse of string lexing.
std::string quote(std::string_view text);

}  // namespace hmiforge
