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

#include "hmiforge/core/lexer.hpp"

#include <algorithm>
#include <cctype>

namespace hmiforge {

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::identifier:
      return "identifier";
    case TokenKind::string:
      return "string";
    case TokenKind::lbrace:
      return "'{'";
    case TokenKind::rbrace:
      return "'}'";
    case TokenKind::lparen:
      return "'('";
    case TokenKind::rparen:
      return "')'";
    case TokenKind::comma:
      return "','";
    case TokenKind::equals:
      return "'='";
    case TokenKind::arrow:
      return "'->'";
    case TokenKind::amp:
      return "'&'";
    case TokenKind::pipe:
      return "'|'";
    case TokenKind::bang:
      return "'!'";
    case TokenKind::end:
      return "end of input";
  }
  return "token";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Scanner {
 public:
  Scanner(std::string_view src, const std::string& file, Diagnostics& diags)
      : src_(src), file_(file), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      const int line = line_, col = col_;
      const char c = src_[pos_];
      if (ident_start(c)) {
        std::string text;
        while (pos_ < src_.size() && ident_char(src_[pos_])) text += advance();
        out.push_back(token(TokenKind::identifier, std::move(text), line, col));
      } else if (c == '"') {
        if (auto s = string_literal(line, col)) out.push_back(std::move(*s));
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        advance();
        advance();
        out.push_back(token(TokenKind::arrow, "->", line, col));
      } else if (auto kind = punct(c)) {
        advance();
        out.push_back(token(*kind, std::string(1, c), line, col));
      } else {
        advance();
        diags_.push_back(make_error(codes::kSyntax,
                                    std::string("unexpected character '") + c + "'",
                                    SourceSpan{file_, line, col, line, col}));
      }
    }
    Token eof;
    eof.kind = TokenKind::end;
    eof.span = SourceSpan{file_, line_, col_, line_, col_};
    out.push_back(std::move(eof));
    return out;
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    last_line_ = line_;
    last_col_ = col_;
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  static std::optional<TokenKind> punct(char c) {
    switch (c) {
      case '{':
        return TokenKind::lbrace;
      case '}':
        return TokenKind::rbrace;
      case '(':
        return TokenKind::lparen;
      case ')':
        return TokenKind::rparen;
      case ',':
        return TokenKind::comma;
      case '=':
        return TokenKind::equals;
      case '&':
        return TokenKind::amp;
      case '|':
        return TokenKind::pipe;
      case '!':
        return TokenKind::bang;
      default:
        return std::nullopt;
    }
  }

  std::optional<Token> string_literal(int line, int col) {
    advance();  // opening quote
    std::string value;
    while (pos_ < src_.size()) {
      const char c = advance();
      if (c == '"') return token(TokenKind::string, std::move(value), line, col);
      if (c == '\n') break;
      if (c == '\\') {
        if (pos_ >= src_.size()) break;
        const char e = advance();
        if (e != '"' && e != '\\') {
          diags_.push_back(make_error(codes::kSyntax,
                                      std::string("unsupported escape '\\") + e + "' in string",
                                      SourceSpan{file_, last_line_, last_col_ - 1, last_line_,
                                                 last_col_}));
        }
        value += e;
        continue;
      }
      value += c;
    }
    diags_.push_back(make_error(codes::kSyntax, "unterminated string literal",
                                SourceSpan{file_, line, col, line, col}));
    return std::nullopt;
  }

  Token token(TokenKind kind, std::string text, int line, int col) const {
    return Token{kind, std::move(text), SourceSpan{file_, line, col, last_line_, last_col_}};
  }

  std::string_view src_;
  const std::string& file_;
  Diagnostics& diags_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int last_line_ = 1;
  int last_col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, const std::string& file,
                            Diagnostics& diagnostics) {
  return Scanner(source, file, diagnostics).run();
}

bool is_identifier(std::string_view text) {
  if (text.empty() || !ident_start(text.front())) return false;
  return std::all_of(text.begin(), text.end(), ident_char);
}

TokenStream::TokenStream(std::vector<Token> tokens, std::vector<std::string_view> reserved)
    : tokens_(std::move(tokens)), reserved_(std::move(reserved)) {}

const Token& TokenStream::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

const Token& TokenStream::previous() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::at_keyword(std::string_view keyword) const {
  return peek().kind == TokenKind::identifier && peek().text == keyword;
}

bool TokenStream::is_reserved(std::string_view word) const {
  return std::find(reserved_.begin(), reserved_.end(), word) != reserved_.end();
}

Token TokenStream::expect(TokenKind kind, std::string_view what) {
  if (!at(kind)) {
    fail("expected " + std::string(what) + ", found " + std::string(describe(peek().kind)) +
         (peek().text.empty() ? "" : " '" + peek().text + "'"));
  }
  return next();
}

Token TokenStream::expect_keyword(std::string_view keyword) {
  if (!at_keyword(keyword)) {
    fail("expected '" + std::string(keyword) + "', found " +
         (peek().text.empty() ? std::string(describe(peek().kind)) : "'" + peek().text + "'"));
  }
  return next();
}

Token TokenStream::expect_name(std::string_view what) {
  Token t = expect(TokenKind::identifier, what);
  if (is_reserved(t.text)) fail_at(t, "'" + t.text + "' is a reserved word and cannot name " +
                                          std::string(what));
  return t;
}

bool TokenStream::accept(TokenKind kind) {
  if (!at(kind)) return false;
  next();
  return true;
}

bool TokenStream::accept_keyword(std::string_view keyword) {
  if (!at_keyword(keyword)) return false;
  next();
  return true;
}

void TokenStream::fail(std::string message) const { fail_at(peek(), std::move(message)); }

void TokenStream::fail_at(const Token& token, std::string message) const {
  throw SyntaxError(make_error(codes::kSyntax, std::move(message), token.span));
}

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace hmiforge
