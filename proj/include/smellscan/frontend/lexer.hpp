#pragma once

#include <smellscan/error.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace smellscan::frontend {

enum class TokenKind : std::uint8_t {
    Keyword,
    Identifier,
    Literal,
    Operator,
    Separator,
    Comment,
    Whitespace,
};

std::string_view to_string(TokenKind kind);

/// One lexeme of Java source. Lines and columns are 1-based; columns count
/// bytes, so a multi-byte UTF-8 character advances the column by its width.
struct Token {
    TokenKind kind;
    std::string lexeme;
    int line = 1;
    int column = 1;

    bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
    bool is_trivia() const { return kind == TokenKind::Comment || kind == TokenKind::Whitespace; }

    friend bool operator==(const Token&, const Token&) = default;
};

class LexError : public Error {
public:
    LexError(int line, int column, const std::string& message)
        : Error(message), line_(line), column_(column)
    {
    }

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Splits Java source into tokens. Whitespace and comments are kept, so the
/// concatenation of all lexemes reproduces `source` exactly.
///
/// `>` is always emitted as a single-character operator (along with `>=`);
/// shift operators are reassembled by the parser from adjacent tokens so that
/// nested generic argument lists close cleanly.
///
/// Throws LexError on unterminated strings, characters, text blocks or block
/// comments, and on bytes that cannot start any token.
std::vector<Token> tokenize(std::string_view source);

bool is_java_keyword(std::string_view word);

} // namespace smellscan::frontend
