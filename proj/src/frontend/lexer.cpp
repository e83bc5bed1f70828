#include <smellscan/frontend/lexer.hpp>

#include <algorithm>
#include <array>

namespace smellscan::frontend {

namespace {

constexpr std::array<std::string_view, 51> kKeywords = {
    "abstract",   "assert",       "boolean",   "break",      "byte",     "case",
    "catch",      "char",         "class",     "const",      "continue", "default",
    "do",         "double",       "else",      "enum",       "extends",  "final",
    "finally",    "float",        "for",       "goto",       "if",       "implements",
    "import",     "instanceof",   "int",       "interface",  "long",     "native",
    "new",        "package",      "private",   "protected",  "public",   "return",
    "short",      "static",       "strictfp",  "super",      "switch",   "synchronized",
    "this",       "throw",        "throws",    "transient",  "try",      "void",
    "volatile",   "while",        "_",
};

// Longest first within each length class; `>` compounds other than `>=` are
// deliberately absent.
constexpr std::array<std::string_view, 20> kMultiCharOperators = {
    "<<=", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "<<", "->", "::",
};

bool is_ident_start(unsigned char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c)
{
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            out.push_back(next());
        }
        return out;
    }

private:
    char peek(std::size_t ahead = 0) const
    {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    bool starts_with(std::string_view text) const { return src_.substr(pos_).starts_with(text); }

    void advance(std::size_t n = 1)
    {
        for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
            char c = src_[pos_++];
            if (c == '\n' || (c == '\r' && peek() != '\n')) {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
        }
    }

    Token make(TokenKind kind, std::size_t begin, int line, int column) const
    {
        return Token{kind, std::string(src_.substr(begin, pos_ - begin)), line, column};
    }

    Token next()
    {
        const std::size_t begin = pos_;
        const int line = line_;
        const int column = column_;
        const char c = peek();

        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
            while (pos_ < src_.size()) {
                char w = peek();
                if (w != ' ' && w != '\t' && w != '\n' && w != '\r' && w != '\f') {
                    break;
                }
                advance();
            }
            return make(TokenKind::Whitespace, begin, line, column);
        }

        if (starts_with("//")) {
            while (pos_ < src_.size() && peek() != '\n' && peek() != '\r') {
                advance();
            }
            return make(TokenKind::Comment, begin, line, column);
        }

        if (starts_with("/*")) {
            advance(2);
            while (!starts_with("*/")) {
                if (pos_ >= src_.size()) {
                    throw LexError(line, column, "unterminated block comment");
                }
                advance();
            }
            advance(2);
            return make(TokenKind::Comment, begin, line, column);
        }

        if (starts_with("\"\"\"")) {
            advance(3);
            while (!starts_with("\"\"\"")) {
                if (pos_ >= src_.size()) {
                    throw LexError(line, column, "unterminated text block");
                }
                if (peek() == '\\') {
                    advance();
                }
                advance();
            }
            advance(3);
            return make(TokenKind::Literal, begin, line, column);
        }

        if (c == '"' || c == '\'') {
            advance();
            while (peek() != c) {
                if (pos_ >= src_.size() || peek() == '\n' || peek() == '\r') {
                    throw LexError(line, column,
                                   c == '"' ? "unterminated string literal"
                                            : "unterminated character literal");
                }
                if (peek() == '\\') {
                    advance();
                    if (pos_ >= src_.size()) {
                        continue;
                    }
                }
                advance();
            }
            advance();
            return make(TokenKind::Literal, begin, line, column);
        }

        if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
            lex_number();
            return make(TokenKind::Literal, begin, line, column);
        }

        if (is_ident_start(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(peek()))) {
                advance();
            }
            Token tok = make(TokenKind::Identifier, begin, line, column);
            if (tok.lexeme == "true" || tok.lexeme == "false" || tok.lexeme == "null") {
                tok.kind = TokenKind::Literal;
            } else if (is_java_keyword(tok.lexeme)) {
                tok.kind = TokenKind::Keyword;
            }
            return tok;
        }

        if (starts_with("...")) {
            advance(3);
            return make(TokenKind::Separator, begin, line, column);
        }
        for (std::string_view op : kMultiCharOperators) {
            if (starts_with(op)) {
                advance(op.size());
                return make(op == "::" ? TokenKind::Separator : TokenKind::Operator, begin, line,
                            column);
            }
        }
        if (std::string_view("(){}[];,.@").find(c) != std::string_view::npos) {
            advance();
            return make(TokenKind::Separator, begin, line, column);
        }
        if (std::string_view("=<>!~?:+-*/&|^%").find(c) != std::string_view::npos) {
            advance();
            return make(TokenKind::Operator, begin, line, column);
        }
        throw LexError(line, column, "unexpected character '" + std::string(1, c) + "'");
    }

    // Digits, radix prefixes, underscores, suffixes and exponents are all
    // ident-part bytes; a single '.' joins when it is not a member access.
    void lex_number()
    {
        const bool hex = peek() == '0' && (peek(1) == 'x' || peek(1) == 'X');
        bool seen_dot = false;
        while (pos_ < src_.size()) {
            const char d = peek();
            const bool exponent = hex ? (d == 'p' || d == 'P') : (d == 'e' || d == 'E');
            if (exponent && (peek(1) == '+' || peek(1) == '-')) {
                advance(2);
                continue;
            }
            if (d == '.') {
                if (seen_dot || is_ident_start(static_cast<unsigned char>(peek(1)))) {
                    break;
                }
                seen_dot = true;
                advance();
                continue;
            }
            if (!is_ident_part(static_cast<unsigned char>(d))) {
                break;
            }
            advance();
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

} // namespace

std::string_view to_string(TokenKind kind)
{
    switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Literal: return "literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Separator: return "separator";
    case TokenKind::Comment: return "comment";
    case TokenKind::Whitespace: return "whitespace";
    }
    return "unknown";
}

bool is_java_keyword(std::string_view word)
{
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source)
{
    return Lexer(source).run();
}

} // namespace smellscan::frontend
