#pragma once

#include <smellscan/frontend/ast.hpp>
#include <smellscan/frontend/lexer.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace smellscan::frontend {

struct ParseFailure {
    std::string path;
    int line = 1;
    int column = 1;
    std::string message;

    friend bool operator==(const ParseFailure&, const ParseFailure&) = default;
};

using ParseResult = std::variant<ast::CompilationUnit, ParseFailure>;

/// Recursive-descent parse of one file. Stops at the first syntax error.
/// Comment and whitespace tokens in `tokens` are skipped.
ParseResult parse_compilation_unit(std::span<const Token> tokens, const std::string& path);

/// tokenize + parse_compilation_unit, turning lexical errors into failures.
ParseResult parse_source(std::string_view source, const std::string& path);

struct ProjectParse {
    std::vector<ast::CompilationUnit> units;
    std::vector<ParseFailure> failures;
};

/// Parses every `.java` file below `root`, in lexicographic path order.
/// Files are parsed on `threads` workers (0 = hardware concurrency).
/// Throws ConfigError if `root` is not a readable directory.
ProjectParse parse_project(const std::filesystem::path& root, unsigned threads = 0);

} // namespace smellscan::frontend
