#pragma once

#include <smellscan/frontend/parser.hpp>
#include <smellscan/model/model.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace smellscan::testing {

/// Directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir()
    {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("smellscan-test-" + std::to_string(rd()) + "-" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
}

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_tree(const std::filesystem::path& root, const std::map<std::string, std::string>& files)
{
    for (const auto& [rel, text] : files) write_file(root / rel, text);
}

inline ast::CompilationUnit parse_ok(const std::string& source, const std::string& path = "T.java")
{
    frontend::ParseResult r = frontend::parse_source(source, path);
    if (auto* f = std::get_if<frontend::ParseFailure>(&r)) {
        throw std::runtime_error(path + ":" + std::to_string(f->line) + ":" + std::to_string(f->column) +
                                 ": " + f->message);
    }
    return std::get<ast::CompilationUnit>(std::move(r));
}

/// Parses `files` (path → source), builds and resolves the model.
inline model::SourceModel model_of(const std::map<std::string, std::string>& files)
{
    std::vector<ast::CompilationUnit> units;
    for (const auto& [path, text] : files) units.push_back(parse_ok(text, path));
    model::BuildResult built = model::build_model(std::move(units));
    if (!built.errors.empty()) throw std::runtime_error(built.errors.front().message);
    return model::resolve_references(std::move(built.model));
}

/// A random method body whose decision points were counted while it was
/// being generated, independently of the parser.
struct GeneratedBody {
    std::string source;  // a complete compilation unit with one method
    int decision_points = 0;
    int statements = 0;
};

class BodyGenerator {
public:
    explicit BodyGenerator(std::uint32_t seed) : rng_(seed) {}

    GeneratedBody next(int max_statements = 20)
    {
        budget_ = 1 + pick(max_statements);
        points_ = 0;
        statements_ = 0;
        std::string body = block(0);
        GeneratedBody g;
        g.source = "class Gen {\n"
                   "    int x; int y; int[] arr; boolean a, b, c, d;\n"
                   "    void m(Object o) " + body + "\n}\n";
        g.decision_points = points_;
        g.statements = statements_;
        return g;
    }

private:
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    // Boolean expression; counts each && and || it emits.
    std::string condition(int depth)
    {
        switch (depth > 2 ? pick(3) : pick(7)) {
        case 0: return "a";
        case 1: return "x > " + std::to_string(pick(9));
        case 2: return "o instanceof String";
        case 3: ++points_; return condition(depth + 1) + " && " + condition(depth + 1);
        case 4: ++points_; return "(" + condition(depth + 1) + " || " + condition(depth + 1) + ")";
        case 5: return "!(" + condition(depth + 1) + ")";
        default: ++points_; return "(" + condition(depth + 1) + " ? b : c)";
        }
    }

    std::string block(int depth)
    {
        std::string out = "{\n";
        const int n = 1 + pick(3);
        for (int i = 0; i < n && budget_ > 0; ++i) out += statement(depth + 1);
        return out + "}";
    }

    std::string statement(int depth)
    {
        --budget_;
        ++statements_;
        const int choice = depth > 4 ? pick(4) : pick(15);
        switch (choice) {
        case 0: return "x = x + 1;\n";
        case 1: ++points_; return "y = (" + condition(0) + ") ? 1 : 2;\n";
        case 2: return "String s = \"if (a && b) || c ? d : e\"; // while (a || b)\n";
        case 3: return "/* for (;;) { if (a && b) {} } */ x++;\n";
        case 4: ++points_; return "if (" + condition(0) + ") " + block(depth) + "\n";
        case 5:
            ++points_;
            return "if (" + condition(0) + ") " + block(depth) + " else " + block(depth) + "\n";
        case 6: {
            points_ += 2;
            std::string c1 = condition(0);
            std::string c2 = condition(0);
            return "if (" + c1 + ") " + block(depth) + " else if (" + c2 + ") " + block(depth) + "\n";
        }
        case 7: ++points_; return "while (" + condition(0) + ") " + block(depth) + "\n";
        case 8: {
            ++points_;
            std::string c = condition(0);
            return "for (int i = 0; " + c + "; i++) " + block(depth) + "\n";
        }
        case 9: ++points_; return "for (int v : arr) " + block(depth) + "\n";
        case 10: {
            ++points_;
            std::string body = block(depth);
            return "do " + body + " while (" + condition(0) + ");\n";
        }
        case 11: {
            // case 1: / case 2, 3: / default: — one point per non-default label
            const int arms = 1 + pick(3);
            std::string out = "switch (x) {\n";
            int label = 0;
            for (int i = 0; i < arms; ++i) {
                const bool pair = pick(2) == 0;
                out += "case " + std::to_string(++label);
                ++points_;
                if (pair) {
                    out += ", " + std::to_string(++label);
                    ++points_;
                }
                out += ": x = " + std::to_string(i) + "; break;\n";
            }
            if (pick(2) == 0) out += "default: x = 0;\n";
            return out + "}\n";
        }
        case 12: {
            const int catches = 1 + pick(2);
            points_ += catches;
            std::string out = "try " + block(depth);
            out += " catch (IllegalStateException e) " + block(depth);
            if (catches == 2) out += " catch (RuntimeException e) " + block(depth);
            if (pick(2) == 0) out += " finally { x = 0; }";
            return out + "\n";
        }
        case 13: {
            // Lambda bodies are separate units: nothing inside counts.
            const int saved = points_;
            std::string inner = block(depth);
            points_ = saved;
            return "Runnable r = () -> " + inner + ";\n";
        }
        default: {
            const int saved = points_;
            std::string inner = block(depth);
            points_ = saved;
            return "Object an = new Object() { public String toString() " + inner.substr(0, inner.size() - 1) +
                   "return \"\"; } };\n";
        }
        }
    }

    std::mt19937 rng_;
    int budget_ = 0;
    int points_ = 0;
    int statements_ = 0;
};

/// Random directed graph on `n` vertices as adjacency lists (self-loops allowed).
inline std::vector<std::vector<std::size_t>> random_digraph(std::mt19937& rng, std::size_t n, double density)
{
    std::bernoulli_distribution edge(density);
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (edge(rng)) adj[u].push_back(v);
        }
    }
    return adj;
}

/// Vertices lying on a directed cycle that passes through another vertex,
/// found by enumerating simple paths from every vertex back to itself.
inline std::vector<bool> brute_force_cycle_members(const std::vector<std::vector<std::size_t>>& adj)
{
    const std::size_t n = adj.size();
    std::vector<bool> member(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (member[start]) continue;
        // Depth-first enumeration of simple paths start -> ... -> start of length >= 2.
        std::vector<std::size_t> path{start};
        std::vector<bool> on_path(n, false);
        on_path[start] = true;
        std::vector<std::size_t> next_slot{0};
        while (!path.empty()) {
            const std::size_t v = path.back();
            std::size_t& slot = next_slot.back();
            if (slot == adj[v].size()) {
                on_path[v] = false;
                path.pop_back();
                next_slot.pop_back();
                continue;
            }
            const std::size_t w = adj[v][slot++];
            if (w == start && path.size() >= 2) {
                for (std::size_t p : path) member[p] = true;
                continue;
            }
            if (on_path[w]) continue;
            on_path[w] = true;
            path.push_back(w);
            next_slot.push_back(0);
        }
    }
    return member;
}

/// Published suspected / confirmed counts per smell, report order.
struct PrecisionRow {
    long long suspected;
    long long confirmed;
    double published_percent;
};

inline const std::array<PrecisionRow, 9> kPublishedPrecisionS5 = {{
    {60, 56, 93.3}, {4, 3, 75.0}, {17, 16, 94.1}, {19, 19, 100.0}, {2, 2, 100.0},
    {8, 8, 100.0}, {2, 1, 50.0}, {3, 2, 66.7}, {2, 1, 50.0},
}};

inline const std::array<PrecisionRow, 9> kPublishedPrecisionS11 = {{
    {103, 89, 86.4}, {47, 43, 91.5}, {0, 0, 100.0}, {33, 27, 81.8}, {38, 33, 86.8},
    {12, 12, 100.0}, {18, 17, 94.4}, {0, 0, 100.0}, {0, 0, 100.0},
}};

/// Published per-system smell counts, smells in report order.
inline const std::map<std::string, std::array<long long, 9>> kPublishedCounts = {
    {"S3", {164, 7, 49, 39, 23, 4, 3, 3, 0}},
    {"S6", {69, 9, 31, 33, 0, 3, 1, 3, 0}},
    {"S4", {96, 28, 24, 49, 17, 5, 3, 7, 1}},
    {"S5", {56, 3, 16, 19, 2, 8, 1, 2, 0}},
    {"S1", {99, 22, 21, 24, 5, 0, 2, 6, 1}},
    {"S2", {341, 38, 41, 62, 102, 26, 1, 4, 3}},
    {"S7", {884, 189, 47, 18, 252, 76, 18, 3, 0}},
    {"S9", {104, 62, 6, 21, 34, 15, 20, 1, 2}},
    {"S10", {114, 48, 4, 29, 30, 11, 13, 0, 0}},
    {"S8", {56, 41, 0, 16, 27, 14, 11, 0, 0}},
    {"S11", {89, 43, 0, 27, 33, 12, 17, 0, 0}},
};

/// The S5 vector used by the summary example (Missing Hierarchy = 1).
inline const std::array<long long, 9> kSummaryS5 = {56, 3, 16, 19, 2, 8, 1, 2, 1};

} // namespace smellscan::testing
