#include <smellscan/frontend/parser.hpp>

#include <smellscan/error.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace smellscan::frontend {

namespace {

using namespace smellscan::ast;

class SyntaxError : public std::exception {
public:
    SyntaxError(SourcePos pos, std::string message) : pos_(pos), message_(std::move(message)) {}

    const char* what() const noexcept override { return message_.c_str(); }
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
    std::string message_;
};

constexpr std::array<std::string_view, 8> kPrimitiveTypes = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double",
};

constexpr std::array<std::string_view, 11> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=",
};

bool is_primitive(std::string_view word)
{
    return std::find(kPrimitiveTypes.begin(), kPrimitiveTypes.end(), word) != kPrimitiveTypes.end();
}

// Binary operator precedence, lowest first.
int binary_precedence(std::string_view op)
{
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof") return 7;
    if (op == "<<" || op == ">>" || op == ">>>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return 0;
}

constexpr int kMaxNesting = 400;

class Parser {
public:
    Parser(std::span<const Token> tokens, std::string path) : path_(std::move(path))
    {
        for (const Token& t : tokens) {
            if (!t.is_trivia()) {
                toks_.push_back(&t);
            }
        }
        eof_.kind = TokenKind::Separator;
        eof_.lexeme.clear();
        if (!toks_.empty()) {
            eof_.line = toks_.back()->line;
            eof_.column = toks_.back()->column;
        }
        if (!tokens.empty()) {
            const Token& last = tokens.back();
            line_count_ = last.line + static_cast<int>(std::count(last.lexeme.begin(),
                                                                  last.lexeme.end(), '\n'));
            if (!last.lexeme.empty() && last.lexeme.back() == '\n') {
                --line_count_;
            }
        }
    }

    CompilationUnit unit()
    {
        CompilationUnit cu;
        cu.path = path_;
        cu.line_count = line_count_;
        cu.span.begin = here();

        std::size_t save = pos_;
        bool override_marker = false;
        annotations(override_marker);
        if (at_kw("package")) {
            advance();
            cu.package_name = qualified_name();
            expect(";");
        } else {
            pos_ = save;
        }

        while (at_kw("import")) {
            advance();
            Import imp;
            if (at_kw("static")) {
                advance();
                imp.is_static = true;
            }
            imp.name = expect_ident().lexeme;
            while (at(".")) {
                advance();
                if (at("*")) {
                    advance();
                    imp.wildcard = true;
                    break;
                }
                imp.name += "." + expect_ident().lexeme;
            }
            expect(";");
            cu.imports.push_back(std::move(imp));
        }

        while (!eof()) {
            if (at(";")) {
                advance();
                continue;
            }
            SourcePos start = here();
            bool marker = false;
            Modifiers mods = modifiers(marker);
            if (!at_type_decl_start()) {
                fail(peek(), "expected class, interface or enum declaration");
            }
            cu.types.push_back(type_decl(mods, start));
        }
        cu.span.end = last_pos(cu.span.begin);
        return cu;
    }

private:
    // --- token access -----------------------------------------------------

    const Token& peek(std::size_t ahead = 0) const
    {
        return pos_ + ahead < toks_.size() ? *toks_[pos_ + ahead] : eof_;
    }

    bool eof() const { return pos_ >= toks_.size(); }

    SourcePos pos_of(const Token& t) const { return {t.line, t.column}; }
    SourcePos here() const { return pos_of(peek()); }

    SourcePos last_pos(SourcePos fallback) const
    {
        return pos_ == 0 ? fallback : pos_of(*toks_[pos_ - 1]);
    }

    const Token& advance()
    {
        const Token& t = peek();
        if (!eof()) {
            ++pos_;
        }
        return t;
    }

    static bool punct(const Token& t)
    {
        return t.kind == TokenKind::Operator || t.kind == TokenKind::Separator;
    }

    bool at(std::string_view text, std::size_t ahead = 0) const
    {
        const Token& t = peek(ahead);
        return punct(t) && t.lexeme == text && (ahead + pos_ < toks_.size());
    }

    bool at_kw(std::string_view word, std::size_t ahead = 0) const
    {
        return peek(ahead).is(TokenKind::Keyword, word);
    }

    bool at_ident(std::size_t ahead = 0) const
    {
        return peek(ahead).kind == TokenKind::Identifier;
    }

    bool at_contextual(std::string_view word, std::size_t ahead = 0) const
    {
        return peek(ahead).is(TokenKind::Identifier, word);
    }

    [[noreturn]] void fail(const Token& t, const std::string& message) const
    {
        std::string found = &t == &eof_ ? "end of file" : "'" + t.lexeme + "'";
        throw SyntaxError(pos_of(t), message + " but found " + found);
    }

    const Token& expect(std::string_view text)
    {
        if (!at(text)) {
            fail(peek(), "expected '" + std::string(text) + "'");
        }
        return advance();
    }

    const Token& expect_kw(std::string_view word)
    {
        if (!at_kw(word)) {
            fail(peek(), "expected '" + std::string(word) + "'");
        }
        return advance();
    }

    const Token& expect_ident()
    {
        if (!at_ident()) {
            fail(peek(), "expected identifier");
        }
        return advance();
    }

    bool adjacent(std::size_t ahead) const
    {
        const Token& a = peek(ahead);
        const Token& b = peek(ahead + 1);
        return pos_ + ahead + 1 < toks_.size() && a.line == b.line &&
               b.column == a.column + static_cast<int>(a.lexeme.size());
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : p_(p)
        {
            if (++p_.depth_ > kMaxNesting) {
                throw SyntaxError(p_.here(), "nesting too deep");
            }
        }
        ~DepthGuard() { --p_.depth_; }
        DepthGuard(const DepthGuard&) = delete;
        DepthGuard& operator=(const DepthGuard&) = delete;
        Parser& p_;
    };

    // --- names, annotations, modifiers ------------------------------------

    std::string qualified_name()
    {
        std::string name = expect_ident().lexeme;
        while (at(".") && at_ident(1)) {
            advance();
            name += "." + advance().lexeme;
        }
        return name;
    }

    void skip_balanced(std::string_view open, std::string_view close)
    {
        const Token& start = expect(open);
        int depth = 1;
        while (depth > 0) {
            if (eof()) {
                fail(start, "unbalanced '" + std::string(open) + "'");
            }
            if (at(open)) {
                ++depth;
            } else if (at(close)) {
                --depth;
            }
            advance();
        }
    }

    bool at_annotation() const { return at("@") && !at_kw("interface", 1); }

    void annotation(bool& override_marker)
    {
        expect("@");
        std::string name = qualified_name();
        if (name == "Override" || name == "java.lang.Override") {
            override_marker = true;
        }
        if (at("(")) {
            skip_balanced("(", ")");
        }
    }

    void annotations(bool& override_marker)
    {
        while (at_annotation()) {
            annotation(override_marker);
        }
    }

    Modifiers modifiers(bool& override_marker)
    {
        Modifiers mods;
        for (;;) {
            if (at_annotation()) {
                annotation(override_marker);
                continue;
            }
            const Token& t = peek();
            if (t.kind == TokenKind::Keyword) {
                static constexpr std::pair<std::string_view, Modifier> table[] = {
                    {"public", Modifier::Public},       {"protected", Modifier::Protected},
                    {"private", Modifier::Private},     {"static", Modifier::Static},
                    {"final", Modifier::Final},         {"abstract", Modifier::Abstract},
                    {"native", Modifier::Native},       {"synchronized", Modifier::Synchronized},
                    {"transient", Modifier::Transient}, {"volatile", Modifier::Volatile},
                    {"strictfp", Modifier::Strictfp},   {"default", Modifier::Default},
                };
                bool matched = false;
                for (auto [word, mod] : table) {
                    if (t.lexeme == word) {
                        if (mod == Modifier::Default && (at(":", 1) || at("->", 1))) {
                            break;
                        }
                        mods.add(mod);
                        advance();
                        matched = true;
                        break;
                    }
                }
                if (matched) {
                    continue;
                }
            }
            if (at_contextual("sealed") && (at_ident(1) || peek(1).kind == TokenKind::Keyword)) {
                mods.add(Modifier::Sealed);
                advance();
                continue;
            }
            if (at_contextual("non") && at("-", 1) && at_contextual("sealed", 2)) {
                mods.add(Modifier::NonSealed);
                advance();
                advance();
                advance();
                continue;
            }
            return mods;
        }
    }

    // --- types ----------------------------------------------------------

    bool at_type_decl_start() const
    {
        return at_kw("class") || at_kw("interface") || at_kw("enum") ||
               (at("@") && at_kw("interface", 1)) ||
               (at_contextual("record") && at_ident(1) && (at("(", 2) || at("<", 2)));
    }

    std::vector<TypeRef> type_args()
    {
        std::vector<TypeRef> args;
        expect("<");
        if (at(">")) {  // diamond
            advance();
            return args;
        }
        for (;;) {
            bool marker = false;
            annotations(marker);
            if (at("?")) {
                SourcePos p = here();
                advance();
                if (at_kw("extends") || at_kw("super")) {
                    advance();
                    args.push_back(type());
                } else {
                    TypeRef wildcard;
                    wildcard.name = "?";
                    wildcard.pos = p;
                    args.push_back(std::move(wildcard));
                }
            } else {
                args.push_back(type());
            }
            if (at(",")) {
                advance();
                continue;
            }
            break;
        }
        expect(">");
        return args;
    }

    TypeRef type()
    {
        DepthGuard guard(*this);
        bool marker = false;
        annotations(marker);
        TypeRef ref;
        ref.pos = here();
        if (peek().kind == TokenKind::Keyword && is_primitive(peek().lexeme)) {
            ref.name = advance().lexeme;
            ref.primitive = true;
        } else {
            ref.name = expect_ident().lexeme;
            if (at("<")) {
                auto args = type_args();
                ref.type_args.insert(ref.type_args.end(), args.begin(), args.end());
            }
            while (at(".") && (at_ident(1) || at("@", 1))) {
                advance();
                annotations(marker);
                ref.name += "." + expect_ident().lexeme;
                if (at("<")) {
                    auto args = type_args();
                    ref.type_args.insert(ref.type_args.end(), args.begin(), args.end());
                }
            }
        }
        array_dims(ref);
        return ref;
    }

    void array_dims(TypeRef& ref)
    {
        while (at("[") && at("]", 1)) {
            advance();
            advance();
            ++ref.array_dims;
        }
    }

    TypeRef type_or_void()
    {
        if (at_kw("void")) {
            TypeRef ref;
            ref.pos = here();
            ref.name = advance().lexeme;
            ref.primitive = true;
            return ref;
        }
        return type();
    }

    std::vector<TypeRef> type_list()
    {
        std::vector<TypeRef> list;
        list.push_back(type());
        while (at(",")) {
            advance();
            list.push_back(type());
        }
        return list;
    }

    std::vector<std::string> type_params()
    {
        std::vector<std::string> names;
        expect("<");
        for (;;) {
            bool marker = false;
            annotations(marker);
            names.push_back(expect_ident().lexeme);
            if (at_kw("extends")) {
                advance();
                type();
                while (at("&")) {
                    advance();
                    type();
                }
            }
            if (at(",")) {
                advance();
                continue;
            }
            break;
        }
        expect(">");
        return names;
    }

    // Speculatively parses a type starting at the current position.
    bool try_type(TypeRef* out = nullptr)
    {
        std::size_t save = pos_;
        try {
            TypeRef ref = type();
            if (out) {
                *out = std::move(ref);
            }
            return true;
        } catch (const SyntaxError&) {
            pos_ = save;
            return false;
        }
    }

    // --- declarations -----------------------------------------------------

    TypeDecl type_decl(Modifiers mods, SourcePos start)
    {
        DepthGuard guard(*this);
        TypeDecl decl;
        decl.modifiers = mods;
        decl.span.begin = start;

        if (at_kw("class")) {
            advance();
            decl.kind = TypeKind::Class;
            decl.name_pos = here();
            decl.name = expect_ident().lexeme;
            if (at("<")) decl.type_params = type_params();
            if (at_kw("extends")) {
                advance();
                decl.supertype = type();
            }
            if (at_kw("implements")) {
                advance();
                decl.interfaces = type_list();
            }
            permits();
            class_body(decl);
        } else if (at_kw("interface") || at("@")) {
            if (at("@")) {
                advance();
                decl.annotation_type = true;
            }
            expect_kw("interface");
            decl.kind = TypeKind::Interface;
            decl.name_pos = here();
            decl.name = expect_ident().lexeme;
            if (at("<")) decl.type_params = type_params();
            if (at_kw("extends")) {
                advance();
                decl.interfaces = type_list();
            }
            permits();
            class_body(decl);
        } else if (at_kw("enum")) {
            advance();
            decl.kind = TypeKind::Enum;
            decl.name_pos = here();
            decl.name = expect_ident().lexeme;
            if (at_kw("implements")) {
                advance();
                decl.interfaces = type_list();
            }
            enum_body(decl);
        } else if (at_contextual("record")) {
            advance();
            decl.kind = TypeKind::Class;
            decl.record = true;
            decl.name_pos = here();
            decl.name = expect_ident().lexeme;
            if (at("<")) decl.type_params = type_params();
            record_components(decl);
            if (at_kw("implements")) {
                advance();
                decl.interfaces = type_list();
            }
            class_body(decl);
        } else {
            fail(peek(), "expected class, interface or enum declaration");
        }
        decl.span.end = last_pos(start);
        return decl;
    }

    void permits()
    {
        if (at_contextual("permits")) {
            advance();
            type_list();
        }
    }

    void record_components(TypeDecl& decl)
    {
        expect("(");
        while (!at(")")) {
            bool marker = false;
            annotations(marker);
            FieldDecl field;
            field.span.begin = here();
            field.modifiers.add(Modifier::Private);
            field.modifiers.add(Modifier::Final);
            field.type = type();
            if (at("...")) {
                advance();
                ++field.type.array_dims;
            }
            field.name = expect_ident().lexeme;
            field.span.end = last_pos(field.span.begin);
            decl.fields.push_back(std::move(field));
            if (!at(")")) {
                expect(",");
            }
        }
        expect(")");
    }

    void class_body(TypeDecl& decl)
    {
        expect("{");
        while (!at("}")) {
            if (eof()) {
                fail(peek(), "expected '}'");
            }
            member(decl);
        }
        expect("}");
    }

    void enum_body(TypeDecl& decl)
    {
        expect("{");
        while (!at(";") && !at("}")) {
            bool marker = false;
            annotations(marker);
            SourcePos start = here();
            Expr constant;
            constant.kind = ExprKind::New;
            constant.text = expect_ident().lexeme;
            decl.enum_constants.push_back(constant.text);
            if (at("(")) {
                constant.operands = arguments();
            }
            if (at("{")) {
                TypeDecl body;
                body.name = constant.text;
                body.span.begin = here();
                body.name_pos = here();
                class_body(body);
                body.span.end = last_pos(start);
                constant.anonymous_body.push_back(std::move(body));
            }
            constant.span = {start, last_pos(start)};
            decl.enum_constant_args.push_back(std::move(constant));
            if (at(",")) {
                advance();
                continue;
            }
            break;
        }
        if (at(";")) {
            advance();
            while (!at("}")) {
                if (eof()) {
                    fail(peek(), "expected '}'");
                }
                member(decl);
            }
        }
        expect("}");
    }

    void member(TypeDecl& decl)
    {
        if (at(";")) {
            advance();
            return;
        }
        SourcePos start = here();
        if (at("{") || (at_kw("static") && at("{", 1))) {
            if (at_kw("static")) advance();
            decl.initializers.push_back(block());
            return;
        }
        bool override_marker = false;
        Modifiers mods = modifiers(override_marker);
        if (at_type_decl_start()) {
            decl.nested.push_back(type_decl(mods, start));
            return;
        }

        std::vector<std::string> method_type_params;
        if (at("<")) {
            method_type_params = type_params();
        }

        // Constructor, or compact record constructor.
        if (at_ident() && peek().lexeme == decl.name && (at("(", 1) || (decl.record && at("{", 1)))) {
            MethodDecl ctor;
            ctor.modifiers = mods;
            ctor.is_constructor = true;
            ctor.override_marker = override_marker;
            ctor.type_params = std::move(method_type_params);
            ctor.span.begin = start;
            ctor.name = advance().lexeme;
            if (at("(")) {
                ctor.params = parameters();
            }
            if (at_kw("throws")) {
                advance();
                ctor.throws = type_list();
            }
            ctor.body = block();
            ctor.span.end = last_pos(start);
            decl.methods.push_back(std::move(ctor));
            return;
        }

        TypeRef member_type = type_or_void();
        const Token& name_tok = expect_ident();

        if (at("(")) {
            MethodDecl method;
            method.modifiers = mods;
            method.override_marker = override_marker;
            method.type_params = std::move(method_type_params);
            method.span.begin = start;
            method.name = name_tok.lexeme;
            method.return_type = std::move(member_type);
            method.params = parameters();
            array_dims(*method.return_type);
            if (at_kw("throws")) {
                advance();
                method.throws = type_list();
            }
            if (at("{")) {
                method.body = block();
            } else {
                if (at_kw("default")) {  // annotation element default
                    advance();
                    element_value();
                }
                expect(";");
            }
            method.span.end = last_pos(start);
            decl.methods.push_back(std::move(method));
            return;
        }

        // Field declarators sharing one type.
        std::string name = name_tok.lexeme;
        for (;;) {
            FieldDecl field;
            field.modifiers = mods;
            field.type = member_type;
            field.name = name;
            field.span.begin = start;
            array_dims(field.type);
            if (at("=")) {
                advance();
                field.initializer = variable_initializer();
            }
            field.span.end = last_pos(start);
            decl.fields.push_back(std::move(field));
            if (at(",")) {
                advance();
                name = expect_ident().lexeme;
                continue;
            }
            break;
        }
        expect(";");
    }

    void element_value()
    {
        if (at("@")) {
            bool marker = false;
            annotation(marker);
        } else if (at("{")) {
            skip_balanced("{", "}");
        } else {
            conditional();
        }
    }

    std::vector<Parameter> parameters()
    {
        std::vector<Parameter> params;
        expect("(");
        while (!at(")")) {
            bool marker = false;
            modifiers(marker);
            Parameter p;
            p.type = type();
            if (at("...")) {
                advance();
                p.varargs = true;
                ++p.type.array_dims;
            }
            if (at_kw("this")) {  // receiver parameter
                advance();
                p.name = "this";
            } else {
                p.name = expect_ident().lexeme;
            }
            array_dims(p.type);
            params.push_back(std::move(p));
            if (!at(")")) {
                expect(",");
            }
        }
        expect(")");
        return params;
    }

    // --- statements -------------------------------------------------------

    Stmt block()
    {
        DepthGuard guard(*this);
        Stmt s;
        s.kind = StmtKind::Block;
        s.span.begin = here();
        expect("{");
        while (!at("}")) {
            if (eof()) {
                fail(peek(), "expected '}'");
            }
            s.body.push_back(statement());
        }
        expect("}");
        s.span.end = last_pos(s.span.begin);
        return s;
    }

    bool looks_like_local_var()
    {
        std::size_t save = pos_;
        bool marker = false;
        while (at_kw("final") || at_annotation()) {
            if (at_kw("final")) {
                advance();
            } else {
                try {
                    annotation(marker);
                } catch (const SyntaxError&) {
                    pos_ = save;
                    return false;
                }
            }
        }
        bool result = false;
        const bool type_start = at_ident() || (peek().kind == TokenKind::Keyword &&
                                               is_primitive(peek().lexeme));
        if (type_start && try_type()) {
            result = at_ident() && (at("=", 1) || at(";", 1) || at(",", 1) || at("[", 1) ||
                                    at(":", 1));
        }
        pos_ = save;
        return result;
    }

    bool looks_like_local_type()
    {
        std::size_t save = pos_;
        bool marker = false;
        bool result = false;
        try {
            modifiers(marker);
            result = at_type_decl_start();
        } catch (const SyntaxError&) {
        }
        pos_ = save;
        return result;
    }

    // `final Type a = x, b[] = {..}` without the terminating semicolon.
    Stmt local_var(SourcePos start)
    {
        Stmt s;
        s.kind = StmtKind::LocalVar;
        s.span.begin = start;
        bool marker = false;
        modifiers(marker);
        s.declared_type = type();
        for (;;) {
            s.names.push_back(expect_ident().lexeme);
            TypeRef dims_probe;
            array_dims(dims_probe);
            if (at("=")) {
                advance();
                s.exprs.push_back(variable_initializer());
            }
            if (at(",")) {
                advance();
                continue;
            }
            break;
        }
        s.span.end = last_pos(start);
        return s;
    }

    Expr variable_initializer()
    {
        if (at("{")) {
            return array_initializer();
        }
        return expression();
    }

    Expr array_initializer()
    {
        DepthGuard guard(*this);
        Expr e;
        e.kind = ExprKind::ArrayInit;
        e.span.begin = here();
        expect("{");
        while (!at("}")) {
            e.operands.push_back(variable_initializer());
            if (!at("}")) {
                expect(",");
            }
        }
        expect("}");
        e.span.end = last_pos(e.span.begin);
        return e;
    }

    Expr paren_expression()
    {
        expect("(");
        Expr e = expression();
        expect(")");
        return e;
    }

    Stmt statement()
    {
        DepthGuard guard(*this);
        SourcePos start = here();
        Stmt s;
        s.span.begin = start;

        auto finish = [&](Stmt& st) -> Stmt {
            st.span.begin = start;
            st.span.end = last_pos(start);
            return std::move(st);
        };

        if (at("{")) {
            return block();
        }
        if (at(";")) {
            advance();
            s.kind = StmtKind::Empty;
            return finish(s);
        }
        if (at_kw("if")) {
            advance();
            s.kind = StmtKind::If;
            s.exprs.push_back(paren_expression());
            s.body.push_back(statement());
            if (at_kw("else")) {
                advance();
                s.alternative.push_back(statement());
            }
            return finish(s);
        }
        if (at_kw("while")) {
            advance();
            s.kind = StmtKind::While;
            s.exprs.push_back(paren_expression());
            s.body.push_back(statement());
            return finish(s);
        }
        if (at_kw("do")) {
            advance();
            s.kind = StmtKind::Do;
            s.body.push_back(statement());
            expect_kw("while");
            s.exprs.push_back(paren_expression());
            expect(";");
            return finish(s);
        }
        if (at_kw("for")) {
            return for_statement(start);
        }
        if (at_kw("switch")) {
            advance();
            s.kind = StmtKind::Switch;
            s.exprs.push_back(paren_expression());
            s.cases = switch_body();
            return finish(s);
        }
        if (at_kw("try")) {
            return try_statement(start);
        }
        if (at_kw("return")) {
            advance();
            s.kind = StmtKind::Return;
            if (!at(";")) s.exprs.push_back(expression());
            expect(";");
            return finish(s);
        }
        if (at_kw("throw")) {
            advance();
            s.kind = StmtKind::Throw;
            s.exprs.push_back(expression());
            expect(";");
            return finish(s);
        }
        if (at_kw("break") || at_kw("continue")) {
            s.kind = at_kw("break") ? StmtKind::Break : StmtKind::Continue;
            advance();
            if (at_ident()) s.names.push_back(advance().lexeme);
            expect(";");
            return finish(s);
        }
        if (at_kw("synchronized") && at("(", 1)) {
            advance();
            s.kind = StmtKind::Synchronized;
            s.exprs.push_back(paren_expression());
            s.body.push_back(block());
            return finish(s);
        }
        if (at_kw("assert")) {
            advance();
            s.kind = StmtKind::Assert;
            s.exprs.push_back(expression());
            if (at(":")) {
                advance();
                s.exprs.push_back(expression());
            }
            expect(";");
            return finish(s);
        }
        if (at_contextual("yield") && !at("=", 1) && !at(".", 1) && !at("[", 1) &&
            !at("(", 1) && !at("++", 1) && !at("--", 1) && !is_assign_op_at(1)) {
            advance();
            s.kind = StmtKind::Yield;
            s.exprs.push_back(expression());
            expect(";");
            return finish(s);
        }
        if (at_ident() && at(":", 1)) {
            s.kind = StmtKind::Labeled;
            s.names.push_back(advance().lexeme);
            advance();
            s.body.push_back(statement());
            return finish(s);
        }
        if (looks_like_local_type()) {
            s.kind = StmtKind::LocalType;
            bool marker = false;
            Modifiers mods = modifiers(marker);
            s.local_types.push_back(type_decl(mods, start));
            return finish(s);
        }
        if (looks_like_local_var()) {
            Stmt decl = local_var(start);
            expect(";");
            return finish(decl);
        }
        s.kind = StmtKind::Expression;
        s.exprs.push_back(expression());
        expect(";");
        return finish(s);
    }

    Stmt for_statement(SourcePos start)
    {
        Stmt s;
        advance();
        expect("(");
        if (looks_like_local_var()) {
            Stmt decl = local_var(here());
            if (at(":")) {
                advance();
                s.kind = StmtKind::ForEach;
                s.declared_type = std::move(decl.declared_type);
                s.names = std::move(decl.names);
                s.exprs.push_back(expression());
                expect(")");
                s.body.push_back(statement());
                s.span = {start, last_pos(start)};
                return s;
            }
            s.init.push_back(std::move(decl));
        } else {
            while (!at(";")) {
                Stmt init;
                init.kind = StmtKind::Expression;
                init.span.begin = here();
                init.exprs.push_back(expression());
                init.span.end = last_pos(init.span.begin);
                s.init.push_back(std::move(init));
                if (!at(";")) expect(",");
            }
        }
        s.kind = StmtKind::For;
        expect(";");
        if (!at(";")) {
            s.exprs.push_back(expression());
            s.has_condition = true;
        }
        expect(";");
        while (!at(")")) {
            s.exprs.push_back(expression());
            if (!at(")")) expect(",");
        }
        expect(")");
        s.body.push_back(statement());
        s.span = {start, last_pos(start)};
        return s;
    }

    Stmt try_statement(SourcePos start)
    {
        Stmt s;
        s.kind = StmtKind::Try;
        advance();
        if (at("(")) {
            advance();
            while (!at(")")) {
                if (looks_like_local_var()) {
                    s.init.push_back(local_var(here()));
                } else {
                    Stmt res;
                    res.kind = StmtKind::Expression;
                    res.span.begin = here();
                    res.exprs.push_back(expression());
                    res.span.end = last_pos(res.span.begin);
                    s.init.push_back(std::move(res));
                }
                if (at(";")) {
                    advance();
                } else if (!at(")")) {
                    fail(peek(), "expected ';' or ')'");
                }
            }
            expect(")");
        }
        s.body.push_back(block());
        while (at_kw("catch")) {
            CatchClause c;
            c.span.begin = here();
            advance();
            expect("(");
            bool marker = false;
            modifiers(marker);
            c.types.push_back(type());
            while (at("|")) {
                advance();
                c.types.push_back(type());
            }
            c.name = expect_ident().lexeme;
            expect(")");
            c.body.push_back(block());
            c.span.end = last_pos(c.span.begin);
            s.catches.push_back(std::move(c));
        }
        if (at_kw("finally")) {
            advance();
            s.alternative.push_back(block());
        }
        if (s.catches.empty() && s.alternative.empty() && s.init.empty()) {
            fail(peek(), "expected 'catch' or 'finally'");
        }
        s.span = {start, last_pos(start)};
        return s;
    }

    std::vector<SwitchCase> switch_body()
    {
        std::vector<SwitchCase> cases;
        expect("{");
        while (!at("}")) {
            SwitchCase c;
            c.span.begin = here();
            if (at_kw("default")) {
                advance();
                c.is_default = true;
            } else if (at_kw("case")) {
                advance();
                for (;;) {
                    if (at_kw("default")) {  // `case null, default`
                        advance();
                        c.is_default = true;
                    } else if (at_ident() && at_ident(1)) {  // type pattern
                        Expr pattern;
                        pattern.kind = ExprKind::InstanceOf;
                        pattern.span.begin = here();
                        pattern.type = type();
                        pattern.bound_names.push_back(expect_ident().lexeme);
                        pattern.span.end = last_pos(pattern.span.begin);
                        c.labels.push_back(std::move(pattern));
                    } else {
                        c.labels.push_back(conditional());
                    }
                    if (at(",")) {
                        advance();
                        continue;
                    }
                    break;
                }
            } else {
                fail(peek(), "expected 'case' or 'default'");
            }
            if (at("->")) {
                advance();
                c.arrow = true;
                if (at("{")) {
                    c.body.push_back(block());
                } else if (at_kw("throw")) {
                    c.body.push_back(statement());
                } else {
                    Stmt st;
                    st.kind = StmtKind::Expression;
                    st.span.begin = here();
                    st.exprs.push_back(expression());
                    expect(";");
                    st.span.end = last_pos(st.span.begin);
                    c.body.push_back(std::move(st));
                }
            } else {
                expect(":");
                while (!at_kw("case") && !at_kw("default") && !at("}")) {
                    if (eof()) {
                        fail(peek(), "expected '}'");
                    }
                    // `default` as a label, never as a modifier, at statement start.
                    c.body.push_back(statement());
                }
            }
            c.span.end = last_pos(c.span.begin);
            cases.push_back(std::move(c));
        }
        expect("}");
        return cases;
    }

    // --- expressions ------------------------------------------------------

    // Composite `>`-operators are split by the lexer; rebuild them here.
    // Returns the operator spelling and the number of tokens it spans.
    std::pair<std::string, std::size_t> operator_at(std::size_t ahead) const
    {
        const Token& t = peek(ahead);
        if (t.kind == TokenKind::Keyword && t.lexeme == "instanceof") {
            return {"instanceof", 1};
        }
        if (!punct(t) || pos_ + ahead >= toks_.size()) {
            return {"", 0};
        }
        if (t.lexeme == ">") {
            if (at(">", ahead + 1) && adjacent(ahead)) {
                if (at(">", ahead + 2) && adjacent(ahead + 1)) {
                    if (at(">=", ahead + 3) && adjacent(ahead + 2)) return {">>>=", 4};
                    return {">>>", 3};
                }
                if (at(">=", ahead + 2) && adjacent(ahead + 1)) return {">>>=", 3};
                return {">>", 2};
            }
            if (at(">=", ahead + 1) && adjacent(ahead)) return {">>=", 2};
        }
        return {t.lexeme, 1};
    }

    bool is_assign_op_at(std::size_t ahead) const
    {
        auto [op, n] = operator_at(ahead);
        return op == ">>>=" ||
               std::find(kAssignOps.begin(), kAssignOps.end(), op) != kAssignOps.end();
    }

    bool lambda_ahead() const
    {
        if (at_ident() && at("->", 1)) {
            return true;
        }
        if (!at("(")) {
            return false;
        }
        int depth = 0;
        for (std::size_t i = 0; pos_ + i < toks_.size(); ++i) {
            if (at("(", i)) {
                ++depth;
            } else if (at(")", i)) {
                if (--depth == 0) {
                    return at("->", i + 1);
                }
            } else if (at(";", i) || at("{", i) || at("}", i)) {
                return false;
            }
        }
        return false;
    }

    Expr lambda()
    {
        Expr e;
        e.kind = ExprKind::Lambda;
        e.span.begin = here();
        if (at_ident()) {
            e.bound_names.push_back(advance().lexeme);
        } else {
            expect("(");
            while (!at(")")) {
                bool marker = false;
                modifiers(marker);
                if (at_ident() && (at(",", 1) || at(")", 1))) {
                    e.bound_names.push_back(advance().lexeme);
                } else {
                    type();
                    if (at("...")) advance();
                    e.bound_names.push_back(expect_ident().lexeme);
                }
                if (!at(")")) expect(",");
            }
            expect(")");
        }
        expect("->");
        if (at("{")) {
            e.body.push_back(block());
        } else {
            e.operands.push_back(expression());
        }
        e.span.end = last_pos(e.span.begin);
        return e;
    }

    Expr expression()
    {
        DepthGuard guard(*this);
        if (lambda_ahead()) {
            return lambda();
        }
        Expr lhs = conditional();
        if (is_assign_op_at(0)) {
            auto [op, n] = operator_at(0);
            for (std::size_t i = 0; i < n; ++i) advance();
            Expr e;
            e.kind = ExprKind::Assign;
            e.text = op;
            e.span.begin = lhs.span.begin;
            e.operands.push_back(std::move(lhs));
            e.operands.push_back(expression());
            e.span.end = last_pos(e.span.begin);
            return e;
        }
        return lhs;
    }

    Expr conditional()
    {
        Expr cond = binary(1);
        if (!at("?")) {
            return cond;
        }
        advance();
        Expr e;
        e.kind = ExprKind::Conditional;
        e.span.begin = cond.span.begin;
        e.operands.push_back(std::move(cond));
        e.operands.push_back(expression());
        expect(":");
        e.operands.push_back(lambda_ahead() ? lambda() : conditional());
        e.span.end = last_pos(e.span.begin);
        return e;
    }

    Expr binary(int min_prec)
    {
        DepthGuard guard(*this);
        Expr lhs = unary();
        for (;;) {
            auto [op, n] = operator_at(0);
            int prec = binary_precedence(op);
            if (prec == 0 || prec < min_prec) {
                return lhs;
            }
            for (std::size_t i = 0; i < n; ++i) advance();
            Expr e;
            e.span.begin = lhs.span.begin;
            if (op == "instanceof") {
                e.kind = ExprKind::InstanceOf;
                if (at_kw("final")) advance();
                e.type = type();
                if (at_ident()) {
                    e.bound_names.push_back(advance().lexeme);
                }
                e.operands.push_back(std::move(lhs));
            } else {
                e.kind = ExprKind::Binary;
                e.text = op;
                e.operands.push_back(std::move(lhs));
                e.operands.push_back(binary(prec + 1));
            }
            e.span.end = last_pos(e.span.begin);
            lhs = std::move(e);
        }
    }

    bool cast_ahead()
    {
        if (!at("(")) {
            return false;
        }
        std::size_t save = pos_;
        advance();
        bool result = false;
        if (peek().kind == TokenKind::Keyword && is_primitive(peek().lexeme)) {
            result = try_type() && at(")");
        } else if (at_ident() && try_type()) {
            while (at("&")) {  // intersection cast
                advance();
                if (!try_type()) break;
            }
            if (at(")")) {
                const Token& next = peek(1);
                result = next.kind == TokenKind::Identifier || next.kind == TokenKind::Literal ||
                         at("(", 1) || at("!", 1) || at("~", 1) || at_kw("this", 1) ||
                         at_kw("super", 1) || at_kw("new", 1) || at_kw("switch", 1) ||
                         (next.kind == TokenKind::Keyword && is_primitive(next.lexeme));
            }
        }
        pos_ = save;
        return result;
    }

    Expr unary()
    {
        DepthGuard guard(*this);
        SourcePos start = here();
        if (at("+") || at("-") || at("++") || at("--") || at("!") || at("~")) {
            Expr e;
            e.kind = ExprKind::Unary;
            e.text = advance().lexeme;
            e.span.begin = start;
            e.operands.push_back(unary());
            e.span.end = last_pos(start);
            return e;
        }
        if (cast_ahead()) {
            Expr e;
            e.kind = ExprKind::Cast;
            e.span.begin = start;
            advance();
            e.type = type();
            while (at("&")) {
                advance();
                type();
            }
            expect(")");
            e.operands.push_back(lambda_ahead() ? lambda() : unary());
            e.span.end = last_pos(start);
            return e;
        }
        Expr e = postfix(primary());
        return e;
    }

    Expr postfix(Expr e)
    {
        while (at("++") || at("--")) {
            Expr p;
            p.kind = ExprKind::Postfix;
            p.text = advance().lexeme;
            p.span.begin = e.span.begin;
            p.operands.push_back(std::move(e));
            p.span.end = last_pos(p.span.begin);
            e = std::move(p);
        }
        return e;
    }

    std::vector<Expr> arguments()
    {
        std::vector<Expr> args;
        expect("(");
        while (!at(")")) {
            args.push_back(expression());
            if (!at(")")) expect(",");
        }
        expect(")");
        return args;
    }

    // Converts a Name / FieldAccess chain to a type reference (for `X.class`,
    // `X[]::new` and similar).
    static std::optional<TypeRef> as_type(const Expr& e)
    {
        if (e.kind == ExprKind::Name) {
            TypeRef ref;
            ref.name = e.text;
            ref.pos = e.span.begin;
            return ref;
        }
        if (e.kind == ExprKind::FieldAccess && !e.operands.empty()) {
            auto head = as_type(e.operands[0]);
            if (!head) return std::nullopt;
            head->name += "." + e.text;
            return head;
        }
        return std::nullopt;
    }

    Expr primary()
    {
        DepthGuard guard(*this);
        SourcePos start = here();
        Expr e;
        e.span.begin = start;
        const Token& t = peek();

        if (t.kind == TokenKind::Literal) {
            e.kind = ExprKind::Literal;
            e.text = advance().lexeme;
        } else if (at("(")) {
            advance();
            e = expression();
            expect(")");
        } else if (at_kw("this")) {
            advance();
            if (at("(")) {
                e.kind = ExprKind::MethodCall;
                e.text = "this";
                e.operands = arguments();
            } else {
                e.kind = ExprKind::This;
            }
        } else if (at_kw("super")) {
            advance();
            if (at("(")) {
                e.kind = ExprKind::MethodCall;
                e.text = "super";
                e.operands = arguments();
            } else {
                e.kind = ExprKind::Super;
            }
        } else if (at_kw("new")) {
            e = creator(std::nullopt);
        } else if (at_kw("switch")) {
            advance();
            e.kind = ExprKind::Switch;
            e.operands.push_back(paren_expression());
            e.cases = switch_body();
        } else if (t.kind == TokenKind::Keyword && (is_primitive(t.lexeme) || t.lexeme == "void")) {
            TypeRef ref = type_or_void();
            if (at("::")) {
                advance();
                e.kind = ExprKind::MethodRef;
                e.type = std::move(ref);
                e.text = at_kw("new") ? advance().lexeme : expect_ident().lexeme;
            } else {
                expect(".");
                expect_kw("class");
                e.kind = ExprKind::ClassLiteral;
                e.type = std::move(ref);
            }
        } else if (at_ident()) {
            std::string name = advance().lexeme;
            if (at("(")) {
                e.kind = ExprKind::MethodCall;
                e.text = std::move(name);
                e.operands = arguments();
            } else {
                e.kind = ExprKind::Name;
                e.text = std::move(name);
            }
        } else if (at("@")) {
            fail(t, "unexpected annotation in expression");
        } else {
            fail(t, "expected expression");
        }
        e.span.begin = start;
        e.span.end = last_pos(start);
        return selectors(std::move(e));
    }

    Expr selectors(Expr e)
    {
        for (;;) {
            DepthGuard guard(*this);
            SourcePos start = e.span.begin;
            if (at(".")) {
                advance();
                Expr next;
                next.span.begin = start;
                if (at("<")) {
                    next.explicit_type_args = type_args();
                }
                if (at_kw("new")) {
                    next = creator(std::move(e));
                } else if (at_kw("class")) {
                    advance();
                    next.kind = ExprKind::ClassLiteral;
                    next.type = as_type(e);
                    if (!next.type) {
                        fail(peek(), "expected type before '.class'");
                    }
                } else if (at_kw("this")) {
                    advance();
                    next.kind = ExprKind::This;
                    next.operands.push_back(std::move(e));
                } else if (at_kw("super")) {
                    advance();
                    next.kind = ExprKind::Super;
                    next.operands.push_back(std::move(e));
                } else {
                    next.text = expect_ident().lexeme;
                    next.operands.push_back(std::move(e));
                    if (at("(")) {
                        next.kind = ExprKind::MethodCall;
                        next.has_receiver = true;
                        auto args = arguments();
                        next.operands.insert(next.operands.end(),
                                             std::make_move_iterator(args.begin()),
                                             std::make_move_iterator(args.end()));
                    } else {
                        next.kind = ExprKind::FieldAccess;
                    }
                }
                next.span.begin = start;
                next.span.end = last_pos(start);
                e = std::move(next);
            } else if (at("[")) {
                if (at("]", 1)) {
                    auto ref = as_type(e);
                    if (!ref) {
                        fail(peek(), "expected type before '[]'");
                    }
                    array_dims(*ref);
                    Expr next;
                    next.span.begin = start;
                    if (at("::")) {
                        advance();
                        next.kind = ExprKind::MethodRef;
                        next.text = at_kw("new") ? advance().lexeme : expect_ident().lexeme;
                    } else {
                        expect(".");
                        expect_kw("class");
                        next.kind = ExprKind::ClassLiteral;
                    }
                    next.type = std::move(ref);
                    next.span.end = last_pos(start);
                    e = std::move(next);
                } else {
                    advance();
                    Expr next;
                    next.kind = ExprKind::ArrayAccess;
                    next.span.begin = start;
                    next.operands.push_back(std::move(e));
                    next.operands.push_back(expression());
                    expect("]");
                    next.span.end = last_pos(start);
                    e = std::move(next);
                }
            } else if (at("::")) {
                advance();
                Expr next;
                next.kind = ExprKind::MethodRef;
                next.span.begin = start;
                if (at("<")) {
                    next.explicit_type_args = type_args();
                }
                next.text = at_kw("new") ? advance().lexeme : expect_ident().lexeme;
                next.operands.push_back(std::move(e));
                next.span.end = last_pos(start);
                e = std::move(next);
            } else {
                return e;
            }
        }
    }

    Expr creator(std::optional<Expr> outer)
    {
        SourcePos start = outer ? outer->span.begin : here();
        expect_kw("new");
        Expr e;
        e.span.begin = start;
        if (at("<")) {
            e.explicit_type_args = type_args();
        }
        bool marker = false;
        annotations(marker);
        TypeRef ref;
        ref.pos = here();
        if (peek().kind == TokenKind::Keyword && is_primitive(peek().lexeme)) {
            ref.name = advance().lexeme;
            ref.primitive = true;
        } else {
            ref.name = expect_ident().lexeme;
            if (at("<")) ref.type_args = type_args();
            while (at(".") && at_ident(1)) {
                advance();
                ref.name += "." + advance().lexeme;
                if (at("<")) {
                    auto args = type_args();
                    ref.type_args.insert(ref.type_args.end(), args.begin(), args.end());
                }
            }
        }

        if (at("[")) {
            e.kind = ExprKind::NewArray;
            while (at("[")) {
                advance();
                if (at("]")) {
                    advance();
                } else {
                    e.operands.push_back(expression());
                    expect("]");
                }
                ++ref.array_dims;
            }
            if (at("{")) {
                e.operands.push_back(array_initializer());
            }
            e.type = std::move(ref);
        } else {
            e.kind = ExprKind::New;
            if (outer) {
                e.operands.push_back(std::move(*outer));
                e.has_receiver = true;
            }
            auto args = arguments();
            e.operands.insert(e.operands.end(), std::make_move_iterator(args.begin()),
                              std::make_move_iterator(args.end()));
            if (at("{")) {
                TypeDecl body;
                body.name = ref.name;
                body.span.begin = here();
                body.name_pos = here();
                class_body(body);
                body.span.end = last_pos(body.span.begin);
                e.anonymous_body.push_back(std::move(body));
            }
            e.type = std::move(ref);
        }
        e.span.end = last_pos(start);
        return e;
    }

    std::vector<const Token*> toks_;
    Token eof_{};
    std::size_t pos_ = 0;
    int depth_ = 0;
    int line_count_ = 0;
    std::string path_;
};

bool valid_utf8(std::string_view s)
{
    std::size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
        if (len == 0 || i + len > s.size()) {
            return false;
        }
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) {
                return false;
            }
        }
        i += len;
    }
    return true;
}

} // namespace

ParseResult parse_compilation_unit(std::span<const Token> tokens, const std::string& path)
{
    Parser parser(tokens, path);
    try {
        return parser.unit();
    } catch (const SyntaxError& err) {
        return ParseFailure{path, std::max(1, err.pos().line), std::max(1, err.pos().column),
                            err.what()};
    }
}

ParseResult parse_source(std::string_view source, const std::string& path)
{
    if (!valid_utf8(source)) {
        return ParseFailure{path, 1, 1, "file is not valid UTF-8"};
    }
    std::vector<Token> tokens;
    try {
        tokens = tokenize(source);
    } catch (const LexError& err) {
        return ParseFailure{path, err.line(), err.column(), err.what()};
    }
    return parse_compilation_unit(tokens, path);
}

ProjectParse parse_project(const std::filesystem::path& root, unsigned threads)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw ConfigError("source root '" + root.string() + "' is not a readable directory");
    }

    std::vector<std::string> files;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) {
        throw ConfigError("cannot read source root '" + root.string() + "': " + ec.message());
    }
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) {
            throw ConfigError("error while scanning '" + root.string() + "': " + ec.message());
        }
        const fs::directory_entry& entry = *it;
        if (entry.is_regular_file(ec) && entry.path().extension() == ".java") {
            files.push_back(fs::relative(entry.path(), root, ec).generic_string());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<std::optional<ParseResult>> results(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            std::ifstream in(root / files[i], std::ios::binary);
            if (!in) {
                results[i] = ParseFailure{files[i], 1, 1, "cannot read file"};
                continue;
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            results[i] = parse_source(buffer.str(), files[i]);
        }
    };

    unsigned count = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    count = static_cast<unsigned>(std::min<std::size_t>(count, std::max<std::size_t>(1, files.size())));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < count; ++i) {
            pool.emplace_back(worker);
        }
    }

    ProjectParse out;
    for (auto& r : results) {
        if (auto* unit = std::get_if<ast::CompilationUnit>(&*r)) {
            out.units.push_back(std::move(*unit));
        } else {
            out.failures.push_back(std::get<ParseFailure>(std::move(*r)));
        }
    }
    return out;
}

} // namespace smellscan::frontend
