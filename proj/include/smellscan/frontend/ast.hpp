#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace smellscan::ast {

struct SourcePos {
    int line = 0;
    int column = 0;

    friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

/// Inclusive start, position of the last token's first byte as the end.
struct SourceSpan {
    SourcePos begin;
    SourcePos end;

    bool contains(const SourceSpan& inner) const
    {
        return begin <= inner.begin && inner.end <= end;
    }

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Modifier : std::uint32_t {
    Public = 1u << 0,
    Protected = 1u << 1,
    Private = 1u << 2,
    Static = 1u << 3,
    Final = 1u << 4,
    Abstract = 1u << 5,
    Native = 1u << 6,
    Synchronized = 1u << 7,
    Transient = 1u << 8,
    Volatile = 1u << 9,
    Strictfp = 1u << 10,
    Default = 1u << 11,
    Sealed = 1u << 12,
    NonSealed = 1u << 13,
};

class Modifiers {
public:
    constexpr Modifiers() = default;

    constexpr bool has(Modifier m) const { return (bits_ & static_cast<std::uint32_t>(m)) != 0; }
    constexpr void add(Modifier m) { bits_ |= static_cast<std::uint32_t>(m); }
    constexpr std::uint32_t bits() const { return bits_; }

    /// Space-separated Java spelling in canonical order.
    std::string to_string() const;

    friend bool operator==(const Modifiers&, const Modifiers&) = default;

private:
    std::uint32_t bits_ = 0;
};

/// A type as written. Generic arguments are kept so their names can still be
/// referenced, but `name` itself is the erased raw name.
struct TypeRef {
    std::string name;  // dotted, e.g. "Map.Entry" or "java.util.List"
    int array_dims = 0;
    bool primitive = false;
    std::vector<TypeRef> type_args;
    SourcePos pos;

    friend bool operator==(const TypeRef&, const TypeRef&) = default;
};

enum class TypeKind { Class, Interface, Enum };

struct Expr;
struct Stmt;
struct TypeDecl;

struct SwitchCase {
    std::vector<Expr> labels;  // empty for `default`
    bool is_default = false;
    bool arrow = false;
    std::vector<Stmt> body;
    SourceSpan span;

    friend bool operator==(const SwitchCase&, const SwitchCase&) = default;
};

enum class ExprKind {
    Name,           // simple identifier
    FieldAccess,    // operands[0].text
    MethodCall,     // text is the method name; args follow the optional receiver
    New,            // type; operands are ctor args; optional anonymous body
    NewArray,       // type; operands are dimension exprs and initializer elements
    ArrayInit,      // operands are elements
    Literal,
    This,
    Super,
    ClassLiteral,   // type.class
    Binary,         // text is the operator
    Unary,          // prefix operator in text
    Postfix,        // postfix operator in text
    Assign,         // text is the operator
    Conditional,    // cond ? a : b
    InstanceOf,     // operands[0] instanceof type
    Cast,           // (type) operands[0]
    ArrayAccess,
    Lambda,         // opaque: body is parsed only for referenced names
    MethodRef,      // operands[0]::text, or type::text
    Switch,         // switch expression
};

struct Expr {
    ExprKind kind = ExprKind::Name;
    SourceSpan span;
    std::string text;
    std::vector<Expr> operands;
    std::optional<TypeRef> type;
    std::vector<TypeRef> explicit_type_args;
    std::vector<SwitchCase> cases;
    std::vector<Stmt> body;                // lambda block body
    std::vector<TypeDecl> anonymous_body;  // 0 or 1 entries
    std::vector<std::string> bound_names;  // lambda params, pattern variable
    bool has_receiver = false;  // MethodCall / New: operands[0] is the receiver or outer instance

    friend bool operator==(const Expr&, const Expr&) = default;
};

enum class StmtKind {
    Block,
    LocalVar,
    LocalType,
    If,
    For,
    ForEach,
    While,
    Do,
    Switch,
    Try,
    Return,
    Throw,
    Break,
    Continue,
    Yield,
    Labeled,
    Synchronized,
    Assert,
    Expression,
    Empty,
};

struct CatchClause {
    std::vector<TypeRef> types;  // multi-catch alternatives
    std::string name;
    std::vector<Stmt> body;
    SourceSpan span;

    friend bool operator==(const CatchClause&, const CatchClause&) = default;
};

/// Statement-level tree. Which members are populated depends on `kind`:
///  - If: exprs[0] condition, body[0] then-branch, alternative[0] else-branch
///  - For: init, exprs = {condition?, updates...}, body[0]
///  - ForEach / LocalVar: declared_type + names; exprs are initializers / iterable
///  - Switch: exprs[0] selector, cases
///  - Try: init holds resources, body the try block, catches, alternative = finally
struct Stmt {
    StmtKind kind = StmtKind::Empty;
    SourceSpan span;
    std::vector<Expr> exprs;
    std::vector<Stmt> init;
    std::vector<Stmt> body;
    std::vector<Stmt> alternative;
    std::optional<TypeRef> declared_type;
    std::vector<std::string> names;
    std::vector<SwitchCase> cases;
    std::vector<CatchClause> catches;
    std::vector<TypeDecl> local_types;
    bool has_condition = false;  // For: whether exprs[0] is the condition

    friend bool operator==(const Stmt&, const Stmt&) = default;
};

struct Parameter {
    TypeRef type;
    std::string name;
    bool varargs = false;

    friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct FieldDecl {
    Modifiers modifiers;
    TypeRef type;
    std::string name;
    std::optional<Expr> initializer;
    SourceSpan span;

    friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct MethodDecl {
    Modifiers modifiers;
    std::string name;
    bool is_constructor = false;
    std::vector<std::string> type_params;
    std::optional<TypeRef> return_type;  // absent for constructors
    std::vector<Parameter> params;
    std::vector<TypeRef> throws;
    std::optional<Stmt> body;  // Block; absent when abstract/native/interface
    bool override_marker = false;  // @Override present
    SourceSpan span;

    friend bool operator==(const MethodDecl&, const MethodDecl&) = default;
};

struct TypeDecl {
    std::string name;
    TypeKind kind = TypeKind::Class;
    bool annotation_type = false;
    bool record = false;
    Modifiers modifiers;
    std::vector<std::string> type_params;
    std::optional<TypeRef> supertype;
    std::vector<TypeRef> interfaces;  // `implements`, or `extends` of an interface
    std::vector<std::string> enum_constants;
    std::vector<Expr> enum_constant_args;
    std::vector<FieldDecl> fields;
    std::vector<MethodDecl> methods;  // constructors included, flagged
    std::vector<TypeDecl> nested;
    std::vector<Stmt> initializers;   // instance and static initializer blocks
    SourcePos name_pos;
    SourceSpan span;

    friend bool operator==(const TypeDecl&, const TypeDecl&) = default;
};

struct Import {
    std::string name;  // dotted, without the trailing `.*`
    bool is_static = false;
    bool wildcard = false;

    friend bool operator==(const Import&, const Import&) = default;
};

/// One parsed source file.
struct CompilationUnit {
    std::string path;
    std::string package_name;
    std::vector<Import> imports;
    std::vector<TypeDecl> types;
    int line_count = 0;
    SourceSpan span;

    friend bool operator==(const CompilationUnit&, const CompilationUnit&) = default;
};

} // namespace smellscan::ast
