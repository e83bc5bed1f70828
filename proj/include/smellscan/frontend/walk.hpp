#pragma once

#include <smellscan/frontend/ast.hpp>

namespace smellscan::ast {

/// Which nested code units a walk descends into. Lambdas, anonymous class
/// bodies and local type declarations are separate units for complexity
/// purposes but still contribute referenced names to their enclosing type.
struct WalkScope {
    bool lambdas = true;
    bool anonymous_classes = true;
    bool local_types = true;
};

/// Pre-order traversal calling `on_stmt(const Stmt&)` and `on_expr(const Expr&)`.
template <class OnStmt, class OnExpr>
class Walker {
public:
    Walker(OnStmt& on_stmt, OnExpr& on_expr, WalkScope scope)
        : on_stmt_(on_stmt), on_expr_(on_expr), scope_(scope)
    {
    }

    void stmt(const Stmt& s)
    {
        on_stmt_(s);
        for (const Stmt& i : s.init) stmt(i);
        for (const Expr& e : s.exprs) expr(e);
        for (const Stmt& b : s.body) stmt(b);
        for (const SwitchCase& c : s.cases) switch_case(c);
        for (const CatchClause& c : s.catches) {
            for (const Stmt& b : c.body) stmt(b);
        }
        for (const Stmt& a : s.alternative) stmt(a);
        if (scope_.local_types) {
            for (const TypeDecl& t : s.local_types) type(t);
        }
    }

    void expr(const Expr& e)
    {
        on_expr_(e);
        if (e.kind == ExprKind::Lambda && !scope_.lambdas) {
            return;
        }
        for (const Expr& o : e.operands) expr(o);
        for (const SwitchCase& c : e.cases) switch_case(c);
        for (const Stmt& b : e.body) stmt(b);
        if (scope_.anonymous_classes) {
            for (const TypeDecl& t : e.anonymous_body) type(t);
        }
    }

    void switch_case(const SwitchCase& c)
    {
        for (const Expr& l : c.labels) expr(l);
        for (const Stmt& b : c.body) stmt(b);
    }

    void type(const TypeDecl& t)
    {
        for (const FieldDecl& f : t.fields) {
            if (f.initializer) expr(*f.initializer);
        }
        for (const Expr& e : t.enum_constant_args) expr(e);
        for (const Stmt& s : t.initializers) stmt(s);
        for (const MethodDecl& m : t.methods) {
            if (m.body) stmt(*m.body);
        }
        for (const TypeDecl& n : t.nested) type(n);
    }

private:
    OnStmt& on_stmt_;
    OnExpr& on_expr_;
    WalkScope scope_;
};

template <class OnStmt, class OnExpr>
void walk(const Stmt& root, OnStmt&& on_stmt, OnExpr&& on_expr, WalkScope scope = {})
{
    Walker<std::remove_reference_t<OnStmt>, std::remove_reference_t<OnExpr>> w(on_stmt, on_expr,
                                                                               scope);
    w.stmt(root);
}

template <class OnStmt, class OnExpr>
void walk(const Expr& root, OnStmt&& on_stmt, OnExpr&& on_expr, WalkScope scope = {})
{
    Walker<std::remove_reference_t<OnStmt>, std::remove_reference_t<OnExpr>> w(on_stmt, on_expr,
                                                                               scope);
    w.expr(root);
}

} // namespace smellscan::ast
