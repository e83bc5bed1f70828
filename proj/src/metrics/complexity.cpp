#include <smellscan/metrics/complexity.hpp>

#include <smellscan/frontend/walk.hpp>

namespace smellscan::metrics {

namespace {

int case_labels(const std::vector<ast::SwitchCase>& cases)
{
    int n = 0;
    for (const ast::SwitchCase& c : cases) {
        n += static_cast<int>(c.labels.size());
    }
    return n;
}

} // namespace

int count_decision_points(const ast::Stmt& body)
{
    using ast::StmtKind;
    int points = 0;
    auto on_stmt = [&](const ast::Stmt& s) {
        switch (s.kind) {
        case StmtKind::If:
        case StmtKind::For:
        case StmtKind::ForEach:
        case StmtKind::While:
        case StmtKind::Do:
            ++points;
            break;
        case StmtKind::Switch:
            points += case_labels(s.cases);
            break;
        case StmtKind::Try:
            points += static_cast<int>(s.catches.size());
            break;
        default:
            break;
        }
    };
    auto on_expr = [&](const ast::Expr& e) {
        if (e.kind == ast::ExprKind::Conditional) {
            ++points;
        } else if (e.kind == ast::ExprKind::Binary && (e.text == "&&" || e.text == "||")) {
            ++points;
        } else if (e.kind == ast::ExprKind::Switch) {
            points += case_labels(e.cases);
        }
    };
    ast::walk(body, on_stmt, on_expr,
              ast::WalkScope{.lambdas = false, .anonymous_classes = false, .local_types = false});
    return points;
}

int cyclomatic_complexity(const ast::MethodDecl& method)
{
    return method.body ? 1 + count_decision_points(*method.body) : 1;
}

} // namespace smellscan::metrics
