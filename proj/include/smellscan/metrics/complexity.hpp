#pragma once

#include <smellscan/frontend/ast.hpp>

namespace smellscan::metrics {

/// Decision points inside a method body: `if`, `for`, for-each, `while`,
/// `do`, each non-default case label, each `catch`, each `?:`, and each `&&`
/// or `||`. Lambda bodies, anonymous classes and local types are separate
/// units and are not counted.
int count_decision_points(const ast::Stmt& body);

/// 1 + decision points; 1 for a method without a body.
int cyclomatic_complexity(const ast::MethodDecl& method);

} // namespace smellscan::metrics
