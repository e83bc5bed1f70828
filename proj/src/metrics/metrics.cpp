#include <smellscan/metrics/metrics.hpp>

#include <smellscan/frontend/walk.hpp>
#include <smellscan/metrics/complexity.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <deque>
#include <optional>
#include <set>
#include <sstream>

namespace smellscan::metrics {

using model::SourceModel;
using model::TypeEntity;
using model::TypeId;

std::string_view to_string(BodyClass c)
{
    switch (c) {
    case BodyClass::Empty: return "empty";
    case BodyClass::ThrowOnly: return "throw-only";
    case BodyClass::Substantive: return "substantive";
    }
    return "";
}

std::string_view to_string(SubjectKind k)
{
    return k == SubjectKind::TypeTest ? "type-test" : "constant-tag";
}

Depth depth_of_inheritance(const TypeEntity& type, const SourceModel& model)
{
    Depth d;
    std::set<const TypeEntity*> seen{&type};
    const TypeEntity* current = &type;
    while (current->supertype.target) {
        const TypeEntity* parent = &model.type(*current->supertype.target);
        if (!seen.insert(parent).second) {
            d.cycle = true;
            break;
        }
        ++d.value;
        current = parent;
    }
    return d;
}

namespace {

// Distinct in-model parents (supertype and interfaces) of a type.
std::vector<TypeId> direct_parents(const TypeEntity& t)
{
    std::vector<TypeId> parents;
    if (t.supertype.target) parents.push_back(*t.supertype.target);
    for (const model::TypeLink& i : t.interfaces) {
        if (i.target) parents.push_back(*i.target);
    }
    std::sort(parents.begin(), parents.end());
    parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
    return parents;
}

} // namespace

int number_of_children(const TypeEntity& type, const SourceModel& model)
{
    int n = 0;
    for (const TypeEntity& t : model.types()) {
        for (TypeId p : direct_parents(t)) {
            if (&model.type(p) == &type) ++n;
        }
    }
    return n;
}

double lcom_from_counts(int nom, const std::vector<int>& accessors_per_field)
{
    if (nom < 2 || accessors_per_field.empty()) {
        return 0.0;
    }
    double sum = 0;
    for (int a : accessors_per_field) sum += a;
    const double mean = sum / static_cast<double>(accessors_per_field.size());
    const double value = (nom - mean) / (nom - 1);
    return std::clamp(value, 0.0, 1.0);
}

namespace {

std::set<std::string> declared_names(const ast::MethodDecl& m)
{
    std::set<std::string> names;
    for (const ast::Parameter& p : m.params) names.insert(p.name);
    if (!m.body) return names;
    ast::walk(
        *m.body,
        [&](const ast::Stmt& s) {
            if (s.kind == ast::StmtKind::LocalVar || s.kind == ast::StmtKind::ForEach) {
                names.insert(s.names.begin(), s.names.end());
            }
            for (const ast::CatchClause& c : s.catches) names.insert(c.name);
        },
        [&](const ast::Expr& e) { names.insert(e.bound_names.begin(), e.bound_names.end()); });
    return names;
}

// Fields of `fields` a method body reads or writes, either bare (when not
// shadowed by a parameter or local) or through `this.`.
std::set<std::string> accessed_fields(const ast::MethodDecl& m, const std::set<std::string>& fields)
{
    std::set<std::string> hit;
    if (!m.body) return hit;
    const std::set<std::string> locals = declared_names(m);
    ast::walk(
        *m.body, [](const ast::Stmt&) {},
        [&](const ast::Expr& e) {
            if (e.kind == ast::ExprKind::Name && fields.contains(e.text) && !locals.contains(e.text)) {
                hit.insert(e.text);
            } else if (e.kind == ast::ExprKind::FieldAccess && e.operands.size() == 1 &&
                       e.operands[0].kind == ast::ExprKind::This && fields.contains(e.text)) {
                hit.insert(e.text);
            }
        });
    return hit;
}

} // namespace

double lcom(const TypeEntity& type, const SourceModel& model)
{
    std::set<std::string> fields;
    for (model::ElementId f : type.fields) fields.insert(model.element(f).name);
    std::map<std::string, int> accessors;
    for (const std::string& f : fields) accessors[f] = 0;
    for (model::ElementId m : type.methods) {
        for (const std::string& f : accessed_fields(*model.description(m).method, fields)) {
            ++accessors[f];
        }
    }
    std::vector<int> counts;
    for (const auto& [name, n] : accessors) counts.push_back(n);
    return lcom_from_counts(static_cast<int>(type.methods.size()), counts);
}

BodyClass classify_body(const ast::MethodDecl& method)
{
    if (!method.body) {
        return BodyClass::Substantive;
    }
    std::vector<const ast::Stmt*> stmts;
    for (const ast::Stmt& s : method.body->body) {
        if (s.kind != ast::StmtKind::Empty) stmts.push_back(&s);
    }
    if (stmts.empty()) return BodyClass::Empty;
    if (stmts.size() == 1 && stmts[0]->kind == ast::StmtKind::Throw) return BodyClass::ThrowOnly;
    return BodyClass::Substantive;
}

namespace {

struct Arm {
    std::string subject;
    SubjectKind kind;

    friend bool operator==(const Arm&, const Arm&) = default;
};

// Canonical text of a simple subject expression, or empty.
std::string render(const ast::Expr& e)
{
    switch (e.kind) {
    case ast::ExprKind::Name: return e.text;
    case ast::ExprKind::This: return "this";
    case ast::ExprKind::FieldAccess: {
        if (e.operands.size() != 1) return {};
        std::string head = render(e.operands[0]);
        return head.empty() ? head : head + "." + e.text;
    }
    case ast::ExprKind::MethodCall: {
        const std::size_t args = e.operands.size() - (e.has_receiver ? 1 : 0);
        if (args != 0) return {};
        if (!e.has_receiver) return e.text + "()";
        std::string head = render(e.operands[0]);
        return head.empty() ? head : head + "." + e.text + "()";
    }
    default: return {};
    }
}

bool all_caps(const std::string& s)
{
    bool letter = false;
    for (char c : s) {
        if (std::islower(static_cast<unsigned char>(c))) return false;
        if (std::isupper(static_cast<unsigned char>(c))) letter = true;
    }
    return letter;
}

bool is_constant(const ast::Expr& e)
{
    switch (e.kind) {
    case ast::ExprKind::Literal: return e.text != "null";
    case ast::ExprKind::Name:
    case ast::ExprKind::FieldAccess: return all_caps(e.text);
    default: return false;
    }
}

std::optional<Arm> arm_of(const ast::Expr& c)
{
    using ast::ExprKind;
    if (c.kind == ExprKind::InstanceOf && !c.operands.empty()) {
        std::string s = render(c.operands[0]);
        if (!s.empty()) return Arm{s, SubjectKind::TypeTest};
        return std::nullopt;
    }
    if (c.kind == ExprKind::Binary && c.operands.size() == 2) {
        const ast::Expr& l = c.operands[0];
        const ast::Expr& r = c.operands[1];
        if (c.text == "==") {
            if (is_constant(r) && !is_constant(l) && !render(l).empty()) {
                return Arm{render(l), SubjectKind::ConstantTag};
            }
            if (is_constant(l) && !is_constant(r) && !render(r).empty()) {
                return Arm{render(r), SubjectKind::ConstantTag};
            }
        } else if (c.text == "||") {
            auto a = arm_of(l);
            auto b = arm_of(r);
            if (a && b && *a == *b) return a;
        }
        return std::nullopt;
    }
    if (c.kind == ExprKind::MethodCall && c.has_receiver && c.operands.size() == 2 &&
        (c.text == "equals" || c.text == "equalsIgnoreCase")) {
        const ast::Expr& recv = c.operands[0];
        const ast::Expr& arg = c.operands[1];
        if (is_constant(recv) && !render(arg).empty()) return Arm{render(arg), SubjectKind::ConstantTag};
        if (is_constant(arg) && !render(recv).empty()) return Arm{render(recv), SubjectKind::ConstantTag};
    }
    return std::nullopt;
}

class ChainScanner {
public:
    void run(const ast::Stmt& body)
    {
        ast::walk(
            body, [this](const ast::Stmt& s) { on_stmt(s); },
            [this](const ast::Expr& e) { on_expr(e); },
            ast::WalkScope{.lambdas = true, .anonymous_classes = false, .local_types = false});
    }

    // Longest chain; ties keep the lexicographically smallest subject.
    std::optional<std::pair<Arm, int>> best;

private:
    void offer(const Arm& arm, int length)
    {
        if (length < 2) return;
        if (!best || length > best->second ||
            (length == best->second && arm.subject < best->first.subject)) {
            best = {arm, length};
        }
    }

    void runs(const std::vector<std::optional<Arm>>& arms)
    {
        int length = 0;
        for (std::size_t i = 0; i < arms.size(); ++i) {
            if (!arms[i]) {
                length = 0;
                continue;
            }
            length = (i > 0 && arms[i - 1] && *arms[i - 1] == *arms[i]) ? length + 1 : 1;
            offer(*arms[i], length);
        }
    }

    void list(const std::vector<ast::Stmt>& stmts)
    {
        std::vector<std::optional<Arm>> arms;
        for (const ast::Stmt& s : stmts) {
            if (s.kind == ast::StmtKind::If && s.alternative.empty() && !s.exprs.empty()) {
                arms.push_back(arm_of(s.exprs[0]));
            } else {
                arms.push_back(std::nullopt);
            }
        }
        runs(arms);
    }

    void cascade(const ast::Stmt& head)
    {
        std::vector<std::optional<Arm>> arms;
        for (const ast::Stmt* s = &head; s && s->kind == ast::StmtKind::If;) {
            arms.push_back(s->exprs.empty() ? std::nullopt : arm_of(s->exprs[0]));
            s = s->alternative.empty() ? nullptr : &s->alternative[0];
        }
        runs(arms);
    }

    void switch_chain(const ast::Expr& selector, const std::vector<ast::SwitchCase>& cases)
    {
        std::string subject = render(selector);
        if (subject.empty()) {
            subject = "switch@" + std::to_string(selector.span.begin.line) + ":" +
                      std::to_string(selector.span.begin.column);
        }
        int labels = 0;
        bool patterns = false;
        for (const ast::SwitchCase& c : cases) {
            for (const ast::Expr& l : c.labels) {
                ++labels;
                patterns = patterns || l.kind == ast::ExprKind::InstanceOf;
            }
        }
        offer(Arm{subject, patterns ? SubjectKind::TypeTest : SubjectKind::ConstantTag}, labels);
        for (const ast::SwitchCase& c : cases) list(c.body);
    }

    void on_stmt(const ast::Stmt& s)
    {
        switch (s.kind) {
        case ast::StmtKind::Block: list(s.body); break;
        case ast::StmtKind::If: cascade(s); break;
        case ast::StmtKind::Switch:
            if (!s.exprs.empty()) switch_chain(s.exprs[0], s.cases);
            break;
        default: break;
        }
    }

    void on_expr(const ast::Expr& e)
    {
        if (e.kind == ast::ExprKind::Switch && !e.operands.empty()) {
            switch_chain(e.operands[0], e.cases);
        } else if (e.kind == ast::ExprKind::Lambda) {
            list(e.body);
        }
    }
};

} // namespace

std::vector<ChainRecord> conditional_chains(const ast::MethodDecl& method, const std::string& signature)
{
    if (!method.body) return {};
    ChainScanner scanner;
    scanner.run(*method.body);
    if (!scanner.best) return {};
    const auto& [arm, length] = *scanner.best;
    return {ChainRecord{signature, length, arm.kind, arm.subject}};
}

namespace {

std::string_view last_segment(std::string_view name)
{
    const std::size_t dot = name.rfind('.');
    return dot == std::string_view::npos ? name : name.substr(dot + 1);
}

bool is_type_param(const std::string& name, const TypeEntity& owner, const ast::MethodDecl& m)
{
    return std::find(owner.type_params.begin(), owner.type_params.end(), name) !=
               owner.type_params.end() ||
           std::find(m.type_params.begin(), m.type_params.end(), name) != m.type_params.end();
}

bool same_signature(const ast::MethodDecl& a, const TypeEntity& a_owner, const ast::MethodDecl& b,
                    const TypeEntity& b_owner)
{
    if (a.name != b.name || a.params.size() != b.params.size()) return false;
    for (std::size_t i = 0; i < a.params.size(); ++i) {
        const ast::TypeRef& x = a.params[i].type;
        const ast::TypeRef& y = b.params[i].type;
        if (is_type_param(x.name, a_owner, a) || is_type_param(y.name, b_owner, b)) continue;
        if (x.array_dims != y.array_dims || last_segment(x.name) != last_segment(y.name)) return false;
    }
    return true;
}

bool inheritable(const ast::MethodDecl& m)
{
    return !m.is_constructor && !m.modifiers.has(ast::Modifier::Private) &&
           !m.modifiers.has(ast::Modifier::Static);
}

} // namespace

std::vector<OverrideRecord> override_records(const TypeEntity& type, const SourceModel& model)
{
    // Ancestors in breadth-first order; note whether any class on the way
    // extends a type outside the model.
    std::vector<TypeId> ancestors;
    bool external_superclass = type.supertype.status == model::RefStatus::External;
    {
        std::set<TypeId> seen;
        std::deque<TypeId> queue;
        for (TypeId p : direct_parents(type)) queue.push_back(p);
        while (!queue.empty()) {
            TypeId id = queue.front();
            queue.pop_front();
            if (!seen.insert(id).second || &model.type(id) == &type) continue;
            ancestors.push_back(id);
            const TypeEntity& a = model.type(id);
            external_superclass = external_superclass || a.supertype.status == model::RefStatus::External;
            for (TypeId p : direct_parents(a)) queue.push_back(p);
        }
    }

    std::vector<OverrideRecord> out;
    for (model::ElementId mid : type.methods) {
        const model::ElementDescription& desc = model.description(mid);
        const ast::MethodDecl& m = *desc.method;
        if (!m.body || !inheritable(m)) continue;

        std::optional<bool> inherited_concrete;
        for (TypeId aid : ancestors) {
            const TypeEntity& a = model.type(aid);
            for (model::ElementId other : a.methods) {
                const ast::MethodDecl& om = *model.description(other).method;
                if (inheritable(om) && same_signature(m, type, om, a)) {
                    inherited_concrete = om.body.has_value();
                    break;
                }
            }
            if (inherited_concrete) break;
        }
        const bool overrides = inherited_concrete ? *inherited_concrete
                                                  : (m.override_marker && external_superclass);
        if (overrides) {
            out.push_back(OverrideRecord{desc.signature, classify_body(m)});
        }
    }
    return out;
}

namespace {

MetricsRecord base_metrics(TypeId id, const SourceModel& model)
{
    const TypeEntity& t = model.type(id);
    MetricsRecord r;
    r.qualified_name = t.qualified_name;
    r.loc = t.span.end.line - t.span.begin.line + 1;
    r.nom = static_cast<int>(t.methods.size());
    r.nof = static_cast<int>(t.fields.size());
    for (model::ElementId f : t.fields) {
        const model::ElementDescription& d = model.description(f);
        if (d.visibility != model::Visibility::Public) continue;
        ++r.public_fields;
        if (!d.constant) {
            ++r.nonconstant_public_fields;
            r.nonconstant_public_field_names.push_back(model.element(f).name);
        }
    }
    for (model::ElementId m : t.methods) {
        if (model.description(m).visibility == model::Visibility::Public) ++r.public_methods;
    }
    for (const auto* list : {&t.constructors, &t.methods}) {
        for (model::ElementId m : *list) {
            const model::ElementDescription& d = model.description(m);
            const int cc = 1 + d.decision_points;
            r.method_cc.push_back(MethodComplexity{d.signature, cc});
            r.max_cc = std::max(r.max_cc, cc);
            r.total_cc += cc;
        }
    }
    const Depth depth = depth_of_inheritance(t, model);
    r.dit = depth.value;
    r.inheritance_cycle = depth.cycle;
    if (model.resolved()) {
        r.fan_in = static_cast<int>(model.graph().predecessors(id).size());
        r.fan_out = static_cast<int>(model.graph().successors(id).size());
    }
    r.lcom = lcom(t, model);
    if (t.top_level) {
        r.toplevel_types_in_file =
            static_cast<int>(model.project().files[t.file_index].top_level_types.size());
    }
    r.overrides = override_records(t, model);
    for (model::ElementId m : t.methods) {
        const model::ElementDescription& d = model.description(m);
        for (ChainRecord& c : conditional_chains(*d.method, d.signature)) {
            r.chains.push_back(std::move(c));
        }
    }
    return r;
}

} // namespace

MetricsRecord compute_type_metrics(TypeId id, const SourceModel& model)
{
    MetricsRecord r = base_metrics(id, model);
    r.noc = number_of_children(model.type(id), model);
    return r;
}

MetricsMap compute_metrics(const SourceModel& model)
{
    std::vector<int> children(model.types().size(), 0);
    for (const TypeEntity& t : model.types()) {
        for (TypeId p : direct_parents(t)) ++children[p];
    }
    MetricsMap out;
    for (TypeId id = 0; id < model.types().size(); ++id) {
        MetricsRecord r = base_metrics(id, model);
        r.noc = children[id];
        out.emplace(r.qualified_name, std::move(r));
    }
    return out;
}

std::string dump_metrics(const MetricsMap& metrics)
{
    std::ostringstream out;
    for (const auto& [name, r] : metrics) {
        auto line = [&](std::string_view metric, const auto& value) {
            out << name << '\t' << metric << '\t' << value << '\n';
        };
        char lcom_text[32];
        std::snprintf(lcom_text, sizeof lcom_text, "%.4f", r.lcom);
        line("loc", r.loc);
        line("nom", r.nom);
        line("nof", r.nof);
        line("public_fields", r.public_fields);
        line("public_methods", r.public_methods);
        line("nonconstant_public_fields", r.nonconstant_public_fields);
        line("max_cc", r.max_cc);
        line("total_cc", r.total_cc);
        line("dit", r.dit);
        line("noc", r.noc);
        line("fan_in", r.fan_in);
        line("fan_out", r.fan_out);
        line("lcom", lcom_text);
        for (const MethodComplexity& m : r.method_cc) line("cc:" + m.signature, m.cc);
        for (const OverrideRecord& o : r.overrides) line("override:" + o.signature, to_string(o.body));
        for (const ChainRecord& c : r.chains) {
            line("chain:" + c.signature,
                 std::to_string(c.length) + " " + std::string(to_string(c.subject)) + " " + c.subject_text);
        }
    }
    return out.str();
}

} // namespace smellscan::metrics
