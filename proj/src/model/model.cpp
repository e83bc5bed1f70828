#include <smellscan/model/model.hpp>

#include <smellscan/frontend/walk.hpp>
#include <smellscan/metrics/complexity.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace smellscan::model {

std::string_view to_string(EdgeKind kind)
{
    switch (kind) {
    case EdgeKind::Supertype: return "supertype";
    case EdgeKind::FieldType: return "field-type";
    case EdgeKind::ParameterType: return "parameter-type";
    case EdgeKind::ReturnType: return "return-type";
    case EdgeKind::Instantiation: return "instantiation";
    case EdgeKind::MemberAccess: return "member-access";
    }
    return "";
}

std::string_view to_string(ElementKind kind)
{
    switch (kind) {
    case ElementKind::Field: return "field";
    case ElementKind::Method: return "method";
    case ElementKind::Constructor: return "constructor";
    case ElementKind::Instantiation: return "instantiation";
    }
    return "";
}

std::string_view to_string(Visibility v)
{
    switch (v) {
    case Visibility::Public: return "public";
    case Visibility::Protected: return "protected";
    case Visibility::Package: return "package";
    case Visibility::Private: return "private";
    }
    return "";
}

std::optional<TypeId> SourceModel::find(std::string_view qualified_name) const
{
    auto it = by_name_.find(qualified_name);
    if (it == by_name_.end()) {
        return std::nullopt;
    }
    return it->second;
}

namespace {

using ast::Expr;
using ast::ExprKind;
using ast::Stmt;
using ast::StmtKind;
using ast::TypeRef;

bool is_reference_type_name(const std::string& name)
{
    return !name.empty() && name != "?" && name != "var" && name != "void";
}

std::string signature_of(const ast::MethodDecl& m)
{
    std::string sig = m.name + "(";
    for (std::size_t i = 0; i < m.params.size(); ++i) {
        if (i) sig += ",";
        sig += m.params[i].type.name;
        for (int d = 0; d < m.params[i].type.array_dims; ++d) sig += "[]";
    }
    return sig + ")";
}

bool is_entry_point(const ast::MethodDecl& m)
{
    if (m.is_constructor || m.name != "main" || !m.modifiers.has(ast::Modifier::Static) ||
        !m.return_type || m.return_type->name != "void" || m.params.size() != 1) {
        return false;
    }
    const TypeRef& p = m.params[0].type;
    return (p.name == "String" || p.name == "java.lang.String") && p.array_dims == 1;
}

/// Names introduced inside code: parameters, locals, lambda parameters,
/// catch variables, pattern bindings. They shadow type names used as
/// expression qualifiers.
void collect_local_names(const Stmt& body, std::set<std::string>& out)
{
    ast::walk(
        body,
        [&](const Stmt& s) {
            if (s.kind == StmtKind::LocalVar || s.kind == StmtKind::ForEach) {
                out.insert(s.names.begin(), s.names.end());
            }
            for (const ast::CatchClause& c : s.catches) out.insert(c.name);
        },
        [&](const Expr& e) { out.insert(e.bound_names.begin(), e.bound_names.end()); });
}

void collect_local_names(const Expr& root, std::set<std::string>& out)
{
    ast::walk(
        root,
        [&](const Stmt& s) {
            if (s.kind == StmtKind::LocalVar || s.kind == StmtKind::ForEach) {
                out.insert(s.names.begin(), s.names.end());
            }
            for (const ast::CatchClause& c : s.catches) out.insert(c.name);
        },
        [&](const Expr& e) { out.insert(e.bound_names.begin(), e.bound_names.end()); });
}

// Dotted text of a pure Name/FieldAccess chain, or empty.
std::string name_chain(const Expr& e)
{
    if (e.kind == ExprKind::Name) {
        return e.text;
    }
    if (e.kind == ExprKind::FieldAccess && e.operands.size() == 1) {
        std::string head = name_chain(e.operands[0]);
        return head.empty() ? head : head + "." + e.text;
    }
    return {};
}

/// Collects the names one code unit (a member of a type) refers to.
class ReferenceCollector {
public:
    ReferenceCollector(std::vector<Reference>& out, const std::set<std::string>& type_params,
                       const std::set<std::string>& shadowed)
        : out_(out), type_params_(type_params), shadowed_(shadowed)
    {
    }

    void type_ref(const TypeRef& ref, EdgeKind kind)
    {
        if (!ref.primitive && is_reference_type_name(ref.name) && !type_params_.contains(ref.name)) {
            out_.push_back(Reference{ref.name, kind, ref.pos, false, RefStatus::None, std::nullopt});
        }
        for (const TypeRef& arg : ref.type_args) {
            type_ref(arg, kind);
        }
    }

    void ambiguous(const std::string& chain, ast::SourcePos pos)
    {
        if (chain.empty()) {
            return;
        }
        std::string head = chain.substr(0, chain.find('.'));
        if (shadowed_.contains(head) || type_params_.contains(head)) {
            return;
        }
        out_.push_back(Reference{chain, EdgeKind::MemberAccess, pos, true, RefStatus::None,
                                 std::nullopt});
    }

    // Signature-level names of a local or anonymous type, all as member access.
    void local_type(const ast::TypeDecl& t)
    {
        if (t.supertype) type_ref(*t.supertype, EdgeKind::MemberAccess);
        for (const TypeRef& i : t.interfaces) type_ref(i, EdgeKind::MemberAccess);
        for (const ast::FieldDecl& f : t.fields) type_ref(f.type, EdgeKind::MemberAccess);
        for (const ast::MethodDecl& m : t.methods) {
            if (m.return_type) type_ref(*m.return_type, EdgeKind::MemberAccess);
            for (const ast::Parameter& p : m.params) type_ref(p.type, EdgeKind::MemberAccess);
            for (const TypeRef& th : m.throws) type_ref(th, EdgeKind::MemberAccess);
        }
        for (const ast::TypeDecl& n : t.nested) local_type(n);
    }

    void code(const Stmt& root)
    {
        ast::walk(root, [this](const Stmt& s) { on_stmt(s); }, [this](const Expr& e) { on_expr(e); });
    }

    void code(const Expr& root)
    {
        ast::walk(root, [this](const Stmt& s) { on_stmt(s); }, [this](const Expr& e) { on_expr(e); });
    }

private:
    void on_stmt(const Stmt& s)
    {
        if ((s.kind == StmtKind::LocalVar || s.kind == StmtKind::ForEach) && s.declared_type) {
            type_ref(*s.declared_type, EdgeKind::MemberAccess);
        }
        for (const ast::CatchClause& c : s.catches) {
            for (const TypeRef& t : c.types) type_ref(t, EdgeKind::MemberAccess);
        }
        for (const ast::TypeDecl& t : s.local_types) local_type(t);
    }

    void on_expr(const Expr& e)
    {
        switch (e.kind) {
        case ExprKind::New:
        case ExprKind::NewArray:
            if (e.type) type_ref(*e.type, EdgeKind::Instantiation);
            for (const ast::TypeDecl& body : e.anonymous_body) {
                // Enum constant bodies reuse this node without a type.
                local_type(body);
            }
            break;
        case ExprKind::Cast:
        case ExprKind::InstanceOf:
        case ExprKind::ClassLiteral:
            if (e.type) type_ref(*e.type, EdgeKind::MemberAccess);
            break;
        case ExprKind::MethodRef:
            if (e.type) {
                type_ref(*e.type, EdgeKind::MemberAccess);
            } else if (!e.operands.empty()) {
                ambiguous(name_chain(e.operands[0]), e.span.begin);
            }
            break;
        case ExprKind::MethodCall:
            if (e.has_receiver && !e.operands.empty()) {
                ambiguous(name_chain(e.operands[0]), e.span.begin);
            }
            break;
        case ExprKind::FieldAccess:
            if (!e.operands.empty()) {
                ambiguous(name_chain(e.operands[0]), e.span.begin);
            }
            break;
        default:
            break;
        }
        for (const TypeRef& t : e.explicit_type_args) type_ref(t, EdgeKind::MemberAccess);
    }

    std::vector<Reference>& out_;
    const std::set<std::string>& type_params_;
    const std::set<std::string>& shadowed_;
};

std::vector<std::string> names_of(const std::vector<Reference>& refs, std::size_t from)
{
    std::vector<std::string> names;
    for (std::size_t i = from; i < refs.size(); ++i) names.push_back(refs[i].name);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

} // namespace

struct ModelBuilder {
    SourceModel model;
    std::vector<ModelError> errors;
    std::map<std::string, std::size_t> namespace_index;

    std::size_t namespace_for(const std::string& name)
    {
        auto [it, inserted] = namespace_index.emplace(name, model.namespaces_.size());
        if (inserted) {
            model.namespaces_.push_back(NamespaceEntity{name, {}});
        }
        return it->second;
    }

    ElementId add_element(TypeId owner, ElementKind kind, std::string name, int line,
                          ElementDescription desc)
    {
        ElementId id = model.elements_.size();
        model.elements_.push_back(ElementEntity{kind, std::move(name), owner, line});
        model.descriptions_.push_back(std::move(desc));
        return id;
    }

    static Visibility visibility_of(const ast::Modifiers& mods, bool interface_member)
    {
        if (mods.has(ast::Modifier::Public)) return Visibility::Public;
        if (mods.has(ast::Modifier::Protected)) return Visibility::Protected;
        if (mods.has(ast::Modifier::Private)) return Visibility::Private;
        return interface_member ? Visibility::Public : Visibility::Package;
    }

    std::optional<TypeId> add_type(const ast::TypeDecl& decl, std::size_t file_index,
                                   const std::string& prefix, std::optional<TypeId> enclosing,
                                   std::size_t ns, const std::set<std::string>& outer_params,
                                   const std::set<std::string>& outer_fields)
    {
        const auto& unit = (*model.units_)[file_index];
        std::string qualified = prefix.empty() ? decl.name : prefix + "." + decl.name;
        if (auto existing = model.by_name_.find(qualified); existing != model.by_name_.end()) {
            const std::string& first = model.types_[existing->second].file;
            errors.push_back(ModelError{qualified, first, unit.path,
                                        "duplicate type '" + qualified + "' declared in " + first +
                                            " and " + unit.path});
            return std::nullopt;
        }

        const TypeId id = model.types_.size();
        model.by_name_.emplace(qualified, id);
        {
            TypeEntity t;
            t.qualified_name = qualified;
            t.simple_name = decl.name;
            t.kind = decl.kind;
            t.annotation_type = decl.annotation_type;
            t.modifiers = decl.modifiers;
            t.enclosing = enclosing;
            t.namespace_index = ns;
            t.file_index = file_index;
            t.file = unit.path;
            t.line = decl.name_pos.line;
            t.span = decl.span;
            t.top_level = !enclosing;
            t.decl = &decl;
            model.types_.push_back(std::move(t));
        }

        std::set<std::string> type_params = outer_params;
        type_params.insert(decl.type_params.begin(), decl.type_params.end());
        std::set<std::string> fields_in_scope = outer_fields;
        for (const ast::FieldDecl& f : decl.fields) fields_in_scope.insert(f.name);
        fields_in_scope.insert(decl.enum_constants.begin(), decl.enum_constants.end());

        const bool interface_member = decl.kind == ast::TypeKind::Interface;
        std::vector<Reference> refs;
        std::vector<ElementId> fields, methods, ctors, news;

        {
            ReferenceCollector collect(refs, type_params, fields_in_scope);
            if (decl.supertype) collect.type_ref(*decl.supertype, EdgeKind::Supertype);
            for (const TypeRef& i : decl.interfaces) collect.type_ref(i, EdgeKind::Supertype);
        }

        for (const ast::FieldDecl& f : decl.fields) {
            std::size_t mark = refs.size();
            std::set<std::string> shadow = fields_in_scope;
            if (f.initializer) collect_local_names(*f.initializer, shadow);
            ReferenceCollector collect(refs, type_params, shadow);
            collect.type_ref(f.type, EdgeKind::FieldType);
            if (f.initializer) collect.code(*f.initializer);

            ElementDescription d;
            d.modifiers = f.modifiers;
            d.visibility = visibility_of(f.modifiers, interface_member);
            d.signature = f.name;
            d.type_name = f.type.name;
            d.constant = interface_member || (f.modifiers.has(ast::Modifier::Static) &&
                                              f.modifiers.has(ast::Modifier::Final));
            d.referenced_names = names_of(refs, mark);
            d.field = &f;
            fields.push_back(add_element(id, ElementKind::Field, f.name, f.span.begin.line,
                                         std::move(d)));
        }

        for (const ast::MethodDecl& m : decl.methods) {
            std::size_t mark = refs.size();
            std::set<std::string> params = type_params;
            params.insert(m.type_params.begin(), m.type_params.end());
            std::set<std::string> shadow = fields_in_scope;
            for (const ast::Parameter& p : m.params) shadow.insert(p.name);
            if (m.body) collect_local_names(*m.body, shadow);

            ReferenceCollector collect(refs, params, shadow);
            if (m.return_type) collect.type_ref(*m.return_type, EdgeKind::ReturnType);
            for (const ast::Parameter& p : m.params) collect.type_ref(p.type, EdgeKind::ParameterType);
            for (const TypeRef& th : m.throws) collect.type_ref(th, EdgeKind::MemberAccess);
            if (m.body) collect.code(*m.body);

            ElementDescription d;
            d.modifiers = m.modifiers;
            d.visibility = visibility_of(m.modifiers, interface_member);
            d.signature = signature_of(m);
            d.type_name = m.return_type ? m.return_type->name : std::string();
            d.abstract = !m.body;
            d.decision_points = m.body ? metrics::count_decision_points(*m.body) : 0;
            d.referenced_names = names_of(refs, mark);
            d.method = &m;
            ElementId eid = add_element(id, m.is_constructor ? ElementKind::Constructor
                                                             : ElementKind::Method,
                                        m.name, m.span.begin.line, std::move(d));
            (m.is_constructor ? ctors : methods).push_back(eid);
            if (is_entry_point(m)) {
                model.types_[id].entry_point = true;
            }
        }

        {
            std::set<std::string> shadow = fields_in_scope;
            for (const Stmt& s : decl.initializers) collect_local_names(s, shadow);
            ReferenceCollector collect(refs, type_params, shadow);
            for (const Stmt& s : decl.initializers) collect.code(s);
            for (const Expr& e : decl.enum_constant_args) collect.code(e);
        }

        // Local instantiations in this type's own code (not in member types).
        auto record_new = [&](const Expr& e) {
            if ((e.kind == ExprKind::New || e.kind == ExprKind::NewArray) && e.type) {
                ElementDescription d;
                d.signature = "new " + e.type->name;
                d.type_name = e.type->name;
                d.visibility = Visibility::Private;
                news.push_back(add_element(id, ElementKind::Instantiation, e.type->name,
                                           e.span.begin.line, std::move(d)));
            }
        };
        auto ignore_stmt = [](const Stmt&) {};
        for (const ast::FieldDecl& f : decl.fields) {
            if (f.initializer) ast::walk(*f.initializer, ignore_stmt, record_new);
        }
        for (const ast::MethodDecl& m : decl.methods) {
            if (m.body) ast::walk(*m.body, ignore_stmt, record_new);
        }
        for (const Stmt& s : decl.initializers) ast::walk(s, ignore_stmt, record_new);

        TypeEntity& t = model.types_[id];
        t.type_params.assign(type_params.begin(), type_params.end());
        t.references = std::move(refs);
        t.fields = std::move(fields);
        t.methods = std::move(methods);
        t.constructors = std::move(ctors);
        t.instantiations = std::move(news);

        // Static nested types cannot see the enclosing type's parameters, but
        // keeping them in scope only suppresses edges to same-named types.
        std::vector<TypeId> nested;
        for (const ast::TypeDecl& n : decl.nested) {
            if (auto nid = add_type(n, file_index, qualified, id, ns, type_params, fields_in_scope)) {
                nested.push_back(*nid);
            }
        }
        model.types_[id].nested = std::move(nested);
        return id;
    }
};

BuildResult build_model(std::vector<ast::CompilationUnit> units)
{
    std::stable_sort(units.begin(), units.end(),
                     [](const auto& a, const auto& b) { return a.path < b.path; });

    ModelBuilder b;
    b.model.units_ = std::make_shared<const std::vector<ast::CompilationUnit>>(std::move(units));
    b.namespace_for("");

    const auto& all = *b.model.units_;
    for (std::size_t fi = 0; fi < all.size(); ++fi) {
        const ast::CompilationUnit& unit = all[fi];
        std::size_t ns = b.namespace_for(unit.package_name);
        FileEntry file{unit.path, unit.package_name, unit.line_count, {}, unit.imports};
        for (const ast::TypeDecl& decl : unit.types) {
            if (auto id = b.add_type(decl, fi, unit.package_name, std::nullopt, ns, {}, {})) {
                file.top_level_types.push_back(*id);
                b.model.namespaces_[ns].types.push_back(*id);
            }
        }
        b.model.project_.total_lines += unit.line_count;
        b.model.project_.files.push_back(std::move(file));
    }

    auto& roster = b.model.project_.namespace_roster;
    for (const auto& [name, index] : b.namespace_index) roster.push_back(index);
    b.model.project_.type_count = b.model.types_.size();
    b.model.project_.element_count = b.model.elements_.size();
    return BuildResult{std::move(b.model), std::move(b.errors)};
}

namespace {

class Resolver {
public:
    explicit Resolver(const SourceModel& model) : model_(model) {}

    std::optional<TypeId> resolve(TypeId from, const std::string& name, bool& external) const
    {
        external = false;
        const std::size_t dot = name.find('.');
        if (dot == std::string::npos) {
            if (auto hit = resolve_simple(from, name, external)) return hit;
            return std::nullopt;
        }
        if (auto exact = model_.find(name)) {
            return exact;
        }
        // Leading segment through scope, then nested members.
        std::vector<std::string> parts = split(name);
        bool head_external = false;
        if (auto head = resolve_simple(from, parts[0], head_external)) {
            if (auto t = descend(*head, parts, 1)) return t;
            external = true;
            return std::nullopt;
        }
        // Package-qualified prefix, then nested members.
        std::string prefix = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) {
            prefix += "." + parts[i];
            if (auto t = model_.find(prefix)) {
                if (auto n = descend(*t, parts, i + 1)) return n;
                break;
            }
        }
        external = true;
        return std::nullopt;
    }

private:
    static std::vector<std::string> split(const std::string& name)
    {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (;;) {
            std::size_t dot = name.find('.', start);
            parts.push_back(name.substr(start, dot - start));
            if (dot == std::string::npos) break;
            start = dot + 1;
        }
        return parts;
    }

    std::optional<TypeId> member_type(TypeId owner, const std::string& simple) const
    {
        for (TypeId n : model_.type(owner).nested) {
            if (model_.type(n).simple_name == simple) return n;
        }
        return std::nullopt;
    }

    std::optional<TypeId> descend(TypeId t, const std::vector<std::string>& parts,
                                  std::size_t from) const
    {
        for (std::size_t i = from; i < parts.size(); ++i) {
            auto next = member_type(t, parts[i]);
            if (!next) return std::nullopt;
            t = *next;
        }
        return t;
    }

    std::optional<TypeId> resolve_simple(TypeId from, const std::string& name, bool& external) const
    {
        // 1. the type itself, its member types, then outward through enclosing types
        for (std::optional<TypeId> scope = from; scope; scope = model_.type(*scope).enclosing) {
            if (model_.type(*scope).simple_name == name) return *scope;
            if (auto n = member_type(*scope, name)) return n;
        }
        const TypeEntity& origin = model_.type(from);
        // 2. same namespace
        for (TypeId t : model_.namespaces()[origin.namespace_index].types) {
            if (model_.type(t).simple_name == name) return t;
        }
        const FileEntry& file = model_.project().files[origin.file_index];
        // 3. single-type imports
        for (const ast::Import& imp : file.imports) {
            if (imp.wildcard || imp.is_static) continue;
            const std::size_t dot = imp.name.rfind('.');
            std::string_view last = dot == std::string::npos ? std::string_view(imp.name)
                                                             : std::string_view(imp.name).substr(dot + 1);
            if (last == name) {
                if (auto t = model_.find(imp.name)) return t;
                external = true;
                return std::nullopt;
            }
        }
        // 4. wildcard imports: a package roster, or the member types of a type
        for (const ast::Import& imp : file.imports) {
            if (!imp.wildcard || imp.is_static) continue;
            if (auto owner = model_.find(imp.name)) {
                if (auto n = member_type(*owner, name)) return n;
                continue;
            }
            for (const NamespaceEntity& ns : model_.namespaces()) {
                if (ns.name != imp.name) continue;
                for (TypeId t : ns.types) {
                    if (model_.type(t).simple_name == name) return t;
                }
            }
        }
        external = true;
        return std::nullopt;
    }

    const SourceModel& model_;
};

} // namespace

SourceModel resolve_references(SourceModel model)
{
    Resolver resolver(model);
    std::vector<Edge> edges;

    for (TypeId id = 0; id < model.types_.size(); ++id) {
        TypeEntity& t = model.types_[id];
        for (Reference& ref : t.references) {
            bool external = false;
            ref.target = resolver.resolve(id, ref.name, external);
            if (ref.target) {
                ref.status = RefStatus::Resolved;
                edges.push_back(Edge{id, *ref.target, ref.kind});
            } else {
                ref.status = ref.ambiguous ? RefStatus::None : RefStatus::External;
            }
        }

        auto link = [&](const TypeRef& written) {
            TypeLink l;
            l.name = written.name;
            bool external = false;
            l.target = resolver.resolve(id, written.name, external);
            if (l.target && *l.target == id) {
                l.target.reset();  // never its own supertype
            }
            l.status = l.target ? RefStatus::Resolved : RefStatus::External;
            return l;
        };
        t.supertype = t.decl->supertype ? link(*t.decl->supertype) : TypeLink{};
        t.interfaces.clear();
        for (const TypeRef& i : t.decl->interfaces) t.interfaces.push_back(link(i));
    }

    model.graph_ = DependencyGraph(model.types_.size(), std::move(edges));
    model.resolved_ = true;
    return model;
}

const TypeEntity* lookup_type(const SourceModel& model, std::string_view qualified_name)
{
    auto id = model.find(qualified_name);
    return id ? &model.type(*id) : nullptr;
}

std::string dump_model(const SourceModel& model)
{
    std::ostringstream out;
    const ProjectEntity& project = model.project();
    out << "4\tproject\t(project)\t\t0\n";
    for (const FileEntry& f : project.files) {
        out << "4\tfile\t" << (f.package_name.empty() ? "(default)" : f.package_name) << '\t'
            << f.path << "\t1\n";
    }
    for (std::size_t ns : project.namespace_roster) {
        const std::string& name = model.namespaces()[ns].name;
        out << "3\tnamespace\t" << (name.empty() ? "(default)" : name) << "\t\t0\n";
    }
    auto kind_name = [](ast::TypeKind k) {
        switch (k) {
        case ast::TypeKind::Class: return "class";
        case ast::TypeKind::Interface: return "interface";
        case ast::TypeKind::Enum: return "enum";
        }
        return "class";
    };
    for (const TypeEntity& t : model.types()) {
        out << "3\t" << kind_name(t.kind) << '\t' << t.qualified_name << '\t' << t.file << '\t'
            << t.line << '\n';
    }
    for (std::size_t i = 0; i < model.elements().size(); ++i) {
        const ElementEntity& e = model.element(i);
        const TypeEntity& owner = model.type(e.owner);
        out << "2\t" << to_string(e.kind) << "-description\t" << owner.qualified_name << '#'
            << model.description(i).signature << '\t' << owner.file << '\t' << e.line << '\n';
    }
    for (const ElementEntity& e : model.elements()) {
        const TypeEntity& owner = model.type(e.owner);
        out << "1\t" << to_string(e.kind) << '\t' << owner.qualified_name << '#' << e.name << '\t'
            << owner.file << '\t' << e.line << '\n';
    }
    return out.str();
}

} // namespace smellscan::model
