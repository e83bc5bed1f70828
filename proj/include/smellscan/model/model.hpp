#pragma once

#include <smellscan/frontend/ast.hpp>
#include <smellscan/model/graph.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace smellscan::model {

using TypeId = std::size_t;
using ElementId = std::size_t;

enum class ElementKind { Field, Method, Constructor, Instantiation };
enum class Visibility { Public, Protected, Package, Private };

std::string_view to_string(ElementKind kind);
std::string_view to_string(Visibility v);

/// Layer 1: a data element or object declared or created inside a type.
struct ElementEntity {
    ElementKind kind = ElementKind::Field;
    std::string name;
    TypeId owner = 0;
    int line = 0;
};

/// Layer 2: description of the layer-1 element with the same index.
struct ElementDescription {
    ast::Modifiers modifiers;
    Visibility visibility = Visibility::Package;
    std::string signature;   // `m(int,String)` for methods, the name for fields
    std::string type_name;   // field type, return type or instantiated type (raw)
    bool constant = false;   // static final field, or any interface field
    bool abstract = false;   // method without a body
    int decision_points = 0;
    std::vector<std::string> referenced_names;
    const ast::FieldDecl* field = nullptr;
    const ast::MethodDecl* method = nullptr;
};

enum class RefStatus { None, Resolved, External };

/// A name used by a type, and what it resolved to.
struct Reference {
    std::string name;
    EdgeKind kind = EdgeKind::MemberAccess;
    ast::SourcePos pos;
    bool ambiguous = false;  // expression qualifier that may be a variable
    RefStatus status = RefStatus::None;
    std::optional<TypeId> target;
};

/// Supertype / interface link of a type declaration.
struct TypeLink {
    std::string name;
    RefStatus status = RefStatus::None;
    std::optional<TypeId> target;
};

/// Layer 3: a declared type.
struct TypeEntity {
    std::string qualified_name;
    std::string simple_name;
    ast::TypeKind kind = ast::TypeKind::Class;
    bool annotation_type = false;
    ast::Modifiers modifiers;
    TypeLink supertype;                 // status None when not declared
    std::vector<TypeLink> interfaces;
    std::vector<ElementId> fields;
    std::vector<ElementId> methods;
    std::vector<ElementId> constructors;
    std::vector<ElementId> instantiations;
    std::vector<TypeId> nested;
    std::optional<TypeId> enclosing;
    std::size_t namespace_index = 0;
    std::size_t file_index = 0;
    std::string file;
    int line = 0;
    ast::SourceSpan span;
    bool entry_point = false;  // declares `static void main(String[])`
    bool top_level = false;
    std::vector<std::string> type_params;
    std::vector<Reference> references;
    const ast::TypeDecl* decl = nullptr;

    bool is_abstract() const
    {
        return kind == ast::TypeKind::Interface || modifiers.has(ast::Modifier::Abstract);
    }
};

/// Layer 3: a package.
struct NamespaceEntity {
    std::string name;  // empty for the default package
    std::vector<TypeId> types;  // top-level types, in model order
};

struct FileEntry {
    std::string path;
    std::string package_name;
    int line_count = 0;
    std::vector<TypeId> top_level_types;
    std::vector<ast::Import> imports;
};

/// Layer 4: corpus-level aggregation.
struct ProjectEntity {
    std::vector<FileEntry> files;
    std::vector<std::size_t> namespace_roster;  // indices, sorted by name
    std::size_t type_count = 0;
    std::size_t element_count = 0;
    long long total_lines = 0;
};

struct BuildResult;

struct ModelError {
    std::string qualified_name;
    std::string first_file;
    std::string second_file;
    std::string message;
};

/// The four-layer pseudo-model plus the type dependency graph. Immutable
/// once `resolve_references` has run; copies share the underlying ASTs.
class SourceModel {
public:
    const std::vector<ElementEntity>& elements() const { return elements_; }
    const std::vector<ElementDescription>& descriptions() const { return descriptions_; }
    const std::vector<TypeEntity>& types() const { return types_; }
    const std::vector<NamespaceEntity>& namespaces() const { return namespaces_; }
    const ProjectEntity& project() const { return project_; }
    const DependencyGraph& graph() const { return graph_; }
    bool resolved() const { return resolved_; }

    const TypeEntity& type(TypeId id) const { return types_.at(id); }
    const ElementEntity& element(ElementId id) const { return elements_.at(id); }
    const ElementDescription& description(ElementId id) const { return descriptions_.at(id); }

    std::optional<TypeId> find(std::string_view qualified_name) const;

private:
    friend struct ModelBuilder;
    friend SourceModel resolve_references(SourceModel model);
    friend BuildResult build_model(std::vector<ast::CompilationUnit> units);

    std::shared_ptr<const std::vector<ast::CompilationUnit>> units_;
    std::vector<ElementEntity> elements_;
    std::vector<ElementDescription> descriptions_;
    std::vector<TypeEntity> types_;
    std::vector<NamespaceEntity> namespaces_;
    ProjectEntity project_;
    DependencyGraph graph_;
    std::map<std::string, TypeId, std::less<>> by_name_;
    bool resolved_ = false;
};

struct BuildResult {
    SourceModel model;
    std::vector<ModelError> errors;
};

/// Populates all four layers. A type whose qualified name was already
/// declared by an earlier file is reported in `errors` and left out.
BuildResult build_model(std::vector<ast::CompilationUnit> units);

/// Resolves every referenced name (nested names of the type and its
/// enclosing types, then the same namespace, explicit imports, wildcard
/// imports; otherwise external) and builds the dependency graph.
SourceModel resolve_references(SourceModel model);

/// Case-sensitive lookup by qualified name.
const TypeEntity* lookup_type(const SourceModel& model, std::string_view qualified_name);

/// `LAYER<TAB>kind<TAB>qualified-name<TAB>file<TAB>line` lines, layer 4 first.
std::string dump_model(const SourceModel& model);

} // namespace smellscan::model
