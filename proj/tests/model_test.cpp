#include <smellscan/model/model.hpp>

#include "support/test_support.hpp"

#include <gtest/gtest.h>

using namespace smellscan;
using smellscan::testing::model_of;
using smellscan::testing::parse_ok;

namespace {

bool has_edge(const model::SourceModel& m, std::string_view from, std::string_view to, model::EdgeKind kind)
{
    const auto a = m.find(from);
    const auto b = m.find(to);
    if (!a || !b) return false;
    for (const model::Edge& e : m.graph().edges()) {
        if (e.from == *a && e.to == *b && e.kind == kind) return true;
    }
    return false;
}

} // namespace

TEST(Model, EmptyInputHasOnlyTheDefaultNamespace)
{
    const model::SourceModel m = model::resolve_references(model::build_model({}).model);
    EXPECT_EQ(m.namespaces().size(), 1u);
    EXPECT_EQ(m.namespaces()[0].name, "");
    EXPECT_TRUE(m.types().empty());
    EXPECT_TRUE(m.elements().empty());
    EXPECT_EQ(m.graph().node_count(), 0u);
}

TEST(Model, TypeWithTwoFieldsAndThreeMethods)
{
    const model::SourceModel m = model_of({{"p/A.java",
        "package p; public class A { private int x; public String s;\n"
        "  void a() {} int b(int n) { return n; } public static void main(String[] args) {} }"}});
    ASSERT_EQ(m.types().size(), 1u);
    const model::TypeEntity& a = m.types()[0];
    EXPECT_EQ(a.qualified_name, "p.A");
    EXPECT_EQ(a.fields.size(), 2u);
    EXPECT_EQ(a.methods.size(), 3u);
    EXPECT_EQ(m.elements().size(), 5u);
    EXPECT_EQ(m.descriptions().size(), m.elements().size());
    EXPECT_TRUE(a.entry_point);
    EXPECT_EQ(m.description(a.methods[1]).signature, "b(int)");
    EXPECT_EQ(m.description(a.fields[0]).visibility, model::Visibility::Private);
    EXPECT_EQ(m.description(a.fields[1]).visibility, model::Visibility::Public);
    EXPECT_EQ(m.project().type_count, 1u);
    EXPECT_EQ(m.project().element_count, 5u);
}

TEST(Model, DuplicateTypeNamesBothFiles)
{
    std::vector<ast::CompilationUnit> units;
    units.push_back(parse_ok("package p; class A {}", "one/A.java"));
    units.push_back(parse_ok("package p; class A { int extra; }", "two/A.java"));
    const model::BuildResult r = model::build_model(std::move(units));
    ASSERT_EQ(r.errors.size(), 1u);
    EXPECT_EQ(r.errors[0].qualified_name, "p.A");
    EXPECT_NE(r.errors[0].message.find("one/A.java"), std::string::npos);
    EXPECT_NE(r.errors[0].message.find("two/A.java"), std::string::npos);
    ASSERT_EQ(r.model.types().size(), 1u);
    EXPECT_TRUE(r.model.types()[0].fields.empty());
}

TEST(Model, FieldTypeEdgeAndExternalReference)
{
    const model::SourceModel m = model_of({
        {"p/A.java", "package p; class A { B b; java.util.List<String> names; }"},
        {"p/B.java", "package p; class B {}"},
    });
    EXPECT_TRUE(has_edge(m, "p.A", "p.B", model::EdgeKind::FieldType));
    EXPECT_EQ(m.graph().edges().size(), 1u);
    const model::TypeEntity& a = *model::lookup_type(m, "p.A");
    bool external = false;
    for (const model::Reference& r : a.references) {
        if (r.name == "java.util.List") external = r.status == model::RefStatus::External && !r.target;
    }
    EXPECT_TRUE(external);
}

TEST(Model, MutualSupertypeEdgesFormOneComponent)
{
    const model::SourceModel m = model_of({
        {"A.java", "class A extends B {}"},
        {"B.java", "class B extends A {}"},
    });
    EXPECT_TRUE(has_edge(m, "A", "B", model::EdgeKind::Supertype));
    EXPECT_TRUE(has_edge(m, "B", "A", model::EdgeKind::Supertype));
    EXPECT_EQ(m.graph().component_members(*m.find("A")).size(), 2u);
}

TEST(Model, EdgeKindsFollowSyntacticOrigin)
{
    const model::SourceModel m = model_of({
        {"A.java", "class A { R r() { return null; } void p(P x) {} void i() { new N(); S.go(); } }"},
        {"R.java", "class R {}"}, {"P.java", "class P {}"}, {"N.java", "class N {}"},
        {"S.java", "class S { static void go() {} }"},
    });
    EXPECT_TRUE(has_edge(m, "A", "R", model::EdgeKind::ReturnType));
    EXPECT_TRUE(has_edge(m, "A", "P", model::EdgeKind::ParameterType));
    EXPECT_TRUE(has_edge(m, "A", "N", model::EdgeKind::Instantiation));
    EXPECT_TRUE(has_edge(m, "A", "S", model::EdgeKind::MemberAccess));
}

TEST(Model, ResolutionPrefersSamePackageThenImports)
{
    const model::SourceModel m = model_of({
        {"a/Util.java", "package a; public class Util {}"},
        {"b/Util.java", "package b; public class Util {}"},
        {"b/User.java", "package b; import a.*; class User { Util u; }"},
        {"c/User.java", "package c; import a.Util; class User { Util u; }"},
    });
    EXPECT_TRUE(has_edge(m, "b.User", "b.Util", model::EdgeKind::FieldType));
    EXPECT_FALSE(has_edge(m, "b.User", "a.Util", model::EdgeKind::FieldType));
    EXPECT_TRUE(has_edge(m, "c.User", "a.Util", model::EdgeKind::FieldType));
}

TEST(Model, NestedTypesAndLookupIsCaseSensitive)
{
    const model::SourceModel m = model_of({{"p/Outer.java",
        "package p; class Outer { static class Inner {} Inner i; }"}});
    ASSERT_NE(model::lookup_type(m, "p.Outer.Inner"), nullptr);
    EXPECT_EQ(model::lookup_type(m, "p.outer"), nullptr);
    EXPECT_EQ(model::lookup_type(m, "P.Outer"), nullptr);
    const model::TypeEntity& inner = *model::lookup_type(m, "p.Outer.Inner");
    EXPECT_FALSE(inner.top_level);
    EXPECT_EQ(m.type(*inner.enclosing).qualified_name, "p.Outer");
    EXPECT_TRUE(has_edge(m, "p.Outer", "p.Outer.Inner", model::EdgeKind::FieldType));
}

TEST(Model, CountsAreConservedAcrossLayers)
{
    const model::SourceModel m = model_of({
        {"a/X.java", "package a; class X { int f; X() {} void g() { Object o = new Object(); } class Y { int h; } }"},
        {"a/Z.java", "package a; interface Z { int K = 1; void m(); }"},
        {"b/W.java", "package b; enum W { A, B; void q() {} }"},
    });
    std::size_t per_type = 0;
    for (const model::TypeEntity& t : m.types()) {
        per_type += t.fields.size() + t.methods.size() + t.constructors.size() + t.instantiations.size();
    }
    EXPECT_EQ(per_type, m.elements().size());
    std::size_t top = 0;
    for (const model::NamespaceEntity& ns : m.namespaces()) top += ns.types.size();
    std::size_t nested = 0;
    for (const model::TypeEntity& t : m.types()) nested += t.nested.size();
    EXPECT_EQ(top + nested, m.types().size());
    EXPECT_EQ(m.project().type_count, m.types().size());
    EXPECT_EQ(m.project().files.size(), 3u);
    for (std::size_t id = 0; id < m.elements().size(); ++id) {
        const model::TypeEntity& owner = m.type(m.element(id).owner);
        const auto& lists = {owner.fields, owner.methods, owner.constructors, owner.instantiations};
        bool found = false;
        for (const auto& l : lists) found = found || std::find(l.begin(), l.end(), id) != l.end();
        EXPECT_TRUE(found) << "element " << id;
    }
}

TEST(Model, ResolutionIsIdempotentAndDumpIsStable)
{
    const std::map<std::string, std::string> files = {
        {"p/A.java", "package p; class A extends B { C c; }"},
        {"p/B.java", "package p; class B { A a; }"},
        {"p/C.java", "package p; class C {}"},
    };
    const model::SourceModel once = model_of(files);
    const model::SourceModel twice = model::resolve_references(once);
    EXPECT_EQ(once.graph(), twice.graph());
    EXPECT_EQ(model::dump_model(once), model::dump_model(twice));
    EXPECT_EQ(model::dump_model(once), model::dump_model(model_of(files)));
}
