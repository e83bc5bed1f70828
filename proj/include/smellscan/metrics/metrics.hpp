#pragma once

#include <smellscan/model/model.hpp>

#include <map>
#include <string>
#include <vector>

namespace smellscan::metrics {

enum class BodyClass { Empty, ThrowOnly, Substantive };
enum class SubjectKind { TypeTest, ConstantTag };

std::string_view to_string(BodyClass c);
std::string_view to_string(SubjectKind k);

struct MethodComplexity {
    std::string signature;
    int cc = 1;

    friend bool operator==(const MethodComplexity&, const MethodComplexity&) = default;
};

/// A method that replaces an inherited concrete method.
struct OverrideRecord {
    std::string signature;
    BodyClass body = BodyClass::Substantive;

    friend bool operator==(const OverrideRecord&, const OverrideRecord&) = default;
};

/// Longest run of branches in one method that dispatch on the same subject.
struct ChainRecord {
    std::string signature;
    int length = 0;
    SubjectKind subject = SubjectKind::ConstantTag;
    std::string subject_text;

    friend bool operator==(const ChainRecord&, const ChainRecord&) = default;
};

struct MetricsRecord {
    std::string qualified_name;
    int loc = 0;
    int nom = 0;  // methods, constructors excluded
    int nof = 0;
    int public_fields = 0;
    int public_methods = 0;
    int nonconstant_public_fields = 0;
    std::vector<std::string> nonconstant_public_field_names;
    std::vector<MethodComplexity> method_cc;  // methods and constructors
    int max_cc = 0;
    int total_cc = 0;
    int dit = 1;
    bool inheritance_cycle = false;
    int noc = 0;
    int fan_in = 0;
    int fan_out = 0;
    double lcom = 0.0;
    int toplevel_types_in_file = 0;  // 0 for nested types
    std::vector<OverrideRecord> overrides;
    std::vector<ChainRecord> chains;

    friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

using MetricsMap = std::map<std::string, MetricsRecord, std::less<>>;

struct Depth {
    int value = 1;
    bool cycle = false;
};

/// 1 for a type without an in-model supertype, else 1 + depth of the
/// supertype. A supertype cycle is cut at the first revisited type.
Depth depth_of_inheritance(const model::TypeEntity& type, const model::SourceModel& model);

/// In-model types whose direct supertype or direct interface is `type`.
int number_of_children(const model::TypeEntity& type, const model::SourceModel& model);

/// Henderson-Sellers lack of cohesion from per-field accessor counts:
/// (nom - mean(accessors)) / (nom - 1), clamped to [0,1]; 0 when nom < 2
/// or there are no fields.
double lcom_from_counts(int nom, const std::vector<int>& accessors_per_field);

double lcom(const model::TypeEntity& type, const model::SourceModel& model);

/// Body shape of a method: no statements, a single `throw`, or anything else.
BodyClass classify_body(const ast::MethodDecl& method);

/// Same-subject branch chains of a method body, longest per subject, for
/// if/else-if cascades, runs of consecutive `if` statements, and switches.
std::vector<ChainRecord> conditional_chains(const ast::MethodDecl& method,
                                            const std::string& signature);

std::vector<OverrideRecord> override_records(const model::TypeEntity& type,
                                             const model::SourceModel& model);

MetricsRecord compute_type_metrics(model::TypeId id, const model::SourceModel& model);

/// One record per type of a resolved model.
MetricsMap compute_metrics(const model::SourceModel& model);

/// `TYPE<TAB>metric<TAB>value` lines, types sorted.
std::string dump_metrics(const MetricsMap& metrics);

} // namespace smellscan::metrics
