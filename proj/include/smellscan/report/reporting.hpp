#pragma once

#include <smellscan/detect/detectors.hpp>
#include <smellscan/smell_kind.hpp>

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace smellscan::report {

inline constexpr std::string_view kFixedTimestamp = "1970-01-01T00:00:00Z";

struct ProvenanceRecord {
    std::string timestamp;
    detect::SmellFinding finding;

    friend bool operator==(const ProvenanceRecord&, const ProvenanceRecord&) = default;
};

/// Current UTC time as `YYYY-MM-DDTHH:MM:SSZ`.
std::string current_timestamp();

/// Backslash-escapes tab, newline, carriage return and backslash.
std::string escape_field(std::string_view text);
std::string unescape_field(std::string_view text);

/// `timestamp<TAB>kind<TAB>qualified-name<TAB>file<TAB>line<TAB>k=v;k=v`.
/// Inside evidence `;` and `=` are escaped as well.
std::string format_record(const detect::SmellFinding& finding, std::string_view timestamp);

/// One line per finding, all with the same timestamp.
std::string format_provenance(const std::vector<detect::SmellFinding>& findings, std::string_view timestamp);

/// Writes the log; returns the number of records. Throws IoError.
std::size_t write_provenance(const std::vector<detect::SmellFinding>& findings,
                             const std::filesystem::path& path, bool fixed_timestamp);

/// Inverse of `format_provenance`. Throws LoadError naming the line.
std::vector<ProvenanceRecord> parse_provenance(std::string_view text);
std::vector<ProvenanceRecord> load_provenance(const std::filesystem::path& path);

struct SummaryTable {
    std::array<long long, kSmellKindCount> counts{};
    long long total = 0;

    long long count(SmellKind kind) const { return counts[index_of(kind)]; }
    /// Share of all findings in percent; 0 when there are none.
    double percent(SmellKind kind) const;
};

SummaryTable summarize(const std::vector<detect::SmellFinding>& findings);
SummaryTable summarize_counts(const std::array<long long, kSmellKindCount>& counts);

enum class Format { Text, Tsv };

/// Throws ConfigError for anything but `text` or `tsv`.
Format parse_format(std::string_view text);

/// Header, the nine smells in report order, then the total.
std::string render_summary(const SummaryTable& table, Format format);

/// Writes `text` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace smellscan::report
