#include <smellscan/report/reporting.hpp>

#include <smellscan/error.hpp>

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace smellscan::report {

std::string current_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

namespace {

std::string escape(std::string_view text, bool evidence)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '\\': out += "\\\\"; break;
        case '\t': out += "\\t"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case ';':
        case '=':
            if (evidence) out += '\\';
            out += c;
            break;
        default: out += c;
        }
    }
    return out;
}

// Splits on `sep` where it is not preceded by an escaping backslash.
std::vector<std::string_view> split_unescaped(std::string_view text, char sep, std::size_t limit = 0)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\\') {
            ++i;
        } else if (text[i] == sep && (limit == 0 || parts.size() + 1 < limit)) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(text.substr(start));
    return parts;
}

} // namespace

std::string escape_field(std::string_view text)
{
    return escape(text, false);
}

std::string unescape_field(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '\\' || i + 1 == text.size()) {
            out += text[i];
            continue;
        }
        const char next = text[++i];
        switch (next) {
        case 't': out += '\t'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        default: out += next;
        }
    }
    return out;
}

std::string format_record(const detect::SmellFinding& f, std::string_view timestamp)
{
    std::string line = escape_field(timestamp);
    line += '\t';
    line += slug(f.kind);
    line += '\t' + escape_field(f.qualified_name) + '\t' + escape_field(f.file) + '\t' +
            std::to_string(f.line) + '\t';
    for (std::size_t i = 0; i < f.evidence.size(); ++i) {
        if (i) line += ';';
        line += escape(f.evidence[i].first, true) + '=' + escape(f.evidence[i].second, true);
    }
    return line;
}

std::string format_provenance(const std::vector<detect::SmellFinding>& findings, std::string_view timestamp)
{
    std::string out;
    for (const detect::SmellFinding& f : findings) {
        out += format_record(f, timestamp);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
}

std::size_t write_provenance(const std::vector<detect::SmellFinding>& findings,
                             const std::filesystem::path& path, bool fixed_timestamp)
{
    const std::string stamp = fixed_timestamp ? std::string(kFixedTimestamp) : current_timestamp();
    write_text_file(path, format_provenance(findings, stamp));
    return findings.size();
}

std::vector<ProvenanceRecord> parse_provenance(std::string_view text)
{
    std::vector<ProvenanceRecord> records;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                              : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        auto fail = [&](const std::string& why) {
            throw LoadError("provenance line " + std::to_string(line_no) + ": " + why);
        };
        std::vector<std::string_view> fields = split_unescaped(line, '\t');
        if (fields.size() != 6) fail("expected 6 tab-separated fields");

        ProvenanceRecord r;
        r.timestamp = unescape_field(fields[0]);
        auto kind = parse_smell_kind(fields[1]);
        if (!kind) fail("unknown smell kind '" + std::string(fields[1]) + "'");
        r.finding.kind = *kind;
        r.finding.qualified_name = unescape_field(fields[2]);
        r.finding.file = unescape_field(fields[3]);
        auto [end, ec] = std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(), r.finding.line);
        if (ec != std::errc() || end != fields[4].data() + fields[4].size()) fail("bad line number");
        if (!fields[5].empty()) {
            for (std::string_view pair : split_unescaped(fields[5], ';')) {
                std::vector<std::string_view> kv = split_unescaped(pair, '=', 2);
                if (kv.size() != 2) fail("evidence entry without '='");
                r.finding.evidence.emplace_back(unescape_field(kv[0]), unescape_field(kv[1]));
            }
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<ProvenanceRecord> load_provenance(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LoadError("cannot read " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_provenance(text.str());
}

double SummaryTable::percent(SmellKind kind) const
{
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(count(kind)) / static_cast<double>(total);
}

SummaryTable summarize_counts(const std::array<long long, kSmellKindCount>& counts)
{
    SummaryTable t;
    t.counts = counts;
    for (long long c : counts) t.total += c;
    return t;
}

SummaryTable summarize(const std::vector<detect::SmellFinding>& findings)
{
    std::array<long long, kSmellKindCount> counts{};
    for (const detect::SmellFinding& f : findings) ++counts[index_of(f.kind)];
    return summarize_counts(counts);
}

Format parse_format(std::string_view text)
{
    if (text == "text") return Format::Text;
    if (text == "tsv") return Format::Tsv;
    throw ConfigError("unknown format '" + std::string(text) + "' (expected text or tsv)");
}

std::string render_summary(const SummaryTable& table, Format format)
{
    std::size_t width = 5;
    for (SmellKind kind : kAllSmellKinds) width = std::max(width, display_name(kind).size());

    std::string out;
    auto row = [&](std::string_view name, const std::string& count, const std::string& percent) {
        if (format == Format::Tsv) {
            out += std::string(name) + '\t' + count + '\t' + percent + '\n';
        } else {
            out += std::string(name) + std::string(width - name.size() + 2, ' ') + count + "  " + percent + '\n';
        }
    };
    auto pct = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };
    if (format == Format::Tsv) {
        row("smell", "count", "percent");
    } else {
        row("Smell", "Count", "Percent");
    }
    for (SmellKind kind : kAllSmellKinds) {
        row(display_name(kind), std::to_string(table.count(kind)), pct(table.percent(kind)));
    }
    row("Total", std::to_string(table.total), pct(table.total == 0 ? 0.0 : 100.0));
    return out;
}

} // namespace smellscan::report
