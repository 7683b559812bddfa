#include "apollonian/cli/record.hpp"

#include <cstdlib>

#include <fmt/format.h>

namespace apollonian::cli {

OutputFormat parse_format(const std::string& name)
{
    if (name == "text") {
        return OutputFormat::text;
    }
    if (name == "tabular") {
        return OutputFormat::tabular;
    }
    throw UsageError("unknown format '" + name + "' (expected text or tabular)");
}

std::string format_real(double value)
{
    return fmt::format("{:.17g}", value + 0.0);  // prints -0 as 0
}

void Record::add(const std::string& key, double value)
{
    entries_.emplace_back(key, format_real(value));
}

void Record::add(const std::string& key, long long value)
{
    entries_.emplace_back(key, fmt::format("{}", value));
}

void Record::add(const std::string& key, const std::string& value)
{
    entries_.emplace_back(key, value);
}

void Record::add(const std::string& key, bool value)
{
    entries_.emplace_back(key, value ? "true" : "false");
}

void Record::add(const std::string& key, Vec2 value)
{
    add(key + ".x1", value.x);
    add(key + ".x2", value.y);
}

void Record::add(const std::string& key, const Mat2& m)
{
    add(key + ".11", m[0][0]);
    add(key + ".12", m[0][1]);
    add(key + ".21", m[1][0]);
    add(key + ".22", m[1][1]);
}

std::string Record::render(OutputFormat format) const
{
    std::string out;
    if (format == OutputFormat::text) {
        for (const auto& [key, value] : entries_) {
            out += fmt::format("{} = {}\n", key, value);
        }
        return out;
    }
    std::string header;
    std::string row;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const char* sep = i + 1 < entries_.size() ? "\t" : "\n";
        header += entries_[i].first + sep;
        row += entries_[i].second + sep;
    }
    return header + row;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(const std::vector<double>& row)
{
    if (row.size() != columns_.size()) {
        throw std::invalid_argument("Table::add_row: column count mismatch");
    }
    rows_.push_back(row);
}

std::string Table::render() const
{
    std::string out = fmt::format("{}\n", fmt::join(columns_, "\t"));
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += format_real(row[i]);
            out += i + 1 < row.size() ? '\t' : '\n';
        }
    }
    return out;
}

Vec2 parse_pair(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError("expected a pair 'x,y', got '" + text + "'");
    }
    const std::string first = text.substr(0, comma);
    const std::string second = text.substr(comma + 1);
    auto parse = [&text](const std::string& part) {
        char* end = nullptr;
        const double v = std::strtod(part.c_str(), &end);
        if (part.empty() || end != part.c_str() + part.size()) {
            throw UsageError("expected a pair 'x,y', got '" + text + "'");
        }
        return v;
    };
    return {parse(first), parse(second)};
}

}  // namespace apollonian::cli
