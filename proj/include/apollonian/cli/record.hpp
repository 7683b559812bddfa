#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apollonian/types.hpp"

namespace apollonian::cli {

/// Bad command-line input (maps to exit status 2 like domain errors).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { text, tabular };

OutputFormat parse_format(const std::string& name);

/// Shortest decimal form that round-trips is not required; 17 significant
/// digits always round-trips a double.
std::string format_real(double value);

/// Flat key/value record; dotted keys express the tree.
class Record {
public:
    void add(const std::string& key, double value);
    void add(const std::string& key, long long value);
    void add(const std::string& key, int value) { add(key, static_cast<long long>(value)); }
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, bool value);
    void add(const std::string& key, Vec2 value);     // key.x1, key.x2
    void add(const std::string& key, const Mat2& m);  // key.11, key.12, key.21, key.22

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    /// text: one "key = value" line per entry. tabular: a tab-separated
    /// header row of keys followed by one row of values.
    std::string render(OutputFormat format) const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Tab-separated numeric table with a header row.
class Table {
public:
    explicit Table(std::vector<std::string> columns);

    void add_row(const std::vector<double>& row);
    std::size_t rows() const { return rows_.size(); }
    std::string render() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

/// Parses "x,y" into a pair of reals.
Vec2 parse_pair(const std::string& text);

}  // namespace apollonian::cli
