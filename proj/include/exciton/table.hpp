#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace exciton {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Column-labelled rows written either as CSV or as a JSON array of objects
/// with the same field names.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Throws DomainError on a width mismatch or a non-finite number.
    void add_row(std::vector<Cell> row);
};

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

std::string to_csv(const Table& table);
nlohmann::ordered_json to_json(const Table& table);

/// Throws IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace exciton
