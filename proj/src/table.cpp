#include "exciton/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "exciton/errors.hpp"

namespace exciton {

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size()) {
        throw DomainError("table row has " + std::to_string(row.size()) + " cells, expected " +
                          std::to_string(columns.size()));
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (const double* d = std::get_if<double>(&row[i]); d && !std::isfinite(*d)) {
            throw DomainError("non-finite value in column '" + columns[i] + "'");
        }
    }
    rows.push_back(std::move(row));
}

std::string format_double(double v)
{
    if (v == 0.0) return "0";  // also folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell& c)
{
    if (const double* d = std::get_if<double>(&c)) return format_double(*d);
    if (const std::int64_t* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const Table& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_text(row[i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json to_json(const Table& table)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_text_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace exciton
