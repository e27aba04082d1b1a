#include "breakup/tabular.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace breakup {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("Table::add_row: row size does not match columns");
    rows.push_back(std::move(row));
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

namespace {

std::string cell_to_string(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    return std::get<std::string>(c);
}

}  // namespace

void write_csv(const Table& t, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + file.string());
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out << ',';
        out << t.columns[i];
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << cell_to_string(row[i]);
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + file.string());
}

void write_json(const Table& t, const std::filesystem::path& file) {
    nlohmann::json j;
    j["columns"] = t.columns;
    auto& data = j["data"];
    data = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row) {
            if (std::holds_alternative<double>(c))
                r.push_back(format_double(std::get<double>(c)));
            else
                r.push_back(std::get<std::string>(c));
        }
        data.push_back(std::move(r));
    }
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + file.string());
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + file.string());
}

void write_table(const Table& t, const std::filesystem::path& file,
                 const std::string& format) {
    if (format == "csv")
        write_csv(t, file);
    else if (format == "json")
        write_json(t, file);
    else
        throw std::invalid_argument("unknown output format: " + format);
}

}  // namespace breakup
