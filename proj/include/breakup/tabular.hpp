#ifndef BREAKUP_TABULAR_HPP_
#define BREAKUP_TABULAR_HPP_

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace breakup {

using Cell = std::variant<double, std::string>;

/// Column-labelled table for CSV/JSON export. Doubles are written with 17
/// significant digits in scientific notation so files round-trip losslessly
/// and repeated runs are byte-identical.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

std::string format_double(double x);

void write_csv(const Table& t, const std::filesystem::path& file);
void write_json(const Table& t, const std::filesystem::path& file);
void write_table(const Table& t, const std::filesystem::path& file,
                 const std::string& format);  // "csv" | "json"

}  // namespace breakup

#endif
