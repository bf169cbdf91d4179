#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace recf {

// 12 significant digits, '.' decimal separator regardless of locale.
// Infinities render as "inf" / "-inf".
std::string format_double(double v);

// Comment lines (without the leading "# "), one header row, data rows.
// Values carry no commas or quotes, so no quoting layer is needed.
struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv_text(const CsvTable& table);
CsvTable parse_csv_text(const std::string& text);
CsvTable read_csv_file(const std::filesystem::path& path);

// Writes to a sibling temp file and renames into place, so readers never see
// a partial file. Throws io_error on any filesystem failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace recf
