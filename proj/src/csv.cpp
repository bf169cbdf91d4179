#include "recf/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "recf/errors.hpp"

namespace recf {

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    // snprintf honors the locale's decimal separator; the process never
    // leaves the "C" locale, but normalize defensively anyway.
    for (char& c : buf) {
        if (c == '\0') break;
        if (c == ',') c = '.';
    }
    return buf;
}

std::string to_csv_text(const CsvTable& table) {
    std::ostringstream os;
    for (const std::string& c : table.comments)
        os << "# " << c << '\n';
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) os << ',';
        os << table.header[i];
    }
    os << '\n';
    for (const std::vector<std::string>& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

} // namespace

CsvTable parse_csv_text(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t b = 1;
            if (b < line.size() && line[b] == ' ') ++b;
            table.comments.push_back(line.substr(b));
            continue;
        }
        if (!have_header) {
            table.header = split_fields(line);
            have_header = true;
        } else {
            table.rows.push_back(split_fields(line));
        }
    }
    return table;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv_text(buf.str());
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw io_error("cannot create '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) {
            std::error_code discard;
            std::filesystem::remove(tmp, discard);
            throw io_error("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code discard;
        std::filesystem::remove(tmp, discard);
        throw io_error("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
    }
}

} // namespace recf
