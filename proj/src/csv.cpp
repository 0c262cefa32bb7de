#include "cae/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace cae {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    while (true) {
        const auto comma = line.find(',');
        fields.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return fields;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

double parse_double(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const char* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc() || ptr != end) {
        throw CsvError(where(line_no) + "non-numeric field '" + std::string(field) + "'");
    }
    if (!std::isfinite(value)) {
        throw CsvError(where(line_no) + "non-finite field '" + std::string(field) + "'");
    }
    return value;
}

std::int64_t parse_label(std::string_view field, std::size_t line_no) {
    std::int64_t value = 0;
    const char* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc() || ptr != end) {
        throw CsvError(where(line_no) + "label '" + std::string(field) + "' is not an integer");
    }
    return value;
}

}  // namespace

CsvTable read_csv(std::istream& in, const CsvOptions& options) {
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    if (options.header) {
        std::getline(in, line);
        ++line_no;
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split(line);
        if (width == 0) {
            width = fields.size();
            if (options.labeled && width < 2) {
                throw CsvError(where(line_no) + "labeled input needs a feature and a label column");
            }
            table.cols = options.labeled ? width - 1 : width;
        } else if (fields.size() != width) {
            throw CsvError(where(line_no) + "expected " + std::to_string(width) +
                           " fields, found " + std::to_string(fields.size()));
        }
        for (std::size_t i = 0; i < table.cols; ++i) {
            table.values.push_back(parse_double(fields[i], line_no));
        }
        if (options.labeled) {
            table.labels.push_back(parse_label(fields.back(), line_no));
        }
    }
    return table;
}

CsvTable read_csv_file(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw CsvError("cannot open '" + path + "'");
    }
    return read_csv(in, options);
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void write_csv_row(std::ostream& out, const double* values, std::size_t count,
                   const std::vector<std::int64_t>& extra) {
    for (std::size_t i = 0; i < count; ++i) {
        if (i != 0) out << ',';
        out << format_double(values[i]);
    }
    for (std::int64_t v : extra) {
        if (count != 0) out << ',';
        out << v;
        count = 1;
    }
    out << '\n';
}

}  // namespace cae
