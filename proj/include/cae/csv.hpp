#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cae {

/// Malformed CSV content (ragged rows, non-numeric or non-finite fields).
class CsvError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CsvOptions {
    bool header = false;   // skip the first line
    bool labeled = false;  // last column is an integer truth label
};

/// Numeric table; `labels` is filled only for labeled input.
struct CsvTable {
    std::size_t cols = 0;  // feature columns, excluding the label
    std::vector<double> values;
    std::vector<std::int64_t> labels;

    std::size_t rows() const noexcept { return cols == 0 ? 0 : values.size() / cols; }
};

CsvTable read_csv(std::istream& in, const CsvOptions& options);
CsvTable read_csv_file(const std::string& path, const CsvOptions& options);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// One row: features, then the optional extra integer columns.
void write_csv_row(std::ostream& out, const double* values, std::size_t count,
                   const std::vector<std::int64_t>& extra);

}  // namespace cae
