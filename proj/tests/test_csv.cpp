#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>

#include "cae/csv.hpp"

using namespace cae;

namespace {

CsvTable parse(const std::string& text, CsvOptions opt = {}) {
    std::istringstream in(text);
    return read_csv(in, opt);
}

}  // namespace

TEST_CASE("plain and labeled tables") {
    const auto t = parse("0.5,1\n2,3.25\n");
    CHECK(t.cols == 2);
    CHECK(t.rows() == 2);
    CHECK(t.values == std::vector<double>{0.5, 1.0, 2.0, 3.25});
    CHECK(t.labels.empty());

    const auto l = parse("x,y,label\n0.1,0.2,3\n0.3,0.4,-1\n", {true, true});
    CHECK(l.cols == 2);
    CHECK(l.labels == std::vector<std::int64_t>{3, -1});
    CHECK(l.values == std::vector<double>{0.1, 0.2, 0.3, 0.4});
}

TEST_CASE("blank lines and CRLF are tolerated") {
    const auto t = parse("1,2\r\n\r\n3,4\r\n");
    CHECK(t.rows() == 2);
    CHECK(t.values.back() == 4.0);
}

TEST_CASE("empty input") {
    CHECK(parse("").rows() == 0);
    CHECK(parse("a,b\n", {true, false}).rows() == 0);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse("1,2\n3\n"), CsvError);
    CHECK_THROWS_AS(parse("1,abc\n"), CsvError);
    CHECK_THROWS_AS(parse("1,,2\n"), CsvError);
    CHECK_THROWS_AS(parse("1,nan\n"), CsvError);
    CHECK_THROWS_AS(parse("1,inf\n"), CsvError);
    CHECK_THROWS_AS(parse("1,2.5\n", {false, true}), CsvError);
    CHECK_THROWS_AS(parse("1\n", {false, true}), CsvError);
    CHECK_THROWS_AS(read_csv_file("/nonexistent/file.csv", {}), CsvError);
}

TEST_CASE("shortest round-trip text") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5e-300) == "-2.5e-300");

    std::mt19937_64 rng(5);
    std::vector<double> values;
    for (int i = 0; i < 3000; ++i) {
        double v;
        do {
            const std::uint64_t bits = rng();
            std::memcpy(&v, &bits, sizeof v);
        } while (!std::isfinite(v));
        values.push_back(v);
    }
    values.push_back(std::numeric_limits<double>::denorm_min());
    values.push_back(std::numeric_limits<double>::max());
    values.push_back(-0.0);

    std::ostringstream out;
    for (std::size_t i = 0; i + 1 < values.size(); i += 2) {
        write_csv_row(out, &values[i], 2, {static_cast<std::int64_t>(i)});
    }
    const auto t = parse(out.str(), {false, true});
    REQUIRE(t.rows() == values.size() / 2);
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        CHECK(std::memcmp(&t.values[i], &values[i], sizeof(double)) == 0);
    }
    for (std::size_t r = 0; r < t.rows(); ++r) CHECK(t.labels[r] == static_cast<std::int64_t>(2 * r));
}
