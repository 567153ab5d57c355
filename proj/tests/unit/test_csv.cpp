#include <doctest.h>

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "shellrr/csv.hpp"
#include "test_support.hpp"

using namespace shellrr;

TEST_SUITE("csv") {

TEST_CASE("shortest form") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-2.5e-12) == "-2.5e-12");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("random doubles round-trip exactly") {
    test_support::Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        const double v = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-300.0, 300.0));
        const std::string text = format_double(v);
        double back = 0.0;
        std::from_chars(text.data(), text.data() + text.size(), back);
        CHECK(back == v);
    }
}

TEST_CASE("rows are comma separated and newline terminated") {
    std::ostringstream os;
    {
        CsvRow row(os);
        row << 1.5 << 2 << "x" << 3UL;
    }
    CsvRow(os) << -0.25;
    CHECK(os.str() == "1.5,2,x,3\n-0.25\n");
}

}  // TEST_SUITE
