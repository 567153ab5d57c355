#pragma once

#include <ostream>
#include <string>
#include <string_view>

namespace shellrr {

/// Shortest decimal string that parses back to exactly `value`, independent of
/// the global locale. Non-finite values print as nan / inf / -inf.
std::string format_double(double value);

/// Writes one comma-separated line; the newline is emitted on destruction.
class CsvRow {
public:
    explicit CsvRow(std::ostream& out) : out_(out) {}
    CsvRow(const CsvRow&) = delete;
    CsvRow& operator=(const CsvRow&) = delete;
    ~CsvRow() { out_ << '\n'; }

    CsvRow& operator<<(double v) { return field(format_double(v)); }
    CsvRow& operator<<(int v) { return field(std::to_string(v)); }
    CsvRow& operator<<(long v) { return field(std::to_string(v)); }
    CsvRow& operator<<(unsigned long v) { return field(std::to_string(v)); }
    CsvRow& operator<<(std::string_view v) { return field(v); }
    CsvRow& operator<<(const char* v) { return field(v); }

private:
    CsvRow& field(std::string_view text) {
        if (!first_) out_ << ',';
        out_ << text;
        first_ = false;
        return *this;
    }

    std::ostream& out_;
    bool first_ = true;
};

}  // namespace shellrr
