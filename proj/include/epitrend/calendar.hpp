#pragma once

#include <compare>
#include <string>

namespace epitrend {

/// A calendar date stored as a serial day count (days since 1970-01-01).
/// Daily-resolution arithmetic only; the toolkit never needs finer grain.
class Date {
  public:
    Date() = default;
    explicit Date(int serial) : serial_(serial) {}
    Date(int year, int month, int day);

    /// Parse "YYYY-MM-DD". Throws ParseError on malformed input.
    static Date from_iso(const std::string& text);
    /// Parse the JHU CSSE header form "M/D/YY" (also accepts M/D/YYYY).
    static Date from_mdy(const std::string& text);

    int serial() const { return serial_; }
    int year() const;
    int month() const;
    int day() const;

    std::string iso() const;

    Date operator+(int days) const { return Date(serial_ + days); }
    Date operator-(int days) const { return Date(serial_ - days); }
    int operator-(Date other) const { return serial_ - other.serial_; }
    Date& operator++() { ++serial_; return *this; }

    auto operator<=>(const Date&) const = default;

  private:
    int serial_ = 0;
};

}  // namespace epitrend
