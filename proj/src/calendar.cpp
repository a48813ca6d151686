#include "epitrend/calendar.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "epitrend/errors.hpp"

namespace epitrend {

namespace {

// Civil-calendar <-> serial-day conversions (proleptic Gregorian, epoch
// 1970-01-01). Classic era-based algorithm.
int days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<int>(doe) - 719468;
}

std::array<int, 3> civil_from_days(int z) {
    z += 719468;
    const int era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int y = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {y + (m <= 2), static_cast<int>(m), static_cast<int>(d)};
}

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool valid_ymd(int y, int m, int d) {
    if (m < 1 || m > 12 || d < 1) return false;
    static constexpr int mdays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int dim = mdays[m - 1];
    if (m == 2 && ((y % 4 == 0 && y % 100 != 0) || y % 400 == 0)) dim = 29;
    return d <= dim;
}

}  // namespace

Date::Date(int year, int month, int day) {
    if (!valid_ymd(year, month, day))
        throw ParseError("invalid calendar date " + std::to_string(year) + "-" +
                         std::to_string(month) + "-" + std::to_string(day));
    serial_ = days_from_civil(year, month, day);
}

Date Date::from_iso(const std::string& text) {
    int y = 0, m = 0, d = 0;
    const auto p1 = text.find('-');
    const auto p2 = text.find('-', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos ||
        !parse_int(std::string_view(text).substr(0, p1), y) ||
        !parse_int(std::string_view(text).substr(p1 + 1, p2 - p1 - 1), m) ||
        !parse_int(std::string_view(text).substr(p2 + 1), d))
        throw ParseError("cannot parse ISO date '" + text + "'");
    return Date(y, m, d);
}

Date Date::from_mdy(const std::string& text) {
    int y = 0, m = 0, d = 0;
    const auto p1 = text.find('/');
    const auto p2 = text.find('/', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos ||
        !parse_int(std::string_view(text).substr(0, p1), m) ||
        !parse_int(std::string_view(text).substr(p1 + 1, p2 - p1 - 1), d) ||
        !parse_int(std::string_view(text).substr(p2 + 1), y))
        throw ParseError("cannot parse M/D/YY date '" + text + "'");
    if (y < 100) y += 2000;
    return Date(y, m, d);
}

int Date::year() const { return civil_from_days(serial_)[0]; }
int Date::month() const { return civil_from_days(serial_)[1]; }
int Date::day() const { return civil_from_days(serial_)[2]; }

std::string Date::iso() const {
    const auto ymd = civil_from_days(serial_);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", ymd[0], ymd[1], ymd[2]);
    return buf;
}

}  // namespace epitrend
