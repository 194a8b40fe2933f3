#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace vigia {

/// Proleptic Gregorian calendar date. Conversions use the days-from-civil
/// algorithm, so arithmetic is exact and timezone-free.
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    auto operator<=>(const Date&) const = default;

    bool valid() const;
    std::int64_t to_days() const;  // days since 1970-01-01
    static Date from_days(std::int64_t days);

    Date plus_days(int n) const { return from_days(to_days() + n); }
    int day_of_year() const;

    std::string to_string() const;  // YYYY-MM-DD
    static std::optional<Date> try_parse(std::string_view s);
    static Date parse(std::string_view s);  // throws FormatError
};

bool is_leap_year(int year);
int days_in_month(int year, int month);

}  // namespace vigia
