#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace edr {

/// Calendar day. Thin wrapper over a civil (year, month, day) triple with a
/// serial day number for arithmetic and week/month bucketing.
class Date {
  public:
    Date() = default;
    Date(int year, unsigned month, unsigned day);

    /// Parses strict ISO-8601 `YYYY-MM-DD`. Throws Error{parse} otherwise.
    static Date parse(std::string_view text);

    int year() const noexcept { return year_; }
    unsigned month() const noexcept { return month_; }
    unsigned day() const noexcept { return day_; }

    /// Days since 1970-01-01.
    std::int64_t serial() const noexcept { return serial_; }

    /// 0 = Monday ... 6 = Sunday.
    int weekday() const noexcept;

    /// ISO-8601 week key: iso_year * 100 + week number (1..53).
    /// The ISO year can differ from the calendar year around new year.
    std::int64_t iso_week_key() const noexcept;

    /// Calendar month key: year * 100 + month.
    std::int64_t month_key() const noexcept { return static_cast<std::int64_t>(year_) * 100 + month_; }

    std::int64_t year_key() const noexcept { return year_; }

    std::string to_string() const;

    auto operator<=>(const Date& other) const noexcept { return serial_ <=> other.serial_; }
    bool operator==(const Date& other) const noexcept { return serial_ == other.serial_; }

  private:
    int year_ = 1970;
    unsigned month_ = 1;
    unsigned day_ = 1;
    std::int64_t serial_ = 0;
};

/// True when `next` is the calendar month immediately after `prev`
/// (both arguments are month keys as produced by Date::month_key).
bool consecutive_month_keys(std::int64_t prev, std::int64_t next) noexcept;

/// Same for ISO week keys.
bool consecutive_week_keys(std::int64_t prev, std::int64_t next) noexcept;

}  // namespace edr
