#include "edr/dates.hpp"

#include <charconv>
#include <chrono>

#include "edr/errors.hpp"

namespace edr {

namespace {

std::int64_t serial_of(int y, unsigned m, unsigned d) {
    using namespace std::chrono;
    year_month_day ymd{year{y}, month{m}, day{d}};
    if (!ymd.ok()) {
        throw Error(ErrorKind::parse, "invalid calendar date");
    }
    return sys_days{ymd}.time_since_epoch().count();
}

}  // namespace

Date::Date(int year, unsigned month, unsigned day)
    : year_(year), month_(month), day_(day), serial_(serial_of(year, month, day)) {}

Date Date::parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw Error(ErrorKind::parse, "expected ISO-8601 date YYYY-MM-DD, got '" + std::string(text) + "'");
    }
    auto number = [&](std::size_t pos, std::size_t len) -> int {
        int value = 0;
        const char* first = text.data() + pos;
        auto [ptr, ec] = std::from_chars(first, first + len, value);
        if (ec != std::errc{} || ptr != first + len) {
            throw Error(ErrorKind::parse, "non-numeric date field in '" + std::string(text) + "'");
        }
        return value;
    };
    int y = number(0, 4);
    int m = number(5, 2);
    int d = number(8, 2);
    if (m < 1 || m > 12 || d < 1 || d > 31) {
        throw Error(ErrorKind::parse, "date field out of range in '" + std::string(text) + "'");
    }
    return Date(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
}

int Date::weekday() const noexcept {
    // 1970-01-01 was a Thursday (index 3 with Monday = 0).
    std::int64_t w = (serial_ + 3) % 7;
    if (w < 0) w += 7;
    return static_cast<int>(w);
}

std::int64_t Date::iso_week_key() const noexcept {
    // ISO week = week of the Thursday that shares this date's Mon-Sun week.
    using namespace std::chrono;
    std::int64_t thursday = serial_ - weekday() + 3;
    year_month_day ymd{sys_days{days{thursday}}};
    int iso_year = static_cast<int>(ymd.year());
    std::int64_t jan1 = sys_days{year{iso_year} / January / 1}.time_since_epoch().count();
    std::int64_t week = (thursday - jan1) / 7 + 1;
    return static_cast<std::int64_t>(iso_year) * 100 + week;
}

std::string Date::to_string() const {
    char buf[11];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year_, month_, day_);
    return buf;
}

bool consecutive_month_keys(std::int64_t prev, std::int64_t next) noexcept {
    std::int64_t py = prev / 100, pm = prev % 100;
    if (pm == 12) return next == (py + 1) * 100 + 1;
    return next == prev + 1;
}

bool consecutive_week_keys(std::int64_t prev, std::int64_t next) noexcept {
    if (next == prev + 1) return true;
    // Week rollover: last ISO week of a year (52 or 53) to week 1 of the next.
    std::int64_t py = prev / 100, pw = prev % 100;
    if (pw < 52) return false;
    if (next != (py + 1) * 100 + 1) return false;
    // Valid only if `prev` really is the final week of its ISO year: ISO years
    // have 53 weeks exactly when Jan 1 is a Thursday or (in leap years) a Wednesday.
    using namespace std::chrono;
    weekday jan1{sys_days{year{static_cast<int>(py)} / January / 1}};
    bool leap = year{static_cast<int>(py)}.is_leap();
    bool has53 = jan1 == Thursday || (leap && jan1 == Wednesday);
    return pw == (has53 ? 53 : 52);
}

}  // namespace edr
