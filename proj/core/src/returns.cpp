#include "edr/returns.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "edr/errors.hpp"
#include "edr/io.hpp"

namespace edr {

ReturnSeries::ReturnSeries(std::string label, std::vector<Observation> observations)
    : label_(std::move(label)), observations_(std::move(observations)) {
    if (observations_.empty()) {
        throw Error(ErrorKind::insufficient_data, "return series '" + label_ + "' is empty");
    }
    for (std::size_t i = 0; i < observations_.size(); ++i) {
        if (!(observations_[i].value > -1.0)) {
            throw Error(ErrorKind::domain,
                        "return " + format_double(observations_[i].value) + " at " +
                            observations_[i].date.to_string() + " is not > -1");
        }
        if (i > 0 && !(observations_[i - 1].date < observations_[i].date)) {
            throw Error(ErrorKind::ordering,
                        "dates not strictly increasing at " + observations_[i].date.to_string());
        }
    }
}

std::vector<double> ReturnSeries::values() const {
    std::vector<double> out;
    out.reserve(observations_.size());
    for (const auto& obs : observations_) out.push_back(obs.value);
    return out;
}

std::vector<Date> ReturnSeries::dates() const {
    std::vector<Date> out;
    out.reserve(observations_.size());
    for (const auto& obs : observations_) out.push_back(obs.date);
    return out;
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<Atom> atoms) {
    if (atoms.empty()) {
        throw Error(ErrorKind::insufficient_data, "empirical distribution needs at least one atom");
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.outcome < b.outcome; });
    double total = 0.0;
    for (const auto& atom : atoms) {
        if (!(atom.probability >= 0.0) || !std::isfinite(atom.outcome)) {
            throw Error(ErrorKind::domain, "atom with negative probability or non-finite outcome");
        }
        total += atom.probability;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw Error(ErrorKind::domain,
                    "atom probabilities sum to " + format_double(total) + ", expected 1");
    }
    atoms_.reserve(atoms.size());
    for (const auto& atom : atoms) {
        if (atom.probability == 0.0) continue;
        if (!atoms_.empty() && atoms_.back().outcome == atom.outcome) {
            atoms_.back().probability += atom.probability;
        } else {
            atoms_.push_back(atom);
        }
    }
    if (atoms_.empty()) {
        throw Error(ErrorKind::domain, "all atoms have zero probability");
    }
    for (auto& atom : atoms_) atom.probability /= total;
    mean_ = 0.0;
    for (const auto& atom : atoms_) mean_ += atom.probability * atom.outcome;
}

EmpiricalDistribution EmpiricalDistribution::from_values(std::span<const double> values) {
    if (values.empty()) {
        throw Error(ErrorKind::insufficient_data, "no values for empirical distribution");
    }
    const double weight = 1.0 / static_cast<double>(values.size());
    std::vector<Atom> atoms;
    atoms.reserve(values.size());
    for (double value : values) atoms.push_back({value, weight});
    return EmpiricalDistribution(std::move(atoms));
}

EmpiricalDistribution EmpiricalDistribution::from_series(const ReturnSeries& series) {
    auto values = series.values();
    return from_values(values);
}

EmpiricalDistribution EmpiricalDistribution::transformed(double scale, double shift) const {
    if (!(scale > 0.0)) {
        throw Error(ErrorKind::domain, "scale must be positive");
    }
    std::vector<Atom> atoms = atoms_;
    for (auto& atom : atoms) atom.outcome = scale * atom.outcome + shift;
    return EmpiricalDistribution(std::move(atoms));
}

namespace {

bool parse_number(std::string_view text, double& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

ReturnSeries parse_returns_csv(const std::string& text, CsvMode mode, const std::string& label) {
    std::vector<Observation> raw;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool first_data_row = true;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string_view line = trim(std::string_view(text).substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected 'date,value'");
        }
        std::string_view date_field = trim(line.substr(0, comma));
        std::string_view value_field = trim(line.substr(comma + 1));
        double value;
        if (!parse_number(value_field, value)) {
            if (first_data_row) {
                // Header row: first row with a non-numeric value column.
                first_data_row = false;
                continue;
            }
            throw Error(ErrorKind::parse,
                        "line " + std::to_string(line_no) + ": non-numeric value '" +
                            std::string(value_field) + "'");
        }
        Date date;
        try {
            date = Date::parse(date_field);
        } catch (const Error& err) {
            throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + err.what());
        }
        first_data_row = false;
        raw.push_back({date, value});
        if (pos > text.size()) break;
    }
    if (raw.empty()) {
        throw Error(ErrorKind::insufficient_data, "no data rows in CSV for '" + label + "'");
    }
    for (std::size_t i = 1; i < raw.size(); ++i) {
        if (!(raw[i - 1].date < raw[i].date)) {
            throw Error(ErrorKind::ordering,
                        "dates not strictly increasing at " + raw[i].date.to_string());
        }
    }

    if (mode == CsvMode::returns) {
        return ReturnSeries(label, std::move(raw));
    }

    // Prices: validate positivity, then difference into returns.
    for (const auto& obs : raw) {
        if (!(obs.value > 0.0)) {
            throw Error(ErrorKind::domain,
                        "price " + format_double(obs.value) + " at " + obs.date.to_string() +
                            " is not positive");
        }
    }
    if (raw.size() < 2) {
        throw Error(ErrorKind::insufficient_data, "prices mode needs at least two rows");
    }
    std::vector<Observation> returns;
    returns.reserve(raw.size() - 1);
    for (std::size_t i = 1; i < raw.size(); ++i) {
        returns.push_back({raw[i].date, raw[i].value / raw[i - 1].value - 1.0});
    }
    return ReturnSeries(label, std::move(returns));
}

ReturnSeries load_returns_csv(const std::string& path, CsvMode mode) {
    std::string text = read_text_file(path);
    // Label = file stem.
    std::size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return parse_returns_csv(text, mode, name);
}

std::vector<PeriodBucket> bucket_by_period(const ReturnSeries& series, Granularity granularity) {
    auto key_of = [granularity](const Date& date) {
        switch (granularity) {
            case Granularity::weekly: return date.iso_week_key();
            case Granularity::monthly: return date.month_key();
            case Granularity::yearly: return date.year_key();
        }
        return std::int64_t{0};
    };
    std::vector<PeriodBucket> buckets;
    for (const auto& obs : series.observations()) {
        std::int64_t key = key_of(obs.date);
        if (buckets.empty() || buckets.back().key != key) {
            buckets.push_back({key, {}, obs.date});
        }
        buckets.back().values.push_back(obs.value);
        buckets.back().last_date = obs.date;
    }
    return buckets;
}

namespace {

double compound(const std::vector<double>& values) {
    double growth = 1.0;
    for (double v : values) growth *= 1.0 + v;
    return growth - 1.0;
}

ReturnSeries aggregate_overlapping_yearly(const ReturnSeries& series) {
    auto months = bucket_by_period(series, Granularity::monthly);
    std::vector<Observation> out;
    for (std::size_t end = 11; end < months.size(); ++end) {
        bool contiguous = true;
        for (std::size_t i = end - 11; i < end; ++i) {
            if (!consecutive_month_keys(months[i].key, months[i + 1].key)) {
                contiguous = false;
                break;
            }
        }
        if (!contiguous) continue;
        double growth = 1.0;
        for (std::size_t i = end - 11; i <= end; ++i) growth *= 1.0 + compound(months[i].values);
        out.push_back({months[end].last_date, growth - 1.0});
    }
    if (out.empty()) {
        throw Error(ErrorKind::empty_result,
                    "fewer than 12 contiguous months in '" + series.label() + "'");
    }
    return ReturnSeries(series.label(), std::move(out));
}

}  // namespace

ReturnSeries aggregate_periods(const ReturnSeries& series, const PeriodSpec& spec) {
    if (spec.overlap) {
        if (spec.granularity != Granularity::yearly) {
            throw Error(ErrorKind::domain, "overlapping windows are defined for yearly granularity only");
        }
        return aggregate_overlapping_yearly(series);
    }
    auto buckets = bucket_by_period(series, spec.granularity);
    std::vector<Observation> out;
    out.reserve(buckets.size());
    for (const auto& bucket : buckets) {
        if (bucket.values.empty()) continue;  // cannot occur by construction; kept for clarity
        out.push_back({bucket.last_date, compound(bucket.values)});
    }
    if (out.empty()) {
        throw Error(ErrorKind::empty_result, "aggregation of '" + series.label() + "' is empty");
    }
    return ReturnSeries(series.label(), std::move(out));
}

double empirical_quantile(const EmpiricalDistribution& dist, double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0)) {
        throw Error(ErrorKind::domain, "alpha must lie in (0, 1], got " + format_double(alpha));
    }
    double cumulative = 0.0;
    for (const auto& atom : dist.atoms()) {
        cumulative += atom.probability;
        if (cumulative >= alpha - 1e-15) {
            return atom.outcome;
        }
    }
    return dist.atoms().back().outcome;  // alpha == 1 with rounding slack
}

}  // namespace edr
