#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edr/dates.hpp"

namespace edr {

struct Observation {
    Date date;
    double value = 0.0;  // simple periodic return
};

/// Dated sequence of simple returns; the universal input of the library.
///
/// Invariants (enforced on construction):
///   - dates strictly increasing
///   - every value > -1 (total loss is the floor for unleveraged positions)
///   - at least one observation
class ReturnSeries {
  public:
    ReturnSeries(std::string label, std::vector<Observation> observations);

    const std::string& label() const noexcept { return label_; }
    const std::vector<Observation>& observations() const noexcept { return observations_; }
    std::size_t size() const noexcept { return observations_.size(); }

    std::vector<double> values() const;
    std::vector<Date> dates() const;

  private:
    std::string label_;
    std::vector<Observation> observations_;
};

/// Sorted outcome/probability atoms. Equal outcomes are merged on
/// construction; probabilities must sum to 1 within 1e-12 and are then
/// renormalized exactly.
class EmpiricalDistribution {
  public:
    struct Atom {
        double outcome;
        double probability;
    };

    explicit EmpiricalDistribution(std::vector<Atom> atoms);

    /// Uniform 1/n weight per observation.
    static EmpiricalDistribution from_values(std::span<const double> values);
    static EmpiricalDistribution from_series(const ReturnSeries& series);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    double mean() const noexcept { return mean_; }

    /// Applies x -> scale * x + shift to every outcome (scale > 0).
    EmpiricalDistribution transformed(double scale, double shift) const;

  private:
    std::vector<Atom> atoms_;
    double mean_ = 0.0;
};

enum class Granularity { weekly, monthly, yearly };

struct PeriodSpec {
    Granularity granularity = Granularity::monthly;
    bool overlap = false;  // overlapping 12-month windows; yearly only
};

/// One calendar bucket of a series: used by period aggregation and by the
/// volatility event study, which needs the intra-period observations.
struct PeriodBucket {
    std::int64_t key;              // week/month/year key, see Date
    std::vector<double> values;    // daily (input-frequency) returns
    Date last_date;                // date of the final observation in bucket
};

std::vector<PeriodBucket> bucket_by_period(const ReturnSeries& series, Granularity granularity);

enum class CsvMode { prices, returns };

/// Loads a two-column CSV (date,value). Header auto-detected by a
/// non-numeric first row. In prices mode emits r_t = P_t / P_{t-1} - 1,
/// consuming the first row.
ReturnSeries load_returns_csv(const std::string& path, CsvMode mode);

/// Same, parsing from an in-memory buffer (used by tests and the loader).
ReturnSeries parse_returns_csv(const std::string& text, CsvMode mode, const std::string& label);

/// Compounds each window: prod(1 + r) - 1. Disjoint mode buckets by ISO
/// week / calendar month / calendar year; overlapping yearly mode emits the
/// 12-month compounded return ending at each calendar month.
ReturnSeries aggregate_periods(const ReturnSeries& series, const PeriodSpec& spec);

/// Lower empirical quantile: smallest outcome whose cumulative probability
/// reaches alpha. No interpolation.
double empirical_quantile(const EmpiricalDistribution& dist, double alpha);

}  // namespace edr
