#pragma once

#include <optional>
#include <string>

#include "edr/returns.hpp"

namespace edr {

/// EDR and its below-mean probability mass, per
///   EDR = E[r | r <= E(r)],  alpha = P(r <= E(r)).
struct EdrResult {
    double edr;
    double alpha_below;
};

/// Lower quantile of the return distribution at probability alpha.
double value_at_risk(const EmpiricalDistribution& dist, double alpha);

/// Probability-weighted mean of outcomes at or below VaR(alpha). In return
/// space CVaR <= VaR always.
double conditional_value_at_risk(const EmpiricalDistribution& dist, double alpha);

/// Outcomes exactly at the mean count toward the downside mass.
EdrResult expected_downside_risk(const EmpiricalDistribution& dist);

/// Conditional mean of outcomes strictly above the mean:
///   Pr = (E - alpha * EDR) / (1 - alpha).
/// Throws when no mass lies above the mean.
double prospect(const EmpiricalDistribution& dist);

/// Closed form for a normal distribution: mean - sqrt(2/pi) * sigma.
double gaussian_edr(double mean, double sigma);

struct VarCvarPair {
    double alpha;
    double value;
};

/// Per-series risk summary. `prospect` is absent for a degenerate
/// (single-outcome) distribution, where the conditional upside mean does not
/// exist. Serialized field order is fixed:
/// label, n, mean, volatility, semivariance, edr, prospect, alpha_below, var, cvar.
struct RiskReport {
    std::string label;
    std::size_t n = 0;
    double expected_return = 0.0;
    double volatility = 0.0;    // population standard deviation
    double semivariance = 0.0;  // mean of min(r - mean, 0)^2
    double edr = 0.0;
    std::optional<double> prospect;
    double alpha_below = 1.0;
    std::optional<VarCvarPair> var_at;
    std::optional<VarCvarPair> cvar_at;

    std::string to_csv_row() const;
    static std::string csv_header();
    std::string to_json() const;
};

/// Assembles the full report from a series (length >= 2). When `var_alpha`
/// is given, VaR/CVaR at that level are attached.
RiskReport risk_report(const ReturnSeries& series, std::optional<double> var_alpha = std::nullopt);

struct BetaPair {
    double beta;
    double downside_beta;
};

/// Regression beta and the co-semivariance downside beta of `asset` against
/// `market`. Series must be date-aligned with length >= 3.
BetaPair beta_measures(const ReturnSeries& asset, const ReturnSeries& market);

/// Population mean / standard deviation / semivariance helpers shared by the
/// risk and empirics modules.
double mean_of(std::span<const double> values);
double population_sd(std::span<const double> values);
double semivariance_of(std::span<const double> values);

}  // namespace edr
