#include "edr/risk.hpp"

#include <cmath>

#include "edr/errors.hpp"
#include "edr/io.hpp"

namespace edr {

double mean_of(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double population_sd(std::span<const double> values) {
    double mu = mean_of(values);
    double ss = 0.0;
    for (double v : values) ss += (v - mu) * (v - mu);
    return std::sqrt(ss / static_cast<double>(values.size()));
}

double semivariance_of(std::span<const double> values) {
    double mu = mean_of(values);
    double ss = 0.0;
    for (double v : values) {
        double shortfall = std::min(v - mu, 0.0);
        ss += shortfall * shortfall;
    }
    return ss / static_cast<double>(values.size());
}

double value_at_risk(const EmpiricalDistribution& dist, double alpha) {
    return empirical_quantile(dist, alpha);
}

double conditional_value_at_risk(const EmpiricalDistribution& dist, double alpha) {
    double var = value_at_risk(dist, alpha);
    double mass = 0.0;
    double weighted = 0.0;
    for (const auto& atom : dist.atoms()) {
        if (atom.outcome > var) break;
        mass += atom.probability;
        weighted += atom.probability * atom.outcome;
    }
    return weighted / mass;
}

EdrResult expected_downside_risk(const EmpiricalDistribution& dist) {
    const double mu = dist.mean();
    double mass = 0.0;
    double weighted = 0.0;
    for (const auto& atom : dist.atoms()) {
        if (atom.outcome > mu) break;
        mass += atom.probability;
        weighted += atom.probability * atom.outcome;
    }
    return {weighted / mass, mass};
}

double prospect(const EmpiricalDistribution& dist) {
    auto [edr, alpha] = expected_downside_risk(dist);
    if (alpha >= 1.0) {
        throw Error(ErrorKind::undefined_prospect, "no probability mass above the mean");
    }
    return (dist.mean() - alpha * edr) / (1.0 - alpha);
}

double gaussian_edr(double mean, double sigma) {
    if (!(sigma >= 0.0)) {
        throw Error(ErrorKind::domain, "sigma must be nonnegative, got " + format_double(sigma));
    }
    // E[X | X <= mu] for X ~ N(mu, sigma): mu - sigma * sqrt(2/pi).
    constexpr double root_two_over_pi = 0.7978845608028653558798921198687;
    return mean - root_two_over_pi * sigma;
}

RiskReport risk_report(const ReturnSeries& series, std::optional<double> var_alpha) {
    if (series.size() < 2) {
        throw Error(ErrorKind::insufficient_data,
                    "risk report needs at least 2 observations, got " + std::to_string(series.size()));
    }
    auto values = series.values();
    auto dist = EmpiricalDistribution::from_values(values);

    RiskReport report;
    report.label = series.label();
    report.n = series.size();
    report.expected_return = mean_of(values);
    report.volatility = population_sd(values);
    report.semivariance = semivariance_of(values);
    auto [edr, alpha] = expected_downside_risk(dist);
    report.edr = edr;
    report.alpha_below = alpha;
    if (alpha < 1.0) {
        report.prospect = prospect(dist);
    }
    if (var_alpha) {
        report.var_at = VarCvarPair{*var_alpha, value_at_risk(dist, *var_alpha)};
        report.cvar_at = VarCvarPair{*var_alpha, conditional_value_at_risk(dist, *var_alpha)};
    }
    return report;
}

std::string RiskReport::csv_header() {
    return "label,n,mean,volatility,semivariance,edr,prospect,alpha_below,var,cvar\n";
}

std::string RiskReport::to_csv_row() const {
    std::optional<double> var_value, cvar_value;
    if (var_at) var_value = var_at->value;
    if (cvar_at) cvar_value = cvar_at->value;
    return csv_row({label, std::to_string(n), csv_cell(expected_return), csv_cell(volatility),
                    csv_cell(semivariance), csv_cell(edr), csv_cell(prospect),
                    csv_cell(alpha_below), csv_cell(var_value), csv_cell(cvar_value)});
}

std::string RiskReport::to_json() const {
    std::string json = "{";
    json += "\"label\":\"" + label + "\",";
    json += "\"n\":" + std::to_string(n) + ",";
    json += "\"mean\":" + format_double(expected_return) + ",";
    json += "\"volatility\":" + format_double(volatility) + ",";
    json += "\"semivariance\":" + format_double(semivariance) + ",";
    json += "\"edr\":" + format_double(edr) + ",";
    json += "\"prospect\":" + (prospect ? format_double(*prospect) : "null") + ",";
    json += "\"alpha_below\":" + format_double(alpha_below) + ",";
    auto pair_json = [](const std::optional<VarCvarPair>& p) {
        if (!p) return std::string("null");
        return "{\"alpha\":" + format_double(p->alpha) + ",\"value\":" + format_double(p->value) + "}";
    };
    json += "\"var\":" + pair_json(var_at) + ",";
    json += "\"cvar\":" + pair_json(cvar_at);
    json += "}";
    return json;
}

BetaPair beta_measures(const ReturnSeries& asset, const ReturnSeries& market) {
    const auto& a_obs = asset.observations();
    const auto& m_obs = market.observations();
    if (a_obs.size() != m_obs.size() || a_obs.size() < 3) {
        throw Error(ErrorKind::alignment, "beta needs equal-length series of at least 3 observations");
    }
    for (std::size_t i = 0; i < a_obs.size(); ++i) {
        if (!(a_obs[i].date == m_obs[i].date)) {
            throw Error(ErrorKind::alignment, "date mismatch at index " + std::to_string(i));
        }
    }
    auto a = asset.values();
    auto m = market.values();
    const double mu_a = mean_of(a);
    const double mu_m = mean_of(m);
    double cov = 0.0, var_m = 0.0, co_semi = 0.0, semi_m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - mu_a;
        const double dm = m[i] - mu_m;
        cov += da * dm;
        var_m += dm * dm;
        const double sa = std::min(da, 0.0);
        const double sm = std::min(dm, 0.0);
        co_semi += sa * sm;
        semi_m += sm * sm;
    }
    if (var_m == 0.0 || semi_m == 0.0) {
        throw Error(ErrorKind::undefined_beta, "market variance or downside mass is zero");
    }
    return {cov / var_m, co_semi / semi_m};
}

}  // namespace edr
