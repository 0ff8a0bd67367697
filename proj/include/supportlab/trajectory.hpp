#pragma once

// Per-rule regression of surprise difference on epoch.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "supportlab/probes.hpp"

namespace supportlab {

// Regularized incomplete beta I_x(a, b), continued fraction (Lentz).
double incomplete_beta(double a, double b, double x);
// Student t CDF with `dof` degrees of freedom.
double student_t_cdf(double t, double dof);
// Two-sided p-value P(|T| ≥ |t|).
double two_sided_p(double t, double dof);

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
    double t = 0.0;
    double p = 1.0;
    double r2 = 0.0;
    int n = 0;
    double residual_variance = 0.0;  // s² = SSE / (n − 2)
    double x_mean = 0.0;
    double sxx = 0.0;
};

// Closed-form OLS on centred sums. Requires n ≥ 3 and xs not all equal.
// A zero slope standard error gives t = ±inf (p = 0) unless the slope is
// also zero, in which case t = 0 and p = 1.
RegressionFit linear_fit(std::span<const double> xs, std::span<const double> ys);

// 95% band for the fitted mean at x: ŷ ± t_{0.975, n−2} · s · sqrt(1/n + (x − x̄)²/Sxx).
std::pair<double, double> mean_band(const RegressionFit& fit, double x, double level = 0.95);
// Quantile of the t distribution (bisection on student_t_cdf).
double student_t_quantile(double p, double dof);

struct AcquisitionOrder {
    std::array<PhysicalRule, 4> order{};  // descending slope
    // z[i][j] = (b_i − b_j) / sqrt(se_i² + se_j²), indexed by rule; 0 when both se are 0.
    std::array<std::array<double, 4>, 4> z{};
};
// Ties are broken by the fixed rule order (contact, type_of_contact,
// overlap, shape).
AcquisitionOrder acquisition_order(std::span<const std::pair<PhysicalRule, RegressionFit>> fits);

struct Bin {
    double x_start = 0.0;   // first epoch in the bin
    double x_center = 0.0;  // mean epoch of its members
    double mean = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    int count = 0;
    bool degenerate = false;  // one member: zero-width interval
};
// Consecutive bins of `width` epochs starting at the smallest epoch;
// interval mean ± 1.96 · sd / sqrt(k).
std::vector<Bin> binned_summary(std::span<const double> xs, std::span<const double> ys, int width);

struct RuleFit {
    PhysicalRule rule;
    RegressionFit fit;
};
// One fit per rule present in `records`.
std::vector<RuleFit> fit_rules(const std::vector<SurpriseRecord>& records);

// CSV with header rule,slope,se,t,p,r2,n.
std::string fits_csv(const std::vector<RuleFit>& fits);
std::vector<RuleFit> parse_fits_csv(std::string_view text);

// Spearman rank correlation (average ranks for ties).
double spearman(std::span<const double> a, std::span<const double> b);

}  // namespace supportlab
