#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rulekit/records.hpp"

namespace rulekit {

/// Fraction of records whose normalized retrieval-augmented answer at depth
/// k disagrees with the ground truth (unknown counts as a disagreement).
/// Throws ValidationError ("missing answer") if any record lacks depth k.
double empirical_risk(std::span<const PredictionRecord> records, int k);

/// KL divergence between Bernoulli(a) and Bernoulli(b), with the usual
/// 0*log(0) = 0 conventions at a = 0 and a = 1. Requires a in [0,1] and
/// b in (0,1); result is >= 0.
double kl_bernoulli(double a, double b);

/// Hoeffding-Bentkus style p-value exp(-n * kl_bernoulli(min(fr, alpha), alpha))
/// for the null "true risk exceeds alpha" given empirical risk fr over n
/// samples. Equals 1 exactly when fr >= alpha; clamped to (0, 1].
double p_value_hb(double fr, std::size_t n, double alpha_risk);

/// P(Bin(n, q) <= m), evaluated in log space (lgamma per term, extended
/// precision accumulation) so that at least 12 significant digits survive
/// for n up to 1e5.
double binomial_tail_cdf(std::size_t m, std::size_t n, double q);

/// Binomial-tail p-value e * P(Bin(n, alpha) <= ceil(n * fr)), clamped to
/// (0, 1]. The ceiling is applied to the mathematical product: values within
/// 1e-9 of an integer are treated as that integer so count-derived risks
/// (fr = failures/n) never round up spuriously.
double p_value_binomial(double fr, std::size_t n, double alpha_risk);

/// Family-wise error rate controlling acceptance procedures.
enum class Procedure { bonferroni, fixed_sequence };

Procedure procedure_from_string(std::string_view name);
const char* to_string(Procedure p);

/// Accept candidate i iff p_values[i] <= delta / count (inclusive).
std::vector<bool> accept_bonferroni(std::span<const double> p_values, double delta);

/// Walk p_values in their given (pre-declared) order, accepting at full
/// level delta until the first failure. The accepted set is always a prefix.
std::vector<bool> accept_fixed_sequence(std::span<const double> p_values, double delta);

struct CandidateReport {
    int k = 0;
    double fr = 0.0;      // empirical risk at k
    double p1 = 1.0;      // Bernoulli-KL p-value
    double p2 = 1.0;      // binomial-tail p-value
    double p = 1.0;       // min(p1, p2), in (0, 1]
    bool accepted = false;
};

struct CalibrationInput {
    std::vector<PredictionRecord> records;
    std::vector<int> candidates;  // strictly ascending retrieval depths
    double alpha_risk = 0.0;      // risk upper bound, in (0, 1)
    double delta = 0.0;           // FWER tolerance, in (0, 1)
    Procedure procedure = Procedure::bonferroni;
};

/// The full calibration outcome: per-candidate evidence, the accepted set
/// (lambda_hat), and the depth selected from it. With probability at least
/// 1 - delta over i.i.d. calibration data, every accepted depth has true
/// risk <= alpha_risk; an empty accepted set is a first-class outcome and
/// leaves chosen_k absent.
struct CalibrationCertificate {
    double alpha_risk = 0.0;
    double delta = 0.0;
    std::size_t n = 0;
    Procedure procedure = Procedure::bonferroni;
    std::vector<CandidateReport> candidates;
    std::vector<int> lambda_hat;
    std::optional<int> chosen_k;  // min empirical risk, ties to smaller k

    bool empty() const noexcept { return lambda_hat.empty(); }
};

/// Calibration over externally supplied per-candidate risks. The risk values
/// may be fractional (not necessarily count ratios); n is the sample size
/// they were measured on. `ks` must be strictly ascending; fixed-sequence
/// testing follows that order.
CalibrationCertificate calibrate_risks(std::span<const int> ks,
                                       std::span<const double> risks,
                                       std::size_t n, double alpha_risk,
                                       double delta, Procedure procedure);

/// End-to-end calibration from prediction records: computes empirical_risk
/// per candidate depth, then both p-values, acceptance, and the chosen k.
CalibrationCertificate calibrate(const CalibrationInput& input);

/// Outcome of a Monte-Carlo check of the coverage guarantee.
struct CoverageReport {
    std::size_t trials = 0;
    std::size_t violations = 0;    // trials where lambda_hat contains a k
                                   // whose true risk exceeds alpha
    double fwer_estimate = 0.0;    // violations / trials
    std::uint64_t seed = 0;
    std::vector<std::size_t> accept_counts;  // per candidate, acceptance tally
};

/// Repeatedly draws n Bernoulli losses per candidate (independent across
/// candidates) from the given true risk curve, calibrates on the resulting
/// empirical risks, and counts trials whose accepted set contains an unsafe
/// candidate. Trial t draws from its own generator stream (seed, t), so the
/// report does not depend on evaluation order.
CoverageReport simulate_coverage(std::span<const double> risk_curve,
                                 std::size_t n, double alpha_risk, double delta,
                                 Procedure procedure, std::size_t trials,
                                 std::uint64_t seed);

}  // namespace rulekit
