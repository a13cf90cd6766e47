#pragma once

#include <span>
#include <string>
#include <vector>

namespace rulekit {

/// Sequence-level log-likelihoods for one preference pair under the policy
/// and reference models. Values are opaque finite reals; sums over tokens
/// may legitimately be positive, so no sign is enforced.
struct DpoBatchItem {
    std::string id;
    double logp_policy_preferred = 0.0;
    double logp_ref_preferred = 0.0;
    double logp_policy_dispreferred = 0.0;
    double logp_ref_dispreferred = 0.0;
};

struct DpoConfig {
    /// Preference-loss sharpness coefficient. Must be > 0. (Named beta here;
    /// the risk bound alpha of the calibration module is unrelated.)
    double beta_dpo = 1.0;
};

/// Bradley-Terry probability sigma(reward_preferred - reward_dispreferred),
/// evaluated without overflow for differences up to +-700.
double preference_probability(double reward_preferred, double reward_dispreferred);

struct DpoLoss {
    double mean = 0.0;
    std::vector<double> per_item;
};

/// Per item: -log sigma(beta * margin) with
/// margin = (logp_policy_w - logp_ref_w) - (logp_policy_l - logp_ref_l),
/// computed as softplus(-beta * margin) for stability. The mean is a plain
/// sequential sum over the batch. Throws ValidationError on an empty batch
/// or non-finite inputs.
DpoLoss dpo_loss(std::span<const DpoBatchItem> batch, const DpoConfig& config);

}  // namespace rulekit
