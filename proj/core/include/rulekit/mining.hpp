#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rulekit/records.hpp"

namespace rulekit {

/// One preference pair mined from an over-reliance failure: the base answer
/// was right, the retrieval-augmented answer at depth k was not. Preferred
/// is the ground truth rendered as "yes"/"no"; dispreferred keeps the raw
/// model output so downstream tuning sees the actual bad generation.
struct PreferencePair {
    std::string id;
    std::string question;
    std::vector<std::string> context;
    std::string preferred;
    std::string dispreferred;
};

/// Emits a pair for every record where normalize(base_answer) equals the
/// ground truth and normalize(rag answer at k) does not (unknown counts as
/// a mismatch on both sides). Output order follows input order.
std::vector<PreferencePair> mine_preferences(std::span<const PredictionRecord> records,
                                             int k);

/// Among answers that retrieval got wrong at depth k, the fraction whose
/// base answer was right. With no retrieval errors the ratio is undefined
/// and left unset rather than reported as 0.
struct OverReliance {
    std::size_t numerator = 0;    // base correct and rag wrong
    std::size_t denominator = 0;  // rag wrong
    std::optional<double> ratio;
};

OverReliance over_reliance_ratio(std::span<const PredictionRecord> records, int k);

}  // namespace rulekit
