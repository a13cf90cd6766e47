#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "rulekit/records.hpp"

namespace rulekit {

/// Binary confusion tallies with "yes" as the positive class. Predictions
/// that normalize to unknown are counted separately: they are wrong for
/// accuracy but stay out of the tp/fp/tn/fn cells.
struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;
    std::size_t unknown = 0;

    std::size_t total() const noexcept { return tp + fp + tn + fn + unknown; }
};

/// Tallies predictions against ground truth. rag_k unset scores the base
/// (no-retrieval) answers; rag_k = k scores the answers at retrieval depth k.
ConfusionCounts confusion_counts(std::span<const PredictionRecord> records,
                                 std::optional<int> rag_k);

struct MetricsReport {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double factuality_risk = 0.0;  // always exactly 1 - accuracy
    bool precision_defined = true;
    bool recall_defined = true;
};

/// accuracy = (tp + tn) / total with unknown in the denominator;
/// precision = tp / (tp + fp); recall = tp / (tp + fn); f1 is their harmonic
/// mean, computed as 2*tp / (2*tp + fp + fn) so integer counts divide once.
/// An undefined precision/recall is reported as 0 with its flag cleared.
/// Throws ValidationError on zero total.
MetricsReport classification_report(const ConfusionCounts& counts);

/// Aligned plain-text table of the report, percentages with 2 decimals.
std::string metrics_table(const MetricsReport& report);

}  // namespace rulekit
