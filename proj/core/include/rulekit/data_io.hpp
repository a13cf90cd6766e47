#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "rulekit/dpo.hpp"
#include "rulekit/metrics.hpp"
#include "rulekit/mining.hpp"
#include "rulekit/records.hpp"
#include "rulekit/risk.hpp"

namespace rulekit {

/// Reads prediction records from JSONL, one object per line:
///   {"id": ..., "question": ..., "ground_truth": "yes"|"no",
///    "base_answer": ..., "rag_answers": {"<k>": ...}, "context": [...]?}
/// Validation is strict: unknown keys, wrong types, non-positive depths and
/// duplicate ids are rejected, with the 1-based line number in the message.
std::vector<PredictionRecord> parse_predictions(std::istream& in);
std::vector<PredictionRecord> parse_predictions(const std::filesystem::path& path);

void write_predictions(std::span<const PredictionRecord> records,
                       const std::filesystem::path& path);

/// Retrieval corpus document: {"id": ..., "report": ...} per JSONL line.
struct CorpusDoc {
    std::string id;
    std::string report;
};

std::vector<CorpusDoc> read_corpus(std::istream& in);
std::vector<CorpusDoc> read_corpus(const std::filesystem::path& path);

/// Preference pairs as JSONL:
///   {"id": ..., "question": ..., "context": [...], "preferred": ...,
///    "dispreferred": ...}
std::vector<PreferencePair> read_preference_pairs(const std::filesystem::path& path);
void write_preference_pairs(std::span<const PreferencePair> pairs,
                            const std::filesystem::path& path);

/// DPO evaluation batch as JSONL:
///   {"id": ..., "lp_pol_w": ..., "lp_ref_w": ..., "lp_pol_l": ..., "lp_ref_l": ...}
std::vector<DpoBatchItem> read_dpo_batch(std::istream& in);
std::vector<DpoBatchItem> read_dpo_batch(const std::filesystem::path& path);

/// Calibration certificate as a single JSON document; parse(serialize(c))
/// reproduces every field exactly (doubles round-trip bit-for-bit).
std::string certificate_to_json(const CalibrationCertificate& cert);
CalibrationCertificate certificate_from_json(const std::string& text);

/// Everything the `report` pipeline measured at the chosen depth.
struct EvalSummary {
    int k = 0;
    ConfusionCounts counts;
    MetricsReport metrics;
    OverReliance over_reliance;
    std::size_t pairs_mined = 0;
};

std::string eval_summary_to_json(const EvalSummary& summary);
EvalSummary eval_summary_from_json(const std::string& text);

std::string coverage_to_json(const CoverageReport& report);
CoverageReport coverage_from_json(const std::string& text);

}  // namespace rulekit
