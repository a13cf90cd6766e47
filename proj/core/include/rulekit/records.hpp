#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rulekit {

enum class Answer { yes, no, unknown };

const char* to_string(Answer a);

/// Maps free-text model output onto {yes, no, unknown}.
///
/// Case-insensitive, over words (maximal ASCII letter runs):
///  - a leading "yes"/"no" word decides immediately;
///  - otherwise a whole-word "yes" or "no" anywhere decides, but if both
///    words occur the text is ambiguous and maps to unknown;
///  - no occurrence of either maps to unknown.
/// Total and deterministic; unknown is a value, not an error.
Answer normalize_answer(std::string_view raw);

/// One QA sample from a model-prediction log: the question, the yes/no
/// ground truth, the answer without retrieval, and the answer at each
/// retrieval depth k that was probed.
struct PredictionRecord {
    std::string id;
    std::string question;
    Answer ground_truth = Answer::unknown;    // strictly yes/no after parsing
    std::string base_answer;                  // answer with no retrieved context
    std::map<int, std::string> rag_answers;   // retrieval depth k -> raw answer
    std::vector<std::string> context;         // retrieved report texts, optional
};

/// rag_answers.at(k) with a ValidationError ("missing answer") instead of
/// std::out_of_range when depth k was never probed for this record.
const std::string& rag_answer_at(const PredictionRecord& record, int k);

}  // namespace rulekit
