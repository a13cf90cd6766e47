#pragma once

#include <span>
#include <string>
#include <string_view>

namespace rulekit {

/// Builds the fixed answer-generation prompt. Reports are joined by newline
/// in the given (retrieval-rank) order; the template text is byte-stable.
/// Throws ValidationError on an empty question.
std::string assemble_prompt(std::string_view question,
                            std::span<const std::string> reports);

}  // namespace rulekit
