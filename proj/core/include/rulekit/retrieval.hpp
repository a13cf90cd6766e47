#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rulekit/embedding.hpp"

namespace rulekit {

struct RetrievalHit {
    std::string id;
    double score = 0.0;
    std::size_t rank = 0;  // 1-based
};

/// Exact top-k by cosine score over the whole corpus. Result order matches a
/// brute-force full sort: scores non-increasing, ties broken by the smaller
/// corpus index. `ids` must have one entry per corpus row.
///
/// Throws ValidationError for k == 0, k > corpus rows, dimension mismatch,
/// or a zero-norm query/corpus row.
std::vector<RetrievalHit> top_k_retrieve(std::span<const double> query,
                                         const EmbeddingMatrix& corpus,
                                         std::span<const std::string> ids,
                                         std::size_t k);

}  // namespace rulekit
