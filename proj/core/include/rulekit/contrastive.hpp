#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rulekit/embedding.hpp"
#include "rulekit/error.hpp"

namespace rulekit {

/// Symmetric InfoNCE-style loss over a paired (square) similarity matrix.
/// image_side averages -log softmax over rows, text_side over columns,
/// total is their mean. All three are >= 0.
struct ContrastiveLoss {
    double total = 0.0;
    double image_side = 0.0;
    double text_side = 0.0;
};

/// Throws ValidationError ("non-square") unless s.rows == s.cols.
/// Computed with per-row/column max subtraction, natural log.
ContrastiveLoss contrastive_loss(const SimilarityMatrix& s);

/// d(total)/d(S_ij) as a row-major n*n buffer.
/// Entry (i, j) = (softmax_row_i(S)_j + softmax_col_j(S)_i) / (2n) - delta_ij / n.
std::vector<double> contrastive_loss_grad(const SimilarityMatrix& s);

/// Trainable linear maps applied to frozen image/text embeddings.
struct ProjectionHeads {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    std::vector<double> w_img;  // row-major in_dim x out_dim
    std::vector<double> w_txt;
};

/// m * w for a row-major in_dim x out_dim weight buffer.
EmbeddingMatrix project(const EmbeddingMatrix& m, std::span<const double> weights,
                        std::size_t out_dim);

struct TrainOptions {
    std::size_t out_dim = 0;
    std::size_t epochs = 1;
    double learning_rate = 0.0;
    std::uint64_t seed = 0;
};

struct TrainResult {
    ProjectionHeads heads;
    std::vector<double> loss_trace;  // one entry per epoch, evaluated pre-update
};

/// Raised when the training loss stops being finite; carries the trace
/// recorded up to the failing epoch.
class TrainingDiverged : public Error {
public:
    TrainingDiverged(const std::string& what, std::vector<double> trace)
        : Error(what, ExitCode::validation), partial_trace(std::move(trace)) {}

    std::vector<double> partial_trace;
};

/// Full-batch gradient descent on the contrastive loss of the projected,
/// row-normalized embeddings. Heads are initialized from uniform(-0.01, 0.01)
/// draws of a seeded deterministic generator, so equal inputs and options
/// reproduce equal traces on every platform.
TrainResult train_projections(const EmbeddingMatrix& v_img,
                              const EmbeddingMatrix& v_txt,
                              const TrainOptions& options);

}  // namespace rulekit
