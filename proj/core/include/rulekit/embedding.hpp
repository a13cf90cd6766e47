#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rulekit {

/// Dense row-major embedding store: one row per example.
///
/// The `normalized` flag records that every row has unit L2 norm; consumers
/// that need cosine scores (similarity_matrix, top_k_retrieve) normalize
/// on the fly when the flag is unset.
class EmbeddingMatrix {
public:
    /// Zero-filled rows x dim matrix. Throws ValidationError unless both
    /// extents are >= 1.
    EmbeddingMatrix(std::size_t rows, std::size_t dim);

    /// Takes ownership of row-major `data` (size must be rows * dim).
    EmbeddingMatrix(std::size_t rows, std::size_t dim, std::vector<double> data,
                    bool normalized = false);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t dim() const noexcept { return dim_; }
    bool normalized() const noexcept { return normalized_; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    std::span<double> row(std::size_t i) {
        return {data_.data() + i * dim_, dim_};
    }

    double at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    double& at(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

    const std::vector<double>& data() const noexcept { return data_; }

private:
    std::size_t rows_;
    std::size_t dim_;
    std::vector<double> data_;
    bool normalized_;
};

/// Cross-modal similarity grid: entry (i, j) is the cosine similarity of
/// image row i and text row j.
struct SimilarityMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // row-major

    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
};

/// Returns a copy of `m` with every row scaled to unit L2 norm.
/// Throws ValidationError ("zero row") if any row norm is <= 1e-12.
EmbeddingMatrix normalize_rows(const EmbeddingMatrix& m);

/// S[i][j] = dot(image row i, text row j) over row-normalized inputs.
/// Inputs with an unset `normalized` flag are normalized internally.
/// Throws ValidationError on embedding-dimension mismatch.
SimilarityMatrix similarity_matrix(const EmbeddingMatrix& v_img,
                                   const EmbeddingMatrix& v_txt);

}  // namespace rulekit
