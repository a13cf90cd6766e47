#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "rulekit/embedding.hpp"

namespace rulekit {

/// EMB1 binary format: magic "EMB1", little-endian u32 rows, u32 dim, then
/// rows*dim little-endian IEEE-754 binary32 values, row-major.
///
/// Values are stored as binary32; a write/read round trip is bit-exact
/// whenever the in-memory doubles are binary32-representable (as they are
/// for any matrix that was read from an EMB1 file).
EmbeddingMatrix read_embeddings(const std::filesystem::path& path);
void write_embeddings(const EmbeddingMatrix& m, const std::filesystem::path& path);

/// Companion ids file: one UTF-8 id per line.
std::vector<std::string> read_ids(const std::filesystem::path& path);
void write_ids(std::span<const std::string> ids, const std::filesystem::path& path);

}  // namespace rulekit
