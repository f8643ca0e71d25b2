#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fano/intlin.hpp"

namespace fano {

inline constexpr const char* kVersion = "0.1.0";

// One "d n" block of a vertex file: a header line then n rows of d integers
// (or, transposed, d rows of n integers). '#' starts a comment, blank lines
// separate blocks.
struct VertexBlock {
  std::size_t dim = 0;
  std::vector<IntVector> points;
  std::size_t line = 0;     // 1-based header line, kept for diagnostics
  std::string comment;      // text of the comment line directly above, if any
};

std::vector<VertexBlock> read_vertex_blocks(const std::string& path,
                                            bool transpose = false);
void write_vertex_blocks(const std::string& path,
                         const std::vector<VertexBlock>& blocks);

// Reproducibility sidecar written next to classification outputs. Timing is
// the only field allowed to differ between reruns on equal inputs.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> input_hashes;
  std::vector<std::pair<std::string, std::size_t>> output_counts;
  double wall_ms = 0.0;
  std::size_t workers = 1;
  std::string version = kVersion;
};
void write_manifest(const RunManifest& m, const std::string& path);

// FNV-1a, 64-bit, as fixed-width hex.
std::string fnv1a_hex(const std::string& bytes);
std::string hash_file(const std::string& path);

}  // namespace fano
