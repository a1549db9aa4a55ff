#pragma once

#include <filesystem>

#include "varsmooth/block_vector.hpp"

namespace varsmooth {

/// Read a P2 (ASCII) or P5 (binary) PGM file; pixels are mapped linearly
/// from [0, maxval] to [0, 1]. '#' comment lines are accepted after the
/// magic number. Malformed input raises format_error with the byte offset.
BlockVector load_pgm(const std::filesystem::path& path);

/// Write a single-block image as binary P5, clamped to [0, 1] and scaled to
/// maxval 255. Round-tripping changes each in-range pixel by at most 1/510.
void save_pgm(const BlockVector& img, const std::filesystem::path& path);

} // namespace varsmooth
