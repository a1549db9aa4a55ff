#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "varsmooth/rng.hpp"
#include "varsmooth/shape.hpp"

namespace varsmooth {

/// Element of a product of finite-dimensional real spaces. Blocks are stored
/// contiguously so whole-vector arithmetic runs as one flat kernel call.
class BlockVector {
public:
    BlockVector() = default;

    /// Zero vector with a single block.
    explicit BlockVector(Shape shape);

    /// Zero vector with the given block structure.
    explicit BlockVector(std::vector<Shape> shapes);

    /// Single block initialized from `values` (must match shape.elems()).
    static BlockVector from_values(Shape shape, std::vector<double> values);

    std::size_t num_blocks() const noexcept { return shapes_.size(); }
    const Shape& shape(std::size_t b) const { return shapes_.at(b); }
    const std::vector<Shape>& shapes() const noexcept { return shapes_; }

    /// Total element count across blocks.
    std::size_t size() const noexcept { return data_.size(); }

    std::span<double> block(std::size_t b);
    std::span<const double> block(std::size_t b) const;

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    double operator[](std::size_t i) const { return data_[i]; }
    double& operator[](std::size_t i) { return data_[i]; }

    bool same_structure(const BlockVector& other) const noexcept {
        return shapes_ == other.shapes_;
    }

    void set_zero();

private:
    std::vector<Shape> shapes_;
    std::vector<std::size_t> offsets_; // block b occupies [offsets_[b], offsets_[b+1])
    std::vector<double> data_;
};

/// Inner product; blocks must match. Throws shape_error otherwise.
double dot(const BlockVector& a, const BlockVector& b);

/// Euclidean norm sqrt(dot(a, a)).
double norm2(const BlockVector& a);

/// Elementwise alpha*a + beta*b.
BlockVector lincomb(double alpha, const BlockVector& a, double beta, const BlockVector& b);
void lincomb_into(double alpha, const BlockVector& a, double beta, const BlockVector& b,
                  BlockVector& out);

/// i.i.d. N(0, sigma^2) entries; deterministic given the stream state.
BlockVector gaussian(const Shape& shape, double sigma, RngStream& rng);

/// Fill every block of an existing vector with N(0, sigma^2) entries.
void fill_gaussian(BlockVector& out, double sigma, RngStream& rng);

} // namespace varsmooth
