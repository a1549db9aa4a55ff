#include "varsmooth/block_vector.hpp"

#include <algorithm>
#include <cmath>

#include "varsmooth/kernels.hpp"

namespace varsmooth {

BlockVector::BlockVector(Shape shape) : BlockVector(std::vector<Shape>{std::move(shape)}) {}

BlockVector::BlockVector(std::vector<Shape> shapes) : shapes_(std::move(shapes)) {
    if (shapes_.empty()) throw shape_error("BlockVector: needs at least one block");
    offsets_.reserve(shapes_.size() + 1);
    offsets_.push_back(0);
    for (const auto& s : shapes_) offsets_.push_back(offsets_.back() + s.elems());
    data_.assign(offsets_.back(), 0.0);
}

BlockVector BlockVector::from_values(Shape shape, std::vector<double> values) {
    if (values.size() != shape.elems())
        throw shape_error("BlockVector::from_values: value count does not match shape");
    BlockVector v(std::move(shape));
    std::copy(values.begin(), values.end(), v.data_.begin());
    return v;
}

std::span<double> BlockVector::block(std::size_t b) {
    return std::span<double>(data_).subspan(offsets_.at(b), shapes_[b].elems());
}

std::span<const double> BlockVector::block(std::size_t b) const {
    return std::span<const double>(data_).subspan(offsets_.at(b), shapes_[b].elems());
}

void BlockVector::set_zero() { std::fill(data_.begin(), data_.end(), 0.0); }

namespace {
void require_same_structure(const BlockVector& a, const BlockVector& b, const char* who) {
    if (!a.same_structure(b)) throw shape_error(std::string(who) + ": block structure mismatch");
}
} // namespace

double dot(const BlockVector& a, const BlockVector& b) {
    require_same_structure(a, b, "dot");
    return kernels::dot(a.data(), b.data());
}

double norm2(const BlockVector& a) { return std::sqrt(kernels::dot(a.data(), a.data())); }

BlockVector lincomb(double alpha, const BlockVector& a, double beta, const BlockVector& b) {
    BlockVector out(a.shapes());
    lincomb_into(alpha, a, beta, b, out);
    return out;
}

void lincomb_into(double alpha, const BlockVector& a, double beta, const BlockVector& b,
                  BlockVector& out) {
    require_same_structure(a, b, "lincomb");
    require_same_structure(a, out, "lincomb");
    kernels::axpby(alpha, a.data(), beta, b.data(), out.data());
}

BlockVector gaussian(const Shape& shape, double sigma, RngStream& rng) {
    BlockVector out(shape);
    fill_gaussian(out, sigma, rng);
    return out;
}

void fill_gaussian(BlockVector& out, double sigma, RngStream& rng) {
    if (sigma < 0) throw param_error("gaussian: sigma must be >= 0");
    kernels::fill_gaussian(out.data(), sigma, rng.seed(), rng.counter());
    rng.skip(2 * out.size());
}

} // namespace varsmooth
