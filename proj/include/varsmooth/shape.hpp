#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "varsmooth/errors.hpp"

namespace varsmooth {

/// Dimensions of one dense block: [n] for flat vectors, [m, n] for images.
class Shape {
public:
    Shape() = default;

    Shape(std::initializer_list<std::int64_t> dims) : dims_(dims) { validate(); }

    explicit Shape(std::vector<std::int64_t> dims) : dims_(std::move(dims)) { validate(); }

    std::size_t ndim() const noexcept { return dims_.size(); }

    std::int64_t dim(std::size_t i) const { return dims_.at(i); }

    const std::vector<std::int64_t>& dims() const noexcept { return dims_; }

    std::size_t elems() const noexcept {
        std::size_t n = 1;
        for (auto d : dims_) n *= static_cast<std::size_t>(d);
        return n;
    }

    // 2-D accessors; a flat vector counts as a single-column image.
    std::int64_t rows() const { return dims_.empty() ? 0 : dims_[0]; }
    std::int64_t cols() const { return dims_.size() >= 2 ? dims_[1] : 1; }

    bool operator==(const Shape& other) const noexcept { return dims_ == other.dims_; }
    bool operator!=(const Shape& other) const noexcept { return !(*this == other); }

private:
    void validate() const {
        if (dims_.empty()) throw shape_error("Shape: no dimensions given");
        for (auto d : dims_)
            if (d < 1) throw shape_error("Shape: every dimension must be >= 1");
    }

    std::vector<std::int64_t> dims_;
};

} // namespace varsmooth
