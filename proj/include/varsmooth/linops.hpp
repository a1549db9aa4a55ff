#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "varsmooth/block_vector.hpp"
#include "varsmooth/kernels.hpp"

namespace varsmooth {

/// Matrix-free linear continuous operator: an apply/adjoint pair with
/// domain/codomain block structure and an optional upper bound on the
/// operator norm. Operators are stateless after construction; apply and
/// adjoint are pure.
struct LinearOperator {
    std::vector<Shape> domain;
    std::vector<Shape> codomain;
    std::optional<double> norm_bound;
    std::function<void(const BlockVector&, BlockVector&)> forward;
    std::function<void(const BlockVector&, BlockVector&)> transpose;

    BlockVector apply(const BlockVector& x) const;
    BlockVector adjoint(const BlockVector& y) const;
    void apply_into(const BlockVector& x, BlockVector& out) const;
    void adjoint_into(const BlockVector& y, BlockVector& out) const;
};

/// Identity on the given shape; norm_bound = 1.
LinearOperator identity(Shape shape);

/// x -> d .* x elementwise; norm_bound = max |d_i|.
LinearOperator diagonal(BlockVector d);

/// Forward difference down the rows of an m-by-n image, zero on the last
/// row; the adjoint is the matching negative divergence. norm_bound = 2.
LinearOperator d1_rows(std::int64_t m, std::int64_t n);

/// Forward difference across the columns, zero on the last column.
/// norm_bound = 2.
LinearOperator d2_cols(std::int64_t m, std::int64_t n);

/// 2-D correlation with the given odd-sized kernel under the stated boundary
/// rule; the adjoint is the exact transpose. For a nonnegative kernel that
/// sums to 1 the norm bound 1 is recorded when it is actually valid (zero
/// boundary, or symmetric boundary with a centrally symmetric kernel).
LinearOperator conv2d(std::vector<double> kernel, std::int64_t km, std::int64_t kn,
                      std::int64_t m, std::int64_t n,
                      kernels::Boundary boundary = kernels::Boundary::symmetric);

/// x -> (K_1 x, ..., K_p x); all parts must share one domain. The adjoint
/// sums the per-part adjoints; norm_bound = sqrt(sum of squared part bounds).
LinearOperator stack(std::vector<LinearOperator> parts);

/// Power iteration on K*K from a random start. Returns the square root of
/// the dominant eigenvalue estimate, 0 for the zero operator.
double estimate_norm(const LinearOperator& op, int iters, double tol, RngStream& rng);

/// Normalized 2-D Gaussian kernel (size x size, odd), sum exactly 1.
std::vector<double> gaussian_kernel(std::int64_t size, double sigma);

} // namespace varsmooth
