#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace varsmooth::kernels {

/// Boundary rule for image-domain stencils.
enum class Boundary { zero, symmetric };

/// Reductions accumulate fixed-size chunks and then combine the chunk
/// partials in chunk order. The serial and OpenMP variants therefore produce
/// bitwise-identical results for any thread count.
inline constexpr std::size_t reduction_chunk = 1024;

/// Minimum element count before the dispatching entry points go parallel.
inline constexpr std::size_t parallel_grain = 16384;

// Serial reference implementations. Kept as the ground truth the parallel
// variants are tested against.
namespace serial {

double dot(std::span<const double> a, std::span<const double> b);
double sum_abs(std::span<const double> a);
void axpby(double alpha, std::span<const double> x, double beta,
           std::span<const double> y, std::span<double> out);
void scale(double alpha, std::span<const double> x, std::span<double> out);
void soft_threshold(std::span<const double> x, double t, std::span<double> out);
void clamp_abs(std::span<const double> x, double r, std::span<double> out);

// Forward differences down the rows / across the columns of an m-by-n image
// (row-major), zero on the last row / column, and their exact adjoints.
void diff_rows(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n);
void diff_rows_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n);
void diff_cols(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n);
void diff_cols_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n);

// 2-D correlation of an m-by-n image with a km-by-kn kernel (odd dims) under
// the given boundary rule; adjoint = true evaluates the exact transpose.
void conv2d(std::span<const double> u, std::span<double> out,
            std::int64_t m, std::int64_t n,
            std::span<const double> kernel, std::int64_t km, std::int64_t kn,
            Boundary boundary, bool adjoint);

// i.i.d. N(0, sigma^2) fill; element j consumes counters c0+2j, c0+2j+1 of
// the stream (seed, .), so the result does not depend on thread count.
void fill_gaussian(std::span<double> out, double sigma,
                   std::uint64_t seed, std::uint64_t counter0);

} // namespace serial

// OpenMP variants; bitwise identical to the serial ones by construction.
namespace omp {

double dot(std::span<const double> a, std::span<const double> b);
double sum_abs(std::span<const double> a);
void axpby(double alpha, std::span<const double> x, double beta,
           std::span<const double> y, std::span<double> out);
void scale(double alpha, std::span<const double> x, std::span<double> out);
void soft_threshold(std::span<const double> x, double t, std::span<double> out);
void clamp_abs(std::span<const double> x, double r, std::span<double> out);
void diff_rows(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n);
void diff_rows_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n);
void diff_cols(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n);
void diff_cols_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n);
void conv2d(std::span<const double> u, std::span<double> out,
            std::int64_t m, std::int64_t n,
            std::span<const double> kernel, std::int64_t km, std::int64_t kn,
            Boundary boundary, bool adjoint);
void fill_gaussian(std::span<double> out, double sigma,
                   std::uint64_t seed, std::uint64_t counter0);

} // namespace omp

// Dispatching entry points: parallel above parallel_grain, serial below.
// Either path yields the same bits, so the cutoff is purely a speed knob.
double dot(std::span<const double> a, std::span<const double> b);
double sum_abs(std::span<const double> a);
void axpby(double alpha, std::span<const double> x, double beta,
           std::span<const double> y, std::span<double> out);
void scale(double alpha, std::span<const double> x, std::span<double> out);
void soft_threshold(std::span<const double> x, double t, std::span<double> out);
void clamp_abs(std::span<const double> x, double r, std::span<double> out);
void diff_rows(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n);
void diff_rows_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n);
void diff_cols(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n);
void diff_cols_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n);
void conv2d(std::span<const double> u, std::span<double> out,
            std::int64_t m, std::int64_t n,
            std::span<const double> kernel, std::int64_t km, std::int64_t kn,
            Boundary boundary, bool adjoint);
void fill_gaussian(std::span<double> out, double sigma,
                   std::uint64_t seed, std::uint64_t counter0);

} // namespace varsmooth::kernels
