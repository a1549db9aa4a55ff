#include "varsmooth/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "varsmooth/rng.hpp"

namespace varsmooth::kernels {

namespace {

// Per-chunk / per-row bodies shared by the serial and OpenMP drivers, so both
// orderings run literally the same arithmetic.

inline double dot_chunk(const double* a, const double* b, std::size_t lo, std::size_t hi) {
    double partial = 0.0;
    for (std::size_t i = lo; i < hi; ++i) partial += a[i] * b[i];
    return partial;
}

inline double abs_chunk(const double* a, std::size_t lo, std::size_t hi) {
    double partial = 0.0;
    for (std::size_t i = lo; i < hi; ++i) partial += std::abs(a[i]);
    return partial;
}

inline std::size_t num_chunks(std::size_t n) {
    return (n + reduction_chunk - 1) / reduction_chunk;
}

inline void diff_rows_at(const double* u, double* out, std::int64_t m, std::int64_t n,
                         std::int64_t i) {
    if (i + 1 < m) {
        for (std::int64_t j = 0; j < n; ++j) out[i * n + j] = u[(i + 1) * n + j] - u[i * n + j];
    } else {
        for (std::int64_t j = 0; j < n; ++j) out[i * n + j] = 0.0;
    }
}

inline void diff_rows_adjoint_at(const double* y, double* out, std::int64_t m, std::int64_t n,
                                 std::int64_t i) {
    for (std::int64_t j = 0; j < n; ++j) {
        double v = 0.0;
        if (i > 0) v += y[(i - 1) * n + j];
        if (i + 1 < m) v -= y[i * n + j];
        out[i * n + j] = v;
    }
}

inline void diff_cols_at(const double* u, double* out, std::int64_t /*m*/, std::int64_t n,
                         std::int64_t i) {
    for (std::int64_t j = 0; j + 1 < n; ++j) out[i * n + j] = u[i * n + j + 1] - u[i * n + j];
    out[i * n + n - 1] = 0.0;
}

inline void diff_cols_adjoint_at(const double* y, double* out, std::int64_t /*m*/, std::int64_t n,
                                 std::int64_t i) {
    for (std::int64_t j = 0; j < n; ++j) {
        double v = 0.0;
        if (j > 0) v += y[i * n + j - 1];
        if (j + 1 < n) v -= y[i * n + j];
        out[i * n + j] = v;
    }
}

// Preimages of index p under single symmetric reflection with edge repeat:
// ref(z) = -1-z for z < 0 and 2*len-1-z for z >= len. Requires radius <= len.
inline int reflect_preimages(std::int64_t p, std::int64_t len, std::int64_t radius,
                             std::int64_t pre[3]) {
    int cnt = 0;
    pre[cnt++] = p;
    if (p <= radius - 1) pre[cnt++] = -1 - p;
    if (p >= len - radius) pre[cnt++] = 2 * len - 1 - p;
    return cnt;
}

inline std::int64_t reflect_index(std::int64_t z, std::int64_t len) {
    if (z < 0) return -1 - z;
    if (z >= len) return 2 * len - 1 - z;
    return z;
}

// One output row of the correlation (gather form).
inline void conv_forward_row(const double* u, double* out, std::int64_t m, std::int64_t n,
                             const double* w, std::int64_t rm, std::int64_t rn,
                             Boundary boundary, std::int64_t i) {
    const std::int64_t kn = 2 * rn + 1;
    for (std::int64_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::int64_t a = -rm; a <= rm; ++a) {
            std::int64_t zi = i + a;
            if (boundary == Boundary::zero) {
                if (zi < 0 || zi >= m) continue;
            } else {
                zi = reflect_index(zi, m);
            }
            const double* wr = w + (a + rm) * kn;
            const double* ur = u + zi * n;
            for (std::int64_t b = -rn; b <= rn; ++b) {
                std::int64_t zj = j + b;
                if (boundary == Boundary::zero) {
                    if (zj < 0 || zj >= n) continue;
                } else {
                    zj = reflect_index(zj, n);
                }
                acc += wr[b + rn] * ur[zj];
            }
        }
        out[i * n + j] = acc;
    }
}

// One output row of the exact transpose, still as a gather: accumulate over
// every virtual index that reflects onto this pixel.
inline void conv_adjoint_row(const double* y, double* out, std::int64_t m, std::int64_t n,
                             const double* w, std::int64_t rm, std::int64_t rn,
                             Boundary boundary, std::int64_t p) {
    const std::int64_t kn = 2 * rn + 1;
    std::int64_t pr[3];
    std::int64_t pc[3];
    const int nr = (boundary == Boundary::symmetric) ? reflect_preimages(p, m, rm, pr)
                                                     : (pr[0] = p, 1);
    for (std::int64_t q = 0; q < n; ++q) {
        const int nc = (boundary == Boundary::symmetric) ? reflect_preimages(q, n, rn, pc)
                                                         : (pc[0] = q, 1);
        double acc = 0.0;
        for (int zr = 0; zr < nr; ++zr) {
            for (int zc = 0; zc < nc; ++zc) {
                for (std::int64_t a = -rm; a <= rm; ++a) {
                    std::int64_t ii = pr[zr] - a;
                    if (ii < 0 || ii >= m) continue;
                    const double* wr = w + (a + rm) * kn;
                    const double* yr = y + ii * n;
                    for (std::int64_t b = -rn; b <= rn; ++b) {
                        std::int64_t jj = pc[zc] - b;
                        if (jj < 0 || jj >= n) continue;
                        acc += wr[b + rn] * yr[jj];
                    }
                }
            }
        }
        out[p * n + q] = acc;
    }
}

using detail::gaussian_at;

} // namespace

namespace serial {

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    double total = 0.0;
    for (std::size_t c = 0; c < num_chunks(n); ++c) {
        const std::size_t lo = c * reduction_chunk;
        total += dot_chunk(a.data(), b.data(), lo, std::min(n, lo + reduction_chunk));
    }
    return total;
}

double sum_abs(std::span<const double> a) {
    const std::size_t n = a.size();
    double total = 0.0;
    for (std::size_t c = 0; c < num_chunks(n); ++c) {
        const std::size_t lo = c * reduction_chunk;
        total += abs_chunk(a.data(), lo, std::min(n, lo + reduction_chunk));
    }
    return total;
}

void axpby(double alpha, std::span<const double> x, double beta,
           std::span<const double> y, std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) out[i] = alpha * x[i] + beta * y[i];
}

void scale(double alpha, std::span<const double> x, std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) out[i] = alpha * x[i];
}

void soft_threshold(std::span<const double> x, double t, std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x[i];
        out[i] = (v > t) ? v - t : (v < -t ? v + t : 0.0);
    }
}

void clamp_abs(std::span<const double> x, double r, std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) out[i] = std::clamp(x[i], -r, r);
}

void diff_rows(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n) {
    for (std::int64_t i = 0; i < m; ++i) diff_rows_at(u.data(), out.data(), m, n, i);
}

void diff_rows_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n) {
    for (std::int64_t i = 0; i < m; ++i) diff_rows_adjoint_at(y.data(), out.data(), m, n, i);
}

void diff_cols(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n) {
    for (std::int64_t i = 0; i < m; ++i) diff_cols_at(u.data(), out.data(), m, n, i);
}

void diff_cols_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n) {
    for (std::int64_t i = 0; i < m; ++i) diff_cols_adjoint_at(y.data(), out.data(), m, n, i);
}

void conv2d(std::span<const double> u, std::span<double> out,
            std::int64_t m, std::int64_t n,
            std::span<const double> kernel, std::int64_t km, std::int64_t kn,
            Boundary boundary, bool adjoint) {
    const std::int64_t rm = km / 2;
    const std::int64_t rn = kn / 2;
    if (!adjoint) {
        for (std::int64_t i = 0; i < m; ++i)
            conv_forward_row(u.data(), out.data(), m, n, kernel.data(), rm, rn, boundary, i);
    } else {
        for (std::int64_t i = 0; i < m; ++i)
            conv_adjoint_row(u.data(), out.data(), m, n, kernel.data(), rm, rn, boundary, i);
    }
}

void fill_gaussian(std::span<double> out, double sigma,
                   std::uint64_t seed, std::uint64_t counter0) {
    const std::size_t n = out.size();
    for (std::size_t j = 0; j < n; ++j)
        out[j] = gaussian_at(sigma, seed, counter0 + 2 * static_cast<std::uint64_t>(j));
}

} // namespace serial

namespace omp {

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    const std::int64_t nc = static_cast<std::int64_t>(num_chunks(n));
    std::vector<double> partials(static_cast<std::size_t>(nc), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nc; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * reduction_chunk;
        partials[static_cast<std::size_t>(c)] =
            dot_chunk(a.data(), b.data(), lo, std::min(n, lo + reduction_chunk));
    }
    double total = 0.0;
    for (double p : partials) total += p;
    return total;
}

double sum_abs(std::span<const double> a) {
    const std::size_t n = a.size();
    const std::int64_t nc = static_cast<std::int64_t>(num_chunks(n));
    std::vector<double> partials(static_cast<std::size_t>(nc), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nc; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * reduction_chunk;
        partials[static_cast<std::size_t>(c)] =
            abs_chunk(a.data(), lo, std::min(n, lo + reduction_chunk));
    }
    double total = 0.0;
    for (double p : partials) total += p;
    return total;
}

void axpby(double alpha, std::span<const double> x, double beta,
           std::span<const double> y, std::span<double> out) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = alpha * x[i] + beta * y[i];
}

void scale(double alpha, std::span<const double> x, std::span<double> out) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = alpha * x[i];
}

void soft_threshold(std::span<const double> x, double t, std::span<double> out) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const double v = x[i];
        out[i] = (v > t) ? v - t : (v < -t ? v + t : 0.0);
    }
}

void clamp_abs(std::span<const double> x, double r, std::span<double> out) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = std::clamp(x[i], -r, r);
}

void diff_rows(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < m; ++i) diff_rows_at(u.data(), out.data(), m, n, i);
}

void diff_rows_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < m; ++i) diff_rows_adjoint_at(y.data(), out.data(), m, n, i);
}

void diff_cols(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < m; ++i) diff_cols_at(u.data(), out.data(), m, n, i);
}

void diff_cols_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < m; ++i) diff_cols_adjoint_at(y.data(), out.data(), m, n, i);
}

void conv2d(std::span<const double> u, std::span<double> out,
            std::int64_t m, std::int64_t n,
            std::span<const double> kernel, std::int64_t km, std::int64_t kn,
            Boundary boundary, bool adjoint) {
    const std::int64_t rm = km / 2;
    const std::int64_t rn = kn / 2;
    if (!adjoint) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < m; ++i)
            conv_forward_row(u.data(), out.data(), m, n, kernel.data(), rm, rn, boundary, i);
    } else {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < m; ++i)
            conv_adjoint_row(u.data(), out.data(), m, n, kernel.data(), rm, rn, boundary, i);
    }
}

void fill_gaussian(std::span<double> out, double sigma,
                   std::uint64_t seed, std::uint64_t counter0) {
    const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        out[j] = gaussian_at(sigma, seed, counter0 + 2 * static_cast<std::uint64_t>(j));
}

} // namespace omp

double dot(std::span<const double> a, std::span<const double> b) {
    return a.size() >= parallel_grain ? omp::dot(a, b) : serial::dot(a, b);
}

double sum_abs(std::span<const double> a) {
    return a.size() >= parallel_grain ? omp::sum_abs(a) : serial::sum_abs(a);
}

void axpby(double alpha, std::span<const double> x, double beta,
           std::span<const double> y, std::span<double> out) {
    if (x.size() >= parallel_grain)
        omp::axpby(alpha, x, beta, y, out);
    else
        serial::axpby(alpha, x, beta, y, out);
}

void scale(double alpha, std::span<const double> x, std::span<double> out) {
    if (x.size() >= parallel_grain)
        omp::scale(alpha, x, out);
    else
        serial::scale(alpha, x, out);
}

void soft_threshold(std::span<const double> x, double t, std::span<double> out) {
    if (x.size() >= parallel_grain)
        omp::soft_threshold(x, t, out);
    else
        serial::soft_threshold(x, t, out);
}

void clamp_abs(std::span<const double> x, double r, std::span<double> out) {
    if (x.size() >= parallel_grain)
        omp::clamp_abs(x, r, out);
    else
        serial::clamp_abs(x, r, out);
}

void diff_rows(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n) {
    if (u.size() >= parallel_grain)
        omp::diff_rows(u, out, m, n);
    else
        serial::diff_rows(u, out, m, n);
}

void diff_rows_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n) {
    if (y.size() >= parallel_grain)
        omp::diff_rows_adjoint(y, out, m, n);
    else
        serial::diff_rows_adjoint(y, out, m, n);
}

void diff_cols(std::span<const double> u, std::span<double> out,
               std::int64_t m, std::int64_t n) {
    if (u.size() >= parallel_grain)
        omp::diff_cols(u, out, m, n);
    else
        serial::diff_cols(u, out, m, n);
}

void diff_cols_adjoint(std::span<const double> y, std::span<double> out,
                       std::int64_t m, std::int64_t n) {
    if (y.size() >= parallel_grain)
        omp::diff_cols_adjoint(y, out, m, n);
    else
        serial::diff_cols_adjoint(y, out, m, n);
}

void conv2d(std::span<const double> u, std::span<double> out,
            std::int64_t m, std::int64_t n,
            std::span<const double> kernel, std::int64_t km, std::int64_t kn,
            Boundary boundary, bool adjoint) {
    // conv does ~km*kn work per pixel, so it pays off earlier.
    if (u.size() * static_cast<std::size_t>(km * kn) >= parallel_grain)
        omp::conv2d(u, out, m, n, kernel, km, kn, boundary, adjoint);
    else
        serial::conv2d(u, out, m, n, kernel, km, kn, boundary, adjoint);
}

void fill_gaussian(std::span<double> out, double sigma,
                   std::uint64_t seed, std::uint64_t counter0) {
    if (out.size() >= 4096)
        omp::fill_gaussian(out, sigma, seed, counter0);
    else
        serial::fill_gaussian(out, sigma, seed, counter0);
}

} // namespace varsmooth::kernels
