#pragma once

#include <span>

#include "holojet/scalar.hpp"

namespace holojet::kernels {

/// Runtime switch for the OpenMP paths.  Defaults to on when compiled
/// with OpenMP; the serial kernels stay available as the reference
/// implementation either way.
bool parallel_enabled();
void set_parallel_enabled(bool on);

/// Truncated Cauchy product: out[d] = sum_{i+j=d} a[i]*b[j] for
/// d < out.size().  Serial reference implementation.
void conv_serial(std::span<const Scalar> a, std::span<const Scalar> b, std::span<Scalar> out);

/// Same contract, output coefficients computed in parallel.
void conv_parallel(std::span<const Scalar> a, std::span<const Scalar> b, std::span<Scalar> out);

/// Dispatches to the parallel kernel above a size threshold.
void conv(std::span<const Scalar> a, std::span<const Scalar> b, std::span<Scalar> out);

/// Bivariate truncated product.  Operands and result are row-major
/// (ny+1) x (nx+1) grids, row index = y-degree, column index = x-degree.
/// The kernels overwrite out completely.
void conv2_serial(const Scalar* a, int any, int anx, const Scalar* b, int bny, int bnx,
                  Scalar* out, int ony, int onx);
void conv2_parallel(const Scalar* a, int any, int anx, const Scalar* b, int bny, int bnx,
                    Scalar* out, int ony, int onx);
void conv2(const Scalar* a, int any, int anx, const Scalar* b, int bny, int bnx, Scalar* out,
           int ony, int onx);

} // namespace holojet::kernels
