#include "holojet/kernels.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holojet::kernels {

namespace {
std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};

// Below this many output coefficients the parallel dispatch is not worth
// the fork/join overhead for rational arithmetic.
constexpr int kConvThreshold = 64;
constexpr int kConv2Threshold = 256;
} // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel_enabled(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

void conv_serial(std::span<const Scalar> a, std::span<const Scalar> b, std::span<Scalar> out) {
    const int n = static_cast<int>(out.size());
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    for (int d = 0; d < n; ++d) {
        Scalar acc;
        const int lo = std::max(0, d - nb + 1);
        const int hi = std::min(d, na - 1);
        for (int i = lo; i <= hi; ++i) acc += a[i] * b[d - i];
        out[d] = std::move(acc);
    }
}

void conv_parallel(std::span<const Scalar> a, std::span<const Scalar> b, std::span<Scalar> out) {
    const int n = static_cast<int>(out.size());
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (int d = 0; d < n; ++d) {
        Scalar acc;
        const int lo = std::max(0, d - nb + 1);
        const int hi = std::min(d, na - 1);
        for (int i = lo; i <= hi; ++i) acc += a[i] * b[d - i];
        out[d] = std::move(acc);
    }
}

void conv(std::span<const Scalar> a, std::span<const Scalar> b, std::span<Scalar> out) {
    if (parallel_enabled() && static_cast<int>(out.size()) >= kConvThreshold)
        conv_parallel(a, b, out);
    else
        conv_serial(a, b, out);
}

namespace {

inline void conv2_cell(const Scalar* a, int any, int anx, const Scalar* b, int bny, int bnx,
                       Scalar* out, int onx, int dy, int dx) {
    Scalar acc;
    const int ylo = std::max(0, dy - bny);
    const int yhi = std::min(dy, any);
    for (int iy = ylo; iy <= yhi; ++iy) {
        const int jy = dy - iy;
        const Scalar* ra = a + static_cast<size_t>(iy) * (anx + 1);
        const Scalar* rb = b + static_cast<size_t>(jy) * (bnx + 1);
        const int xlo = std::max(0, dx - bnx);
        const int xhi = std::min(dx, anx);
        for (int ix = xlo; ix <= xhi; ++ix) acc += ra[ix] * rb[dx - ix];
    }
    out[static_cast<size_t>(dy) * (onx + 1) + dx] = std::move(acc);
}

} // namespace

void conv2_serial(const Scalar* a, int any, int anx, const Scalar* b, int bny, int bnx,
                  Scalar* out, int ony, int onx) {
    for (int dy = 0; dy <= ony; ++dy)
        for (int dx = 0; dx <= onx; ++dx) conv2_cell(a, any, anx, b, bny, bnx, out, onx, dy, dx);
}

void conv2_parallel(const Scalar* a, int any, int anx, const Scalar* b, int bny, int bnx,
                    Scalar* out, int ony, int onx) {
    const int cells = (ony + 1) * (onx + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int c = 0; c < cells; ++c)
        conv2_cell(a, any, anx, b, bny, bnx, out, onx, c / (onx + 1), c % (onx + 1));
}

void conv2(const Scalar* a, int any, int anx, const Scalar* b, int bny, int bnx, Scalar* out,
           int ony, int onx) {
    if (parallel_enabled() && (ony + 1) * (onx + 1) >= kConv2Threshold)
        conv2_parallel(a, any, anx, b, bny, bnx, out, ony, onx);
    else
        conv2_serial(a, any, anx, b, bny, bnx, out, ony, onx);
}

} // namespace holojet::kernels
