#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holojet/kernels.hpp"
#include "test_support.hpp"

using namespace holojet;

namespace {

std::vector<Scalar> naive_conv(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                               size_t n) {
    std::vector<Scalar> out(n);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (i + j < n) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

TEST_CASE("serial kernel matches the naive convolution") {
    hjtest::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        size_t na = static_cast<size_t>(rng.uniform(1, 40));
        size_t nb = static_cast<size_t>(rng.uniform(1, 40));
        std::vector<Scalar> a(na), b(nb);
        for (auto& c : a) c = hjtest::small_scalar(rng);
        for (auto& c : b) c = hjtest::small_scalar(rng);
        size_t n = static_cast<size_t>(rng.uniform(1, static_cast<long>(na + nb)));
        std::vector<Scalar> out(n);
        kernels::conv_serial(a, b, out);
        CHECK(out == naive_conv(a, b, n));
    }
}

TEST_CASE("parallel kernel equals the serial reference exactly") {
    hjtest::Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = static_cast<size_t>(rng.uniform(1, 200));
        std::vector<Scalar> a(n), b(n);
        for (auto& c : a) c = hjtest::small_scalar(rng);
        for (auto& c : b) c = hjtest::small_scalar(rng);
        std::vector<Scalar> s(n), p(n);
        kernels::conv_serial(a, b, s);
        kernels::conv_parallel(a, b, p);
        CHECK(s == p);
    }
}

TEST_CASE("bivariate kernels agree") {
    hjtest::Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        int ny = static_cast<int>(rng.uniform(0, 12));
        int nx = static_cast<int>(rng.uniform(0, 12));
        size_t cells = static_cast<size_t>((ny + 1) * (nx + 1));
        std::vector<Scalar> a(cells), b(cells);
        for (auto& c : a) c = hjtest::small_scalar(rng);
        for (auto& c : b) c = hjtest::small_scalar(rng);
        std::vector<Scalar> s(cells), p(cells);
        kernels::conv2_serial(a.data(), ny, nx, b.data(), ny, nx, s.data(), ny, nx);
        kernels::conv2_parallel(a.data(), ny, nx, b.data(), ny, nx, p.data(), ny, nx);
        CHECK(s == p);
    }
}

TEST_CASE("dispatcher honours the runtime switch") {
    bool before = kernels::parallel_enabled();
    kernels::set_parallel_enabled(false);
    std::vector<Scalar> a(80, Scalar(1)), b(80, Scalar(1)), out(80);
    kernels::conv(a, b, out);
    CHECK(out[79] == Scalar(80));
    kernels::set_parallel_enabled(true);
    std::vector<Scalar> out2(80);
    kernels::conv(a, b, out2);
    CHECK(out == out2);
    kernels::set_parallel_enabled(before);
}
