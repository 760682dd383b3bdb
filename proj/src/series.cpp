#include "holojet/series.hpp"

#include <algorithm>

#include "holojet/kernels.hpp"

namespace holojet {

int Series::check_order(int order) {
    if (order < 0) fail(errc::invalid_argument, "series order must be >= 0");
    return order;
}

Series::Series(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) fail(errc::invalid_argument, "series needs at least the constant term");
}

Series Series::identity(int order) {
    if (order < 1) fail(errc::invalid_argument, "identity series needs order >= 1");
    Series s(order);
    s.c_[1] = Scalar(1);
    return s;
}

Series Series::from_degree_one(const std::vector<Scalar>& coeffs) {
    if (coeffs.empty()) fail(errc::invalid_argument, "empty coefficient list");
    std::vector<Scalar> c(coeffs.size() + 1);
    std::copy(coeffs.begin(), coeffs.end(), c.begin() + 1);
    return Series(std::move(c));
}

const Scalar& Series::coeff(int degree) const {
    static const Scalar zero;
    if (degree < 0) fail(errc::invalid_argument, "negative degree");
    if (degree > order()) return zero;
    return c_[static_cast<size_t>(degree)];
}

Scalar& Series::coeff_mut(int degree) {
    if (degree < 0 || degree > order()) fail(errc::invalid_argument, "degree out of range");
    return c_[static_cast<size_t>(degree)];
}

bool Series::is_zero() const {
    for (const Scalar& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

int Series::valuation() const {
    for (int d = 0; d <= order(); ++d)
        if (!c_[static_cast<size_t>(d)].is_zero()) return d;
    return order() + 1;
}

Series Series::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        fail(errc::invalid_argument, "truncation order out of range");
    std::vector<Scalar> c(c_.begin(), c_.begin() + new_order + 1);
    return Series(std::move(c));
}

Series Series::operator-() const {
    Series r(order());
    for (int d = 0; d <= order(); ++d) r.c_[d] = -c_[d];
    return r;
}

Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int d = 0; d <= n; ++d) r.c_[d] = a.c_[d] + b.c_[d];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int d = 0; d <= n; ++d) r.c_[d] = a.c_[d] - b.c_[d];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    kernels::conv(std::span<const Scalar>(a.c_.data(), a.c_.size()),
                  std::span<const Scalar>(b.c_.data(), b.c_.size()),
                  std::span<Scalar>(r.c_.data(), static_cast<size_t>(n) + 1));
    return r;
}

Series operator*(const Scalar& c, const Series& a) {
    Series r(a.order());
    for (int d = 0; d <= a.order(); ++d) r.c_[d] = c * a.c_[d];
    return r;
}

Series Series::derivative() const {
    if (order() < 1) fail(errc::invalid_argument, "derivative needs order >= 1");
    Series r(order() - 1);
    for (int d = 1; d <= order(); ++d) r.c_[d - 1] = Scalar(d) * c_[d];
    return r;
}

Series compose(const Series& f, const Series& g) {
    if (!g.coeff(0).is_zero()) fail(errc::non_vanishing_inner, "inner series must vanish at 0");
    const int n = std::min(f.order(), g.order());
    // Horner: r = (..(c_n * g + c_{n-1}) * g + ..) * g + c_0
    Series r(n);
    r.coeff_mut(0) = f.coeff(n);
    for (int d = n - 1; d >= 0; --d) {
        r = r * g;
        r.coeff_mut(0) += f.coeff(d);
    }
    return r;
}

Series comp_inverse(const Series& f) {
    if (!f.coeff(0).is_zero()) fail(errc::not_invertible, "series must vanish at 0");
    if (f.coeff(1).is_zero()) fail(errc::not_invertible, "linear coefficient is zero");
    const int n = f.order();
    // Powers f^m for m = 1..n; [t^d] f^m = 0 for d < m, so the linear system
    // sum_m g_m [t^d] f^m = delta_{d,1} is triangular with diagonal c1^d.
    std::vector<Series> pow;
    pow.reserve(static_cast<size_t>(n) + 1);
    pow.emplace_back(Series(n)); // unused slot for m = 0
    pow.push_back(f);
    for (int m = 2; m <= n; ++m) pow.push_back(pow.back() * f);

    std::vector<Scalar> g(static_cast<size_t>(n) + 1);
    const Scalar c1 = f.coeff(1);
    Scalar c1_pow = c1;
    g[1] = c1.inverse();
    for (int d = 2; d <= n; ++d) {
        c1_pow *= c1;
        Scalar acc;
        for (int m = 1; m < d; ++m) acc += g[m] * pow[m].coeff(d);
        g[d] = -acc / c1_pow;
    }
    return Series(std::move(g));
}

} // namespace holojet
