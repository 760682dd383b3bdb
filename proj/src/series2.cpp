#include "holojet/series2.hpp"

#include <algorithm>

#include "holojet/kernels.hpp"

namespace holojet {

namespace {

// Row arithmetic over R = Q(i)[x]/(x^{nx+1}).
using Row = std::vector<Scalar>;

Row row_mul(const Row& a, const Row& b, int nx) {
    Row out(static_cast<size_t>(nx) + 1);
    kernels::conv(std::span<const Scalar>(a.data(), a.size()),
                  std::span<const Scalar>(b.data(), b.size()),
                  std::span<Scalar>(out.data(), out.size()));
    return out;
}

Row row_inverse(const Row& a, int nx) {
    if (a.empty() || a[0].is_zero()) fail(errc::not_invertible, "x-polynomial is not a unit");
    Row inv(static_cast<size_t>(nx) + 1);
    inv[0] = a[0].inverse();
    for (int d = 1; d <= nx; ++d) {
        Scalar acc;
        for (int j = 1; j <= d && j < static_cast<int>(a.size()); ++j)
            acc += a[static_cast<size_t>(j)] * inv[static_cast<size_t>(d - j)];
        inv[static_cast<size_t>(d)] = -acc * inv[0];
    }
    return inv;
}

} // namespace

Series2::Series2(int ny, int nx) : ny_(ny), nx_(nx) {
    if (ny_ < 0 || nx_ < 0) fail(errc::invalid_argument, "negative truncation order");
    c_.resize(static_cast<size_t>(ny_ + 1) * static_cast<size_t>(nx_ + 1));
}

Series2 Series2::constant(const Scalar& c, int ny, int nx) {
    Series2 s(ny, nx);
    s.c_[0] = c;
    return s;
}

Series2 Series2::x(int ny, int nx) {
    if (nx < 1) fail(errc::invalid_argument, "grid too small for x");
    Series2 s(ny, nx);
    s.coeff_mut(0, 1) = Scalar(1);
    return s;
}

Series2 Series2::y(int ny, int nx) {
    if (ny < 1) fail(errc::invalid_argument, "grid too small for y");
    Series2 s(ny, nx);
    s.coeff_mut(1, 0) = Scalar(1);
    return s;
}

Series2 Series2::from_y_series(const Series& s, int ny, int nx) {
    Series2 out(ny, nx);
    for (int d = 0; d <= std::min(ny, s.order()); ++d) out.coeff_mut(d, 0) = s.coeff(d);
    return out;
}

Series2 Series2::from_x_poly(const std::vector<Scalar>& poly, int ny, int nx) {
    Series2 out(ny, nx);
    for (int d = 0; d < static_cast<int>(poly.size()) && d <= nx; ++d)
        out.coeff_mut(0, d) = poly[static_cast<size_t>(d)];
    return out;
}

const Scalar& Series2::coeff(int dy, int dx) const {
    static const Scalar zero;
    if (dy < 0 || dx < 0) fail(errc::invalid_argument, "negative degree");
    if (dy > ny_ || dx > nx_) return zero;
    return c_[idx(dy, dx)];
}

Scalar& Series2::coeff_mut(int dy, int dx) {
    if (dy < 0 || dy > ny_ || dx < 0 || dx > nx_)
        fail(errc::invalid_argument, "degree out of range");
    return c_[idx(dy, dx)];
}

std::vector<Scalar> Series2::row(int dy) const {
    if (dy < 0 || dy > ny_) fail(errc::invalid_argument, "row out of range");
    return std::vector<Scalar>(c_.begin() + static_cast<long>(idx(dy, 0)),
                               c_.begin() + static_cast<long>(idx(dy, 0)) + nx_ + 1);
}

void Series2::set_row(int dy, const std::vector<Scalar>& poly) {
    if (dy < 0 || dy > ny_) fail(errc::invalid_argument, "row out of range");
    for (int d = 0; d <= nx_; ++d)
        c_[idx(dy, d)] = d < static_cast<int>(poly.size()) ? poly[static_cast<size_t>(d)]
                                                           : Scalar();
}

bool Series2::is_zero() const {
    for (const Scalar& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

int Series2::y_valuation() const {
    for (int d = 0; d <= ny_; ++d)
        for (int j = 0; j <= nx_; ++j)
            if (!c_[idx(d, j)].is_zero()) return d;
    return ny_ + 1;
}

int Series2::x_valuation() const {
    for (int j = 0; j <= nx_; ++j)
        for (int d = 0; d <= ny_; ++d)
            if (!c_[idx(d, j)].is_zero()) return j;
    return nx_ + 1;
}

Series2 Series2::truncated(int new_ny, int new_nx) const {
    if (new_ny < 0 || new_ny > ny_ || new_nx < 0 || new_nx > nx_)
        fail(errc::invalid_argument, "truncation out of range");
    Series2 out(new_ny, new_nx);
    for (int d = 0; d <= new_ny; ++d)
        for (int j = 0; j <= new_nx; ++j) out.coeff_mut(d, j) = coeff(d, j);
    return out;
}

Series2 Series2::operator-() const {
    Series2 out(ny_, nx_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

Series2 operator+(const Series2& a, const Series2& b) {
    Series2 out(std::min(a.ny_, b.ny_), std::min(a.nx_, b.nx_));
    for (int d = 0; d <= out.ny_; ++d)
        for (int j = 0; j <= out.nx_; ++j) out.coeff_mut(d, j) = a.coeff(d, j) + b.coeff(d, j);
    return out;
}

Series2 operator-(const Series2& a, const Series2& b) {
    Series2 out(std::min(a.ny_, b.ny_), std::min(a.nx_, b.nx_));
    for (int d = 0; d <= out.ny_; ++d)
        for (int j = 0; j <= out.nx_; ++j) out.coeff_mut(d, j) = a.coeff(d, j) - b.coeff(d, j);
    return out;
}

Series2 operator*(const Series2& a, const Series2& b) {
    Series2 out(std::min(a.ny_, b.ny_), std::min(a.nx_, b.nx_));
    kernels::conv2(a.c_.data(), a.ny_, a.nx_, b.c_.data(), b.ny_, b.nx_, out.c_.data(), out.ny_,
                   out.nx_);
    return out;
}

Series2 operator*(const Scalar& c, const Series2& a) {
    Series2 out(a.ny_, a.nx_);
    for (size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = c * a.c_[i];
    return out;
}

bool operator==(const Series2& a, const Series2& b) {
    return a.ny_ == b.ny_ && a.nx_ == b.nx_ && a.c_ == b.c_;
}

Series2 Series2::dx() const {
    if (nx_ < 1) fail(errc::invalid_argument, "dx needs x-order >= 1");
    Series2 out(ny_, nx_ - 1);
    for (int d = 0; d <= ny_; ++d)
        for (int j = 1; j <= nx_; ++j) out.coeff_mut(d, j - 1) = Scalar(j) * coeff(d, j);
    return out;
}

Series2 Series2::dy() const {
    if (ny_ < 1) fail(errc::invalid_argument, "dy needs y-order >= 1");
    Series2 out(ny_ - 1, nx_);
    for (int d = 1; d <= ny_; ++d)
        for (int j = 0; j <= nx_; ++j) out.coeff_mut(d - 1, j) = Scalar(d) * coeff(d, j);
    return out;
}

Series2 Series2::div_y(int m) const {
    if (m < 0 || m > ny_) fail(errc::invalid_argument, "bad y-division order");
    for (int d = 0; d < m; ++d)
        for (int j = 0; j <= nx_; ++j)
            if (!coeff(d, j).is_zero())
                fail(errc::invalid_argument, "series not divisible by y^m");
    Series2 out(ny_ - m, nx_);
    for (int d = m; d <= ny_; ++d)
        for (int j = 0; j <= nx_; ++j) out.coeff_mut(d - m, j) = coeff(d, j);
    return out;
}

Series2 Series2::div_x(int r) const {
    if (r < 0 || r > nx_) fail(errc::invalid_argument, "bad x-division order");
    for (int j = 0; j < r; ++j)
        for (int d = 0; d <= ny_; ++d)
            if (!coeff(d, j).is_zero())
                fail(errc::invalid_argument, "series not divisible by x^r");
    Series2 out(ny_, nx_ - r);
    for (int d = 0; d <= ny_; ++d)
        for (int j = r; j <= nx_; ++j) out.coeff_mut(d, j - r) = coeff(d, j);
    return out;
}

Series2 Series2::transposed() const {
    Series2 out(nx_, ny_);
    for (int d = 0; d <= ny_; ++d)
        for (int j = 0; j <= nx_; ++j) out.coeff_mut(j, d) = coeff(d, j);
    return out;
}

Series2 compose_y(const Series2& f, const Series2& g) {
    if (g.y_valuation() < 1) fail(errc::non_vanishing_inner, "substituted series must be O(y)");
    const int ny = std::min(f.ny(), g.ny());
    const int nx = std::min(f.nx(), g.nx());
    // Horner in the y slot: result = (..(row_ny * g + row_{ny-1}) * g ..)
    Series2 acc(ny, nx);
    for (int d = std::min(f.ny(), ny); d >= 0; --d) {
        if (d < std::min(f.ny(), ny)) acc = acc * g.truncated(std::min(g.ny(), ny), nx);
        std::vector<Scalar> r = f.row(d);
        for (int j = 0; j <= nx && j < static_cast<int>(r.size()); ++j)
            acc.coeff_mut(0, j) += r[static_cast<size_t>(j)];
    }
    return acc;
}

Series eval_x(const Series2& f, const Series& tau) {
    if (!tau.coeff(0).is_zero())
        fail(errc::non_vanishing_inner, "evaluation point must be O(y)");
    const int n = std::min({f.ny(), f.nx(), tau.order()});
    // Horner in the x slot with x := tau(y); rows become y-series.
    Series acc(n);
    const Series tau_t = tau.truncated(n);
    for (int j = f.nx(); j >= 0; --j) {
        if (j < f.nx()) acc = acc * tau_t;
        for (int d = 0; d <= n; ++d) acc.coeff_mut(d) += f.coeff(d, j);
    }
    return acc;
}

Series2 substitute_x(const Series2& f, const Series2& u) {
    if (u.y_valuation() < 1) fail(errc::non_vanishing_inner, "x-shift must be O(y)");
    const int ny = std::min(f.ny(), u.ny());
    const int nx = std::min(f.nx(), u.nx());
    // X = x + u; Horner in the x slot.
    Series2 xmap = Series2::x(ny, nx) + u;
    Series2 acc(ny, nx);
    for (int j = f.nx(); j >= 0; --j) {
        if (j < f.nx()) acc = acc * xmap;
        for (int d = 0; d <= ny; ++d) acc.coeff_mut(d, 0) += f.coeff(d, j);
    }
    return acc;
}

Series2 y_inverse(const Series2& f) {
    const int ny = f.ny(), nx = f.nx();
    for (int j = 0; j <= nx; ++j)
        if (!f.coeff(0, j).is_zero())
            fail(errc::not_invertible, "series must vanish on {y=0}");
    if (f.coeff(1, 0).is_zero())
        fail(errc::not_invertible, "y-linear part must be a unit at the origin");

    // Triangular solve as for univariate series, with coefficients in the
    // ring of truncated x-polynomials.
    std::vector<Series2> pow;
    pow.reserve(static_cast<size_t>(ny) + 1);
    pow.emplace_back(Series2(ny, nx));
    pow.push_back(f);
    for (int m = 2; m <= ny; ++m) pow.push_back(pow.back() * f);

    std::vector<Row> g(static_cast<size_t>(ny) + 1, Row(static_cast<size_t>(nx) + 1));
    const Row c1 = f.row(1);
    const Row c1_inv = row_inverse(c1, nx);
    Row c1_pow_inv = c1_inv;
    g[1] = c1_inv;
    for (int d = 2; d <= ny; ++d) {
        c1_pow_inv = row_mul(c1_pow_inv, c1_inv, nx);
        Row acc(static_cast<size_t>(nx) + 1);
        for (int m = 1; m < d; ++m) {
            Row pm = pow[static_cast<size_t>(m)].row(d);
            Row term = row_mul(g[static_cast<size_t>(m)], pm, nx);
            for (int j = 0; j <= nx; ++j) acc[static_cast<size_t>(j)] += term[static_cast<size_t>(j)];
        }
        for (Scalar& v : acc) v = -v;
        g[static_cast<size_t>(d)] = row_mul(acc, c1_pow_inv, nx);
    }

    Series2 out(ny, nx);
    for (int d = 1; d <= ny; ++d) out.set_row(d, g[static_cast<size_t>(d)]);
    return out;
}

Series2 invert_unit(const Series2& f) {
    if (f.coeff(0, 0).is_zero()) fail(errc::not_invertible, "series is not a unit");
    const int ny = f.ny(), nx = f.nx();
    // Row-by-row in y over R: (f0 + h)^{-1} with h of positive y-valuation.
    Row f0_inv = row_inverse(f.row(0), nx);
    Series2 out(ny, nx);
    out.set_row(0, f0_inv);
    for (int d = 1; d <= ny; ++d) {
        // row_d(out) = -f0^{-1} * sum_{e=1..d} row_e(f) * row_{d-e}(out)
        Row acc(static_cast<size_t>(nx) + 1);
        for (int e = 1; e <= d; ++e) {
            Row term = row_mul(f.row(e), out.row(d - e), nx);
            for (int j = 0; j <= nx; ++j) acc[static_cast<size_t>(j)] += term[static_cast<size_t>(j)];
        }
        for (Scalar& v : acc) v = -v;
        out.set_row(d, row_mul(acc, f0_inv, nx));
    }
    return out;
}

bool is_reduced_equation(const Series2& f) {
    if (f.ny() < 1) return false;
    for (int j = 0; j <= f.nx(); ++j)
        if (!f.coeff(0, j).is_zero()) return false;
    return !f.coeff(1, 0).is_zero();
}

LocalDiffeo2::LocalDiffeo2(Series2 xmap, Series2 ymap)
    : xmap_(std::move(xmap)), ymap_(std::move(ymap)) {
    if (xmap_.ny() != ymap_.ny() || xmap_.nx() != ymap_.nx())
        fail(errc::invalid_argument, "xmap and ymap must share one grid");
    for (int j = 0; j <= xmap_.nx(); ++j) {
        const Scalar expected = j == 1 ? Scalar(1) : Scalar();
        if (xmap_.coeff(0, j) != expected)
            fail(errc::invalid_argument, "xmap must equal x on the curve");
        if (!ymap_.coeff(0, j).is_zero())
            fail(errc::invalid_argument, "ymap must vanish on the curve");
    }
    if (ymap_.coeff(1, 0).is_zero())
        fail(errc::not_invertible, "ymap's y-linear part must be a unit at the origin");
}

Series2 LocalDiffeo2::apply(const Series2& f) const {
    const int ny = std::min(f.ny(), xmap_.ny());
    const int nx = std::min(f.nx(), xmap_.nx());
    const Series2 xm = xmap_.truncated(ny, nx);
    const Series2 ym = ymap_.truncated(ny, nx);
    // Precomputed xmap powers; Horner over y-rows.
    std::vector<Series2> xp;
    xp.reserve(static_cast<size_t>(f.nx()) + 1);
    xp.push_back(Series2::constant(Scalar(1), ny, nx));
    for (int j = 1; j <= f.nx(); ++j) xp.push_back(xp.back() * xm);

    Series2 acc(ny, nx);
    for (int d = f.ny(); d >= 0; --d) {
        if (d < f.ny()) acc = acc * ym;
        for (int j = 0; j <= f.nx(); ++j) {
            const Scalar& c = f.coeff(d, j);
            if (!c.is_zero()) acc = acc + c * xp[static_cast<size_t>(j)];
        }
    }
    return acc;
}

} // namespace holojet
