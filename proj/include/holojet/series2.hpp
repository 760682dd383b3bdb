#pragma once

#include "holojet/series.hpp"

namespace holojet {

/// Bivariate truncated series in (x, y): for each y-degree 0..ny a
/// polynomial in x of degree <= nx.  Ring operations truncate to the
/// componentwise minimum grid; derivatives shrink the corresponding
/// order by one.
///
/// Truncation in x is a quotient-ring operation, so everything staying
/// inside "series in y over Q(i)[x]/(x^{nx+1})" is exact.  Substituting
/// into the x slot is not: unseen x-degrees above nx re-enter at higher
/// y-degrees.  The evaluation and substitution entry points state the
/// region on which their result is trustworthy.
class Series2 {
public:
    Series2(int ny, int nx);

    static Series2 constant(const Scalar& c, int ny, int nx);
    static Series2 x(int ny, int nx);
    static Series2 y(int ny, int nx);

    /// Embeds a univariate series in y.
    static Series2 from_y_series(const Series& s, int ny, int nx);

    /// Embeds a polynomial in x (coefficients of degrees 0..deg).
    static Series2 from_x_poly(const std::vector<Scalar>& poly, int ny, int nx);

    int ny() const { return ny_; }
    int nx() const { return nx_; }

    const Scalar& coeff(int dy, int dx) const;
    Scalar& coeff_mut(int dy, int dx);

    /// Row dy as a polynomial in x (degrees 0..nx).
    std::vector<Scalar> row(int dy) const;
    void set_row(int dy, const std::vector<Scalar>& poly);

    bool is_zero() const;

    /// Lowest y-degree with a nonzero row; ny()+1 if zero.
    int y_valuation() const;
    /// Lowest x-degree with a nonzero column; nx()+1 if zero.
    int x_valuation() const;

    Series2 truncated(int new_ny, int new_nx) const;

    Series2 operator-() const;
    friend Series2 operator+(const Series2& a, const Series2& b);
    friend Series2 operator-(const Series2& a, const Series2& b);
    friend Series2 operator*(const Series2& a, const Series2& b);
    friend Series2 operator*(const Scalar& c, const Series2& a);
    friend bool operator==(const Series2& a, const Series2& b);
    friend bool operator!=(const Series2& a, const Series2& b) { return !(a == b); }

    Series2 dx() const; // (ny, nx-1)
    Series2 dy() const; // (ny-1, nx)

    /// Exact division by y^m / x^r; fails if lower parts are nonzero.
    Series2 div_y(int m) const;
    Series2 div_x(int r) const;

    /// Swaps the roles of x and y.
    Series2 transposed() const;

    const Scalar* data() const { return c_.data(); }

private:
    size_t idx(int dy, int dx) const {
        return static_cast<size_t>(dy) * (static_cast<size_t>(nx_) + 1) +
               static_cast<size_t>(dx);
    }

    int ny_, nx_;
    std::vector<Scalar> c_;
};

/// F(x, g(x,y)) for g with y-valuation >= 1.  Exact on the minimum grid.
Series2 compose_y(const Series2& f, const Series2& g);

/// F(tau(y), y) for tau with y-valuation >= 1.  The result is a
/// univariate series in y, exact through degree min(F.ny, F.nx, tau order).
Series eval_x(const Series2& f, const Series& tau);

/// F(x + u, y) for u with y-valuation >= 1.  Row d of the result is exact
/// to x-degree nx - d when F carries truncated x-data; exact everywhere
/// when F and u are polynomials inside their grids.
Series2 substitute_x(const Series2& f, const Series2& u);

/// Solves F(x, Y(x,y)) = y for Y; needs row0(F) = 0 and row1(F) a unit
/// at x = 0.
Series2 y_inverse(const Series2& f);

/// 1/F for F with F(0,0) != 0.
Series2 invert_unit(const Series2& f);

/// True when F is a reduced equation of {y = 0}: no y-free part and a
/// y-linear part invertible at the origin.
bool is_reduced_equation(const Series2& f);

/// Jet of a plane map fixing the curve {y=0} pointwise:
/// xmap = x + O(y), ymap = y * unit.
class LocalDiffeo2 {
public:
    LocalDiffeo2(Series2 xmap, Series2 ymap);

    const Series2& xmap() const { return xmap_; }
    const Series2& ymap() const { return ymap_; }

    /// F o phi, the pushforward of coordinates: substitutes both slots.
    /// Exact when everything involved is polynomial inside the grids.
    Series2 apply(const Series2& f) const;

private:
    Series2 xmap_, ymap_;
};

} // namespace holojet
