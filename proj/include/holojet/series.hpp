#pragma once

#include <vector>

#include "holojet/scalar.hpp"

namespace holojet {

/// Univariate truncated power series over Q(i): coefficients of degrees
/// 0..order(), everything above the order discarded.  Immutable value
/// semantics; mixed-order arithmetic truncates to the minimum order.
class Series {
public:
    /// Zero series of the given truncation order (order >= 0).
    explicit Series(int order) : c_(static_cast<size_t>(check_order(order)) + 1) {}

    /// Coefficients of degrees 0..order; the vector size fixes the order.
    explicit Series(std::vector<Scalar> coeffs);

    /// t, the identity series.
    static Series identity(int order);

    /// Series with given coefficients for degrees 1..N and zero constant
    /// term (the shape used by all file formats).
    static Series from_degree_one(const std::vector<Scalar>& coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Scalar& coeff(int degree) const;
    Scalar& coeff_mut(int degree);

    const std::vector<Scalar>& coeffs() const { return c_; }

    bool is_zero() const;

    /// Lowest degree with nonzero coefficient, or order()+1 if zero.
    int valuation() const;

    Series truncated(int new_order) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Scalar& c, const Series& a);
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// d/dt; the result is known one order lower.
    Series derivative() const;

private:
    static int check_order(int order);

    std::vector<Scalar> c_;
};

/// f(g(t)) mod t^(N+1), N = min(order f, order g).  g must have zero
/// constant term.
Series compose(const Series& f, const Series& g);

/// Compositional inverse: g with f(g(t)) = g(f(t)) = t at the truncation
/// order.  Requires f(0) = 0 and f'(0) != 0.
Series comp_inverse(const Series& f);

} // namespace holojet
