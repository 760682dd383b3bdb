#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holojet/errors.hpp"

namespace holojet {

using Rational = mpq_class;

/// Exact complex rational number, the coefficient field of the whole
/// project.  All arithmetic is exact; values are kept in canonical form
/// (reduced fractions) by the underlying mpq representation.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(const Rational& re) : re_(re), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    /// |z|^2 = re^2 + im^2, an exact rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
        Rational n = norm2();
        return Scalar(re_ / n, -im_ / n);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Lexicographic order on (re, im); used wherever a deterministic
    /// enumeration of scalars is required.
    static bool lex_less(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Canonical text form: "p/q", "re+im*i", "re-im*i" or "im*i".
    std::string str() const;

private:
    Rational re_, im_;
};

/// Parses the scalar text syntax.  Throws calc_error(parse_error).
Scalar parse_scalar(std::string_view text);

/// Exact rational square root, if one exists.
std::optional<Rational> rational_sqrt(const Rational& q);

/// All s in Q(i) with s^2 = q, sorted lexicographically.
std::vector<Scalar> square_roots(const Scalar& q);

/// All s in Q(i) with s^k = q (q != 0, k >= 1), sorted lexicographically.
/// Complete over Q(i): returns an empty vector only when no root exists
/// in the field.
std::vector<Scalar> kth_roots(const Scalar& q, int k);

} // namespace holojet
