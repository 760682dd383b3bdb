#pragma once

#include <optional>
#include <vector>

#include "holojet/series.hpp"

namespace holojet {

/// Invertible jet of a diffeomorphism of (C,0): a truncated series with
/// zero constant term and nonzero linear coefficient.  Group law is
/// composition.
class JetDiffeo {
public:
    explicit JetDiffeo(Series s);

    static JetDiffeo identity(int order);

    /// Coefficients for degrees 1..N.
    static JetDiffeo from_degree_one(const std::vector<Scalar>& coeffs);

    int order() const { return s_.order(); }
    const Series& series() const { return s_; }
    const Scalar& coeff(int degree) const { return s_.coeff(degree); }
    const Scalar& linear() const { return s_.coeff(1); }

    bool tangent_to_identity() const { return s_.coeff(1).is_one(); }
    bool is_identity() const;

    JetDiffeo inverse() const { return JetDiffeo(comp_inverse(s_)); }
    JetDiffeo truncated(int new_order) const { return JetDiffeo(s_.truncated(new_order)); }

    friend bool operator==(const JetDiffeo& a, const JetDiffeo& b) { return a.s_ == b.s_; }
    friend bool operator!=(const JetDiffeo& a, const JetDiffeo& b) { return !(a == b); }

private:
    Series s_;
};

/// f after g: (f o g)(t) = f(g(t)).
JetDiffeo compose(const JetDiffeo& f, const JetDiffeo& g);

/// psi o phi o psi^{-1}.
JetDiffeo conjugate(const JetDiffeo& psi, const JetDiffeo& phi);

/// f o g o f^{-1} o g^{-1}.
JetDiffeo commutator(const JetDiffeo& f, const JetDiffeo& g);

/// For f tangent to identity: the largest k with f(t) = t mod t^{k+1}.
/// nullopt means f is the identity at this truncation order.
std::optional<int> tangency_order(const JetDiffeo& f);

/// Nonempty ordered tuple of jets of one common truncation order.
class JetTuple {
public:
    explicit JetTuple(std::vector<JetDiffeo> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    int order() const { return entries_.front().order(); }
    const JetDiffeo& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<JetDiffeo>& entries() const { return entries_; }

    bool all_tangent_to_identity() const;
    bool all_identity() const;

    /// Entrywise conjugation by psi.
    JetTuple conjugated(const JetDiffeo& psi) const;

    friend bool operator==(const JetTuple& a, const JetTuple& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const JetTuple& a, const JetTuple& b) { return !(a == b); }

private:
    std::vector<JetDiffeo> entries_;
};

/// Concatenates tuples (orders must agree).
JetTuple concat(const JetTuple& a, const JetTuple& b);

} // namespace holojet
