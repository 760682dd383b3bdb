#pragma once

#include "holojet/jet.hpp"

namespace holojet {

/// Jet of a formal vector field v(t) d/dt with v = sum_{m>=2} v_m t^m;
/// the generators of tangent-to-identity jets.
class VectorFieldJet {
public:
    explicit VectorFieldJet(int order);
    VectorFieldJet(int order, std::vector<Scalar> coeffs_from_degree_2);

    int order() const { return order_; }
    const Scalar& coeff(int m) const;
    void set_coeff(int m, Scalar v);

    /// v as a series (degrees 2..order populated).
    Series as_series() const;

    friend bool operator==(const VectorFieldJet& a, const VectorFieldJet& b) {
        return a.order_ == b.order_ && a.v_ == b.v_;
    }

private:
    int order_;
    std::vector<Scalar> v_; // v_[m-2] = coefficient of t^m
};

/// Time-s map of the flow of v: exp(s v d/dt) applied to t, exact at the
/// truncation order.
JetDiffeo exp_flow(const VectorFieldJet& v, const Scalar& time);

/// The unique v with exp_flow(v, 1) = f.  f must be tangent to identity
/// and different from the identity jet.
VectorFieldJet log_flow(const JetDiffeo& f);

/// True iff all pairwise commutators are the identity jet at the
/// truncation order.  Entries must be tangent to identity.
bool is_abelian(const JetTuple& tuple);

} // namespace holojet
