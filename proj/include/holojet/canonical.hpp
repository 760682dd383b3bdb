#pragma once

#include "holojet/jet.hpp"

namespace holojet {

/// Result of normalizing a tangent-to-identity jet by tangent-to-identity
/// conjugacy: psi o f o psi^{-1} = t + a t^{k+1} + b t^{2k+1} exactly at
/// the truncation order.  (k, a, b) is a complete invariant for this
/// action at order N.
struct CanonicalFormTI {
    int k;
    Scalar a;
    Scalar b;
    JetDiffeo psi;
    JetDiffeo normal_form;
};

/// Requires f tangent to identity, f != id, and 2k+1 <= order.
CanonicalFormTI canonical_form_ti(const JetDiffeo& f);

} // namespace holojet
