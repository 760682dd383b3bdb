#pragma once

#include "holojet/jet.hpp"
#include "holojet/series2.hpp"

namespace holojet {

/// Tangency data of a pair of reduced equations of {y=0}:
/// G = F + a(x) F^{k+1} mod F^{k+2}.
struct WedgeTangency {
    int k = 1;
    std::vector<Scalar> a; // polynomial in x
};

WedgeTangency wedge_tangency(const Series2& f, const Series2& g);

/// Transverse local model: the unique coordinate change phi fixing the
/// curve pointwise with (F,G) o phi = (y, y + a(x) y^{k+1}).  Requires
/// the tangency divisor to be (k+1) times the curve near the center,
/// i.e. da nonvanishing at x = 0.
struct TransverseNormalForm {
    int k;
    LocalDiffeo2 phi;
    std::vector<Scalar> a;
    int free_parameters; // number of underdetermined solver steps; always 0
};

TransverseNormalForm normalize_transverse(const Series2& f, const Series2& g);

/// Tangential local model at a simple zero of the 1-form: the unique phi
/// with (F,G) o phi = (y, b(y) + a(x) y^{k+1}), a vanishing to order
/// exactly two.  b is determined by G = b(F) on the transversal tangency
/// curve and is the holonomy transport germ.
struct TangentialNormalForm {
    int k;
    LocalDiffeo2 phi;
    JetDiffeo b;
    std::vector<Scalar> a;
    int free_parameters;
};

TangentialNormalForm normalize_tangential(const Series2& f, const Series2& g);

} // namespace holojet
