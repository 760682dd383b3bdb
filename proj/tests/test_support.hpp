#pragma once

#include <cstdint>
#include <vector>

#include "holojet/flow.hpp"
#include "holojet/jet.hpp"
#include "holojet/scalar.hpp"
#include "holojet/series.hpp"

namespace hjtest {

// splitmix64: deterministic across platforms, unlike the std distributions.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // inclusive bounds
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    bool chance(int percent) { return uniform(0, 99) < percent; }
};

inline holojet::Rational small_rational(Rng& rng, bool nonzero = false) {
    long num = rng.uniform(-4, 4);
    if (nonzero && num == 0) num = 1;
    long den = rng.uniform(1, 3);
    holojet::Rational q(num, den);
    q.canonicalize();
    return q;
}

inline holojet::Scalar small_scalar(Rng& rng, bool nonzero = false) {
    holojet::Rational re = small_rational(rng);
    holojet::Rational im = rng.chance(40) ? small_rational(rng) : holojet::Rational(0);
    if (nonzero && re == 0 && im == 0) re = 1;
    return holojet::Scalar(re, im);
}

/// Tangent-to-identity jet with tangency order exactly k.
inline holojet::JetDiffeo random_ti_jet(Rng& rng, int order, int k = 1) {
    std::vector<holojet::Scalar> c(static_cast<size_t>(order));
    c[0] = holojet::Scalar(1);
    for (int d = k + 1; d <= order; ++d) c[static_cast<size_t>(d) - 1] = small_scalar(rng);
    if (c[static_cast<size_t>(k)].is_zero()) c[static_cast<size_t>(k)] = holojet::Scalar(1);
    return holojet::JetDiffeo::from_degree_one(c);
}

/// Invertible jet with random nonzero linear part.
inline holojet::JetDiffeo random_invertible_jet(Rng& rng, int order) {
    std::vector<holojet::Scalar> c(static_cast<size_t>(order));
    c[0] = small_scalar(rng, true);
    for (int d = 2; d <= order; ++d) c[static_cast<size_t>(d) - 1] = small_scalar(rng);
    return holojet::JetDiffeo::from_degree_one(c);
}

inline holojet::Series random_series(Rng& rng, int order, bool zero_constant = true) {
    std::vector<holojet::Scalar> c(static_cast<size_t>(order) + 1);
    for (size_t d = zero_constant ? 1 : 0; d < c.size(); ++d) c[d] = small_scalar(rng);
    return holojet::Series(std::move(c));
}

inline holojet::VectorFieldJet random_field(Rng& rng, int order, int k = 1) {
    holojet::VectorFieldJet v(order);
    for (int m = k + 1; m <= order; ++m) v.set_coeff(m, small_scalar(rng));
    if (v.coeff(k + 1).is_zero()) v.set_coeff(k + 1, holojet::Scalar(1));
    return v;
}

} // namespace hjtest
