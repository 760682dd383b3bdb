#include "holojet/flow.hpp"

namespace holojet {

VectorFieldJet::VectorFieldJet(int order) : order_(order) {
    if (order_ < 1) fail(errc::invalid_argument, "vector field jet needs order >= 1");
    if (order_ >= 2) v_.resize(static_cast<size_t>(order_) - 1);
}

VectorFieldJet::VectorFieldJet(int order, std::vector<Scalar> coeffs_from_degree_2)
    : VectorFieldJet(order) {
    if (coeffs_from_degree_2.size() != v_.size())
        fail(errc::invalid_argument, "vector field coefficient count must be order-1");
    v_ = std::move(coeffs_from_degree_2);
}

const Scalar& VectorFieldJet::coeff(int m) const {
    static const Scalar zero;
    if (m < 2 || m > order_) return zero;
    return v_[static_cast<size_t>(m) - 2];
}

void VectorFieldJet::set_coeff(int m, Scalar v) {
    if (m < 2 || m > order_) fail(errc::invalid_argument, "vector field degree out of range");
    v_[static_cast<size_t>(m) - 2] = std::move(v);
}

Series VectorFieldJet::as_series() const {
    Series s(order_);
    for (int m = 2; m <= order_; ++m) s.coeff_mut(m) = coeff(m);
    return s;
}

namespace {

// Re-expresses a series one order higher with zero top coefficient.
// Only valid when the padded coefficient cannot reach the truncation
// order of the surrounding computation.
Series lift(const Series& s, int order) {
    Series out(order);
    for (int d = 0; d <= std::min(s.order(), order); ++d) out.coeff_mut(d) = s.coeff(d);
    return out;
}

// t^j * s at the given order.
Series shift(const Series& s, int j, int order) {
    Series out(order);
    for (int d = 0; d + j <= order && d <= s.order(); ++d)
        out.coeff_mut(d + j) = s.coeff(d);
    return out;
}

} // namespace

JetDiffeo exp_flow(const VectorFieldJet& v, const Scalar& time) {
    const int n = v.order();
    const Series vs = v.as_series();
    // Lie series: exp(s v d/dt) t = sum_m s^m/m! (v d/dt)^m t.  Each
    // application of v d/dt raises the valuation, so the sum is finite at
    // truncation order n.
    Series result = Series::identity(n);
    Series term = Series::identity(n);
    Scalar factor(1);
    for (int m = 1; m <= n; ++m) {
        if (term.is_zero()) break;
        term = vs * lift(term.derivative(), n);
        factor = factor * time / Scalar(m);
        result = result + factor * term;
    }
    return JetDiffeo(result);
}

VectorFieldJet log_flow(const JetDiffeo& f) {
    const auto k_opt = tangency_order(f);
    if (!k_opt) fail(errc::identity_has_no_leading_term, "identity jet has no generator");
    const int k = *k_opt;
    const int n = f.order();
    const Scalar a = f.coeff(k + 1);

    VectorFieldJet v(n);
    v.set_coeff(k + 1, a);

    // Equivariance stage: the generator satisfies v(f(t)) = f'(t) v(t).
    // Contribution of v_m to the residual starts at degree m+k with the
    // coefficient (m-k-1) a, so degrees up to n pin v_m for m <= n-k.
    const Series fs = f.series();
    const Series fp = lift(fs.derivative(), n);
    const int m_max_equivariance = n - k;
    std::vector<Series> pow;
    pow.reserve(static_cast<size_t>(std::max(0, m_max_equivariance)) + 1);
    pow.emplace_back(Series(n));
    pow.push_back(fs);
    for (int j = 2; j <= m_max_equivariance; ++j) pow.push_back(pow.back() * fs);

    // L_j = f^j - f' t^j, the coefficient of v_j in the residual.
    auto l_term = [&](int j) {
        return pow[static_cast<size_t>(j)] - fp * shift(Series::identity(n), j - 1, n);
    };

    Series residual(n);
    if (k + 1 <= m_max_equivariance) residual = a * l_term(k + 1);
    for (int m = k + 2; m <= m_max_equivariance; ++m) {
        Scalar c = -residual.coeff(m + k) / (Scalar(m - k - 1) * a);
        if (!c.is_zero()) {
            v.set_coeff(m, c);
            residual = residual + c * l_term(m);
        }
    }

    // Top orders not reachable by the equivariance equation at this
    // truncation: match exp(v) directly, one degree at a time.
    for (int m = std::max(k + 2, m_max_equivariance + 1); m <= n; ++m) {
        JetDiffeo e = exp_flow(v, Scalar(1));
        Scalar delta = f.coeff(m) - e.coeff(m);
        if (!delta.is_zero()) v.set_coeff(m, v.coeff(m) + delta);
    }
    return v;
}

bool is_abelian(const JetTuple& tuple) {
    if (!tuple.all_tangent_to_identity())
        fail(errc::not_tangent_to_identity, "abelianity test needs tangent-to-identity entries");
    for (int i = 0; i < tuple.size(); ++i)
        for (int j = i + 1; j < tuple.size(); ++j)
            if (!commutator(tuple[i], tuple[j]).is_identity()) return false;
    return true;
}

} // namespace holojet
