#include "holojet/canonical.hpp"

namespace holojet {

CanonicalFormTI canonical_form_ti(const JetDiffeo& f) {
    const auto k_opt = tangency_order(f);
    if (!k_opt) fail(errc::identity_has_no_leading_term, "identity jet has no canonical form");
    const int k = *k_opt;
    const int n = f.order();
    if (2 * k + 1 > n)
        fail(errc::order_too_low_for_normal_form, "need 2k+1 <= truncation order");
    const Scalar a = f.coeff(k + 1);

    // Conjugation by t + c t^j changes degree j+k by c (j-k-1) a and
    // nothing below, so every degree above k+1 except 2k+1 can be
    // cleared, lowest first.
    JetDiffeo g = f;
    JetDiffeo psi = JetDiffeo::identity(n);
    for (int m = k + 2; m <= n; ++m) {
        if (m == 2 * k + 1) continue;
        const Scalar& cm = g.coeff(m);
        if (cm.is_zero()) continue;
        const int j = m - k;
        Scalar c = -cm / (Scalar(j - k - 1) * a);
        Series chi_s = Series::identity(n);
        chi_s.coeff_mut(j) = c;
        JetDiffeo chi(chi_s);
        g = conjugate(chi, g);
        psi = compose(chi, psi);
    }

    CanonicalFormTI out{k, a, g.coeff(2 * k + 1), psi, g};
    return out;
}

} // namespace holojet
