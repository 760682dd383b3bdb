#include "holojet/jet.hpp"

namespace holojet {

JetDiffeo::JetDiffeo(Series s) : s_(std::move(s)) {
    if (s_.order() < 1) fail(errc::invalid_argument, "jet needs order >= 1");
    if (!s_.coeff(0).is_zero()) fail(errc::invalid_argument, "jet must fix 0");
    if (s_.coeff(1).is_zero()) fail(errc::not_invertible, "jet has zero linear part");
}

JetDiffeo JetDiffeo::identity(int order) { return JetDiffeo(Series::identity(order)); }

JetDiffeo JetDiffeo::from_degree_one(const std::vector<Scalar>& coeffs) {
    return JetDiffeo(Series::from_degree_one(coeffs));
}

bool JetDiffeo::is_identity() const {
    if (!s_.coeff(1).is_one()) return false;
    for (int d = 2; d <= order(); ++d)
        if (!s_.coeff(d).is_zero()) return false;
    return true;
}

JetDiffeo compose(const JetDiffeo& f, const JetDiffeo& g) {
    return JetDiffeo(compose(f.series(), g.series()));
}

JetDiffeo conjugate(const JetDiffeo& psi, const JetDiffeo& phi) {
    return compose(compose(psi, phi), psi.inverse());
}

JetDiffeo commutator(const JetDiffeo& f, const JetDiffeo& g) {
    return compose(compose(f, g), compose(f.inverse(), g.inverse()));
}

std::optional<int> tangency_order(const JetDiffeo& f) {
    if (!f.tangent_to_identity())
        fail(errc::not_tangent_to_identity, "tangency order needs linear part 1");
    for (int d = 2; d <= f.order(); ++d)
        if (!f.coeff(d).is_zero()) return d - 1;
    return std::nullopt;
}

JetTuple::JetTuple(std::vector<JetDiffeo> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) fail(errc::invalid_argument, "tuple must be nonempty");
    for (const JetDiffeo& e : entries_)
        if (e.order() != entries_.front().order())
            fail(errc::invalid_argument, "tuple entries must share one truncation order");
}

bool JetTuple::all_tangent_to_identity() const {
    for (const JetDiffeo& e : entries_)
        if (!e.tangent_to_identity()) return false;
    return true;
}

bool JetTuple::all_identity() const {
    for (const JetDiffeo& e : entries_)
        if (!e.is_identity()) return false;
    return true;
}

JetTuple JetTuple::conjugated(const JetDiffeo& psi) const {
    std::vector<JetDiffeo> out;
    out.reserve(entries_.size());
    const JetDiffeo inv = psi.inverse();
    for (const JetDiffeo& e : entries_) out.push_back(compose(compose(psi, e), inv));
    return JetTuple(std::move(out));
}

JetTuple concat(const JetTuple& a, const JetTuple& b) {
    if (a.order() != b.order()) fail(errc::invalid_argument, "order mismatch in concat");
    std::vector<JetDiffeo> out = a.entries();
    out.insert(out.end(), b.entries().begin(), b.entries().end());
    return JetTuple(std::move(out));
}

} // namespace holojet
