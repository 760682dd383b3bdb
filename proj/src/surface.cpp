#include "holojet/surface.hpp"

#include <algorithm>

namespace holojet {

namespace {

// Exact determinant by Laplace expansion; the matrices here are g x g
// with g small.
Rational rational_det(const std::vector<std::vector<Rational>>& m) {
    const size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational det(0);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rational>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][j] * rational_det(minor);
        if (j % 2) term = -term;
        det += term;
    }
    return det;
}

} // namespace

SurfaceModel::SurfaceModel(int genus, Matrix tau, std::vector<std::string> zero_labels)
    : genus_(genus), tau_(std::move(tau)), zero_labels_(std::move(zero_labels)) {
    if (genus_ < 2) fail(errc::invalid_argument, "genus must be >= 2");
    const size_t g = static_cast<size_t>(genus_);
    if (tau_.size() != g) fail(errc::invalid_argument, "tau must be g x g");
    for (const auto& row : tau_)
        if (row.size() != g) fail(errc::invalid_argument, "tau must be g x g");
    for (size_t i = 0; i < g; ++i)
        for (size_t j = i + 1; j < g; ++j)
            if (tau_[i][j] != tau_[j][i]) fail(errc::invalid_argument, "tau must be symmetric");

    // Im tau positive definite: all leading principal minors strictly
    // positive, in exact rational arithmetic.
    for (size_t lead = 1; lead <= g; ++lead) {
        std::vector<std::vector<Rational>> im(lead, std::vector<Rational>(lead));
        for (size_t i = 0; i < lead; ++i)
            for (size_t j = 0; j < lead; ++j) im[i][j] = tau_[i][j].im();
        if (rational_det(im) <= 0)
            fail(errc::invalid_argument, "Im(tau) must be positive definite");
    }

    if (zero_labels_.empty()) {
        for (int p = 1; p <= 2 * genus_ - 2; ++p)
            zero_labels_.push_back("p" + std::to_string(p));
    }
    if (zero_labels_.size() != static_cast<size_t>(2 * genus_ - 2))
        fail(errc::invalid_argument, "expected 2g-2 zero labels");
}

std::vector<Scalar> SurfaceModel::tau_apply(const std::vector<Scalar>& v) const {
    const size_t g = static_cast<size_t>(genus_);
    if (v.size() != g) fail(errc::invalid_argument, "vector size must be g");
    std::vector<Scalar> out(g);
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j) out[i] += tau_[i][j] * v[j];
    return out;
}

LoopWord::LoopWord(std::vector<LoopLetter> letters) : letters_(std::move(letters)) {
    for (const LoopLetter& l : letters_)
        if (l.index < 1) fail(errc::invalid_argument, "generator index must be >= 1");
    for (size_t i = 0; i + 1 < letters_.size(); ++i) {
        const LoopLetter& a = letters_[i];
        const LoopLetter& b = letters_[i + 1];
        if (a.beta == b.beta && a.index == b.index && a.inverse != b.inverse)
            fail(errc::invalid_argument, "loop word must be reduced");
    }
}

void Nerve::validate() const {
    if (vertex_count < 1) fail(errc::invalid_argument, "nerve needs at least one vertex");
    for (const Edge& e : edges)
        if (e.src < 0 || e.src >= vertex_count || e.dst < 0 || e.dst >= vertex_count)
            fail(errc::invalid_argument, "edge endpoint out of range");
    auto edge_ok = [&](int id) { return id >= 0 && id < static_cast<int>(edges.size()); };
    for (const Triangle& t : triangles) {
        if (!edge_ok(t.ij) || !edge_ok(t.jk) || !edge_ok(t.ik))
            fail(errc::invalid_argument, "triangle edge id out of range");
        const Edge& ij = edges[static_cast<size_t>(t.ij)];
        const Edge& jk = edges[static_cast<size_t>(t.jk)];
        const Edge& ik = edges[static_cast<size_t>(t.ik)];
        if (ij.dst != jk.src || ij.src != ik.src || jk.dst != ik.dst)
            fail(errc::invalid_argument, "triangle endpoints do not match");
    }
}

NerveCocycle::NerveCocycle(Nerve nerve, std::vector<Scalar> edge_values)
    : nerve_(std::move(nerve)), values_(std::move(edge_values)) {
    nerve_.validate();
    if (values_.size() != nerve_.edges.size())
        fail(errc::invalid_argument, "one value per oriented edge required");
    for (const Nerve::Triangle& t : nerve_.triangles) {
        if (values_[static_cast<size_t>(t.ik)] !=
            values_[static_cast<size_t>(t.ij)] + values_[static_cast<size_t>(t.jk)])
            fail(errc::invalid_argument, "cocycle condition fails on a triangle");
    }
}

NerveCocycle operator+(const NerveCocycle& a, const NerveCocycle& b) {
    if (a.nerve_.edges.size() != b.nerve_.edges.size() ||
        a.nerve_.vertex_count != b.nerve_.vertex_count)
        fail(errc::invalid_argument, "cocycles live on different nerves");
    std::vector<Scalar> sum(a.values_.size());
    for (size_t e = 0; e < sum.size(); ++e) sum[e] = a.values_[e] + b.values_[e];
    return NerveCocycle(a.nerve_, std::move(sum));
}

NerveCocycle coboundary(const Nerve& nerve, const std::vector<Scalar>& potential) {
    nerve.validate();
    if (potential.size() != static_cast<size_t>(nerve.vertex_count))
        fail(errc::invalid_argument, "one potential value per vertex required");
    std::vector<Scalar> vals(nerve.edges.size());
    for (size_t e = 0; e < vals.size(); ++e) {
        const Nerve::Edge& edge = nerve.edges[e];
        vals[e] = potential[static_cast<size_t>(edge.dst)] -
                  potential[static_cast<size_t>(edge.src)];
    }
    return NerveCocycle(nerve, std::move(vals));
}

namespace {

int step_src(const Nerve& nerve, const WalkStep& s) {
    const Nerve::Edge& e = nerve.edges[static_cast<size_t>(s.edge)];
    return s.forward ? e.src : e.dst;
}
int step_dst(const Nerve& nerve, const WalkStep& s) {
    const Nerve::Edge& e = nerve.edges[static_cast<size_t>(s.edge)];
    return s.forward ? e.dst : e.src;
}

} // namespace

void validate_walk(const Nerve& nerve, const EdgeWalk& walk) {
    if (walk.empty()) fail(errc::walk_not_in_nerve, "empty walk");
    for (const WalkStep& s : walk)
        if (s.edge < 0 || s.edge >= static_cast<int>(nerve.edges.size()))
            fail(errc::walk_not_in_nerve, "edge id out of range");
    for (size_t p = 0; p + 1 < walk.size(); ++p)
        if (step_dst(nerve, walk[p]) != step_src(nerve, walk[p + 1]))
            fail(errc::walk_not_in_nerve, "walk is not contiguous");
    if (step_dst(nerve, walk.back()) != step_src(nerve, walk.front()))
        fail(errc::walk_not_in_nerve, "walk is not closed");
}

EdgeWalk walk_from_vertices(const Nerve& nerve, const std::vector<int>& vertices) {
    nerve.validate();
    if (vertices.size() < 2 || vertices.front() != vertices.back())
        fail(errc::walk_not_in_nerve, "vertex sequence must be closed");
    EdgeWalk walk;
    for (size_t p = 0; p + 1 < vertices.size(); ++p) {
        const int u = vertices[p], v = vertices[p + 1];
        int found = -1;
        bool forward = true;
        int count = 0;
        for (size_t e = 0; e < nerve.edges.size(); ++e) {
            const Nerve::Edge& edge = nerve.edges[e];
            if (edge.src == u && edge.dst == v) {
                found = static_cast<int>(e);
                forward = true;
                ++count;
            } else if (edge.src == v && edge.dst == u) {
                found = static_cast<int>(e);
                forward = false;
                ++count;
            }
        }
        if (count == 0)
            fail(errc::walk_not_in_nerve, "consecutive pair is not an edge of the nerve");
        if (count > 1) fail(errc::ambiguous_edge, "parallel edges: use an edge walk instead");
        walk.push_back(WalkStep{found, forward});
    }
    return walk;
}

Scalar period(const NerveCocycle& cocycle, const EdgeWalk& walk) {
    validate_walk(cocycle.nerve(), walk);
    Scalar sum;
    for (const WalkStep& s : walk) {
        const Scalar& v = cocycle.values()[static_cast<size_t>(s.edge)];
        if (s.forward)
            sum += v;
        else
            sum -= v;
    }
    return sum;
}

Scalar period(const NerveCocycle& cocycle, const std::vector<int>& closed_vertex_walk) {
    return period(cocycle, walk_from_vertices(cocycle.nerve(), closed_vertex_walk));
}

std::vector<Scalar> period_map(const NerveCocycle& cocycle, const std::vector<EdgeWalk>& basis) {
    std::vector<Scalar> out;
    out.reserve(basis.size());
    for (const EdgeWalk& w : basis) out.push_back(period(cocycle, w));
    return out;
}

StandardNerve polygon_nerve(int genus) {
    if (genus < 2) fail(errc::invalid_argument, "genus must be >= 2");
    // Hub vertex 0; one vertex per identified side class (2g of them);
    // the 4g polygon sides become spokes hub -> class.  Side order follows
    // the relator a1 b1 a1^{-1} b1^{-1} ...; each generator owns the two
    // spokes at its direct and inverse positions.
    StandardNerve out;
    out.nerve.vertex_count = 1 + 2 * genus;
    out.nerve.edges.resize(static_cast<size_t>(4 * genus));
    out.basis_walks.resize(static_cast<size_t>(2 * genus));
    for (int i = 0; i < genus; ++i) {
        const int alpha_cls = 1 + i;
        const int beta_cls = 1 + genus + i;
        const int pa = 4 * i, pb = 4 * i + 1, pa_inv = 4 * i + 2, pb_inv = 4 * i + 3;
        out.nerve.edges[static_cast<size_t>(pa)] = Nerve::Edge{0, alpha_cls};
        out.nerve.edges[static_cast<size_t>(pa_inv)] = Nerve::Edge{0, alpha_cls};
        out.nerve.edges[static_cast<size_t>(pb)] = Nerve::Edge{0, beta_cls};
        out.nerve.edges[static_cast<size_t>(pb_inv)] = Nerve::Edge{0, beta_cls};
        out.basis_walks[static_cast<size_t>(i)] =
            EdgeWalk{WalkStep{pa, true}, WalkStep{pa_inv, false}};
        out.basis_walks[static_cast<size_t>(genus + i)] =
            EdgeWalk{WalkStep{pb, true}, WalkStep{pb_inv, false}};
    }
    out.nerve.validate();
    return out;
}

EdgeWalk StandardNerve::walk_for_word(const LoopWord& word) const {
    const int genus = (nerve.vertex_count - 1) / 2;
    EdgeWalk walk;
    for (const LoopLetter& l : word.letters()) {
        if (l.index > genus) fail(errc::invalid_argument, "generator index exceeds genus");
        const EdgeWalk& base =
            basis_walks[static_cast<size_t>((l.beta ? genus : 0) + l.index - 1)];
        if (!l.inverse) {
            walk.insert(walk.end(), base.begin(), base.end());
        } else {
            for (auto it = base.rbegin(); it != base.rend(); ++it)
                walk.push_back(WalkStep{it->edge, !it->forward});
        }
    }
    if (walk.empty()) fail(errc::invalid_argument, "empty loop word has no walk");
    return walk;
}

NerveCocycle cocycle_with_periods(const StandardNerve& nerve, const std::vector<Scalar>& periods) {
    const size_t classes = static_cast<size_t>(nerve.nerve.vertex_count - 1);
    if (periods.size() != classes) fail(errc::invalid_argument, "need one period per basis loop");
    std::vector<Scalar> vals(nerve.nerve.edges.size());
    for (size_t c = 0; c < classes; ++c) {
        const EdgeWalk& w = nerve.basis_walks[c];
        vals[static_cast<size_t>(w[0].edge)] = periods[c];
    }
    return NerveCocycle(nerve.nerve, std::move(vals));
}

APeriodSplit normalize_a_periods(const std::vector<Scalar>& periods, const SurfaceModel& surface) {
    const size_t g = static_cast<size_t>(surface.genus());
    if (periods.size() != 2 * g) fail(errc::invalid_argument, "expected 2g periods");
    std::vector<Scalar> a(periods.begin(), periods.begin() + static_cast<long>(g));
    std::vector<Scalar> b(periods.begin() + static_cast<long>(g), periods.end());
    std::vector<Scalar> ta = surface.tau_apply(a);
    APeriodSplit out;
    out.omega_coeffs = std::move(a);
    out.normalized.assign(2 * g, Scalar());
    for (size_t i = 0; i < g; ++i) out.normalized[g + i] = b[i] - ta[i];
    return out;
}

const Scalar& UedaForm::loop_period(int index) const {
    const int g = static_cast<int>(a_periods.size());
    if (index < 0 || index >= 2 * g) fail(errc::invalid_argument, "loop index out of range");
    return index < g ? a_periods[static_cast<size_t>(index)]
                     : b_periods[static_cast<size_t>(index - g)];
}

void UedaForm::validate_against(const SurfaceModel& surface) const {
    const size_t g = static_cast<size_t>(surface.genus());
    if (k < 1) fail(errc::invalid_argument, "tangency index k must be >= 1");
    if (a_periods.size() != g || b_periods.size() != g)
        fail(errc::invalid_argument, "period vectors must have size g");
    if (!rel_periods.empty() && rel_periods.size() != static_cast<size_t>(2 * surface.genus() - 3))
        fail(errc::invalid_argument, "expected 2g-3 relative periods");
    std::vector<Scalar> ta = surface.tau_apply(a_periods);
    for (size_t i = 0; i < g; ++i)
        if (b_periods[i] != ta[i])
            fail(errc::holomorphicity_violated, "b_periods differ from tau * a_periods");
}

UedaForm ueda_form_from_holonomy(const JetTuple& rho_f, const JetTuple& rho_g,
                                 const SurfaceModel& surface) {
    const int g = surface.genus();
    if (rho_f.size() != 2 * g || rho_g.size() != 2 * g)
        fail(errc::invalid_argument, "holonomy tuples must have 2g entries");
    if (rho_f.order() != rho_g.order()) fail(errc::invalid_argument, "order mismatch");
    if (!rho_f.all_tangent_to_identity() || !rho_g.all_tangent_to_identity())
        fail(errc::not_tangent_to_identity, "holonomies must be tangent to identity");

    std::vector<JetDiffeo> composites;
    composites.reserve(static_cast<size_t>(2 * g));
    int k = rho_f.order() + 1;
    for (int i = 0; i < 2 * g; ++i) {
        JetDiffeo d = compose(rho_g[i], rho_f[i].inverse());
        if (auto t = tangency_order(d)) k = std::min(k, *t);
        composites.push_back(std::move(d));
    }
    if (k > rho_f.order()) fail(errc::pairs_coincide, "the two holonomy tuples coincide");

    UedaForm out;
    out.k = k;
    out.a_periods.resize(static_cast<size_t>(g));
    out.b_periods.resize(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) {
        out.a_periods[static_cast<size_t>(i)] = composites[static_cast<size_t>(i)].coeff(k + 1);
        out.b_periods[static_cast<size_t>(i)] =
            composites[static_cast<size_t>(g + i)].coeff(k + 1);
    }
    out.simple_zeros = true;
    out.validate_against(surface);
    return out;
}

} // namespace holojet
