#pragma once

#include <string>
#include <vector>

#include "holojet/jet.hpp"

namespace holojet {

using Matrix = std::vector<std::vector<Scalar>>;

/// Combinatorial model of a genus-g curve: a symplectic loop basis
/// alpha_1..alpha_g, beta_1..beta_g, the period matrix tau of the
/// normalized basis of holomorphic 1-forms, and labels for the 2g-2
/// zeros of a generic 1-form.
class SurfaceModel {
public:
    SurfaceModel(int genus, Matrix tau, std::vector<std::string> zero_labels = {});

    int genus() const { return genus_; }
    const Matrix& tau() const { return tau_; }
    const std::vector<std::string>& zero_labels() const { return zero_labels_; }

    /// tau * v for v in C^g.
    std::vector<Scalar> tau_apply(const std::vector<Scalar>& v) const;

private:
    int genus_;
    Matrix tau_;
    std::vector<std::string> zero_labels_;
};

/// Letter of a word in the surface group generators.
struct LoopLetter {
    bool beta = false; // false: alpha_i, true: beta_i
    int index = 1;     // 1..g
    bool inverse = false;

    friend bool operator==(const LoopLetter&, const LoopLetter&) = default;
};

/// Reduced word in the generators (no adjacent letter-inverse pairs).
class LoopWord {
public:
    explicit LoopWord(std::vector<LoopLetter> letters);

    const std::vector<LoopLetter>& letters() const { return letters_; }

private:
    std::vector<LoopLetter> letters_;
};

/// Abstract nerve of a covering: vertices, oriented edges (parallel edges
/// and loops allowed), and the triangles on which the cocycle condition
/// is imposed.
struct Nerve {
    struct Edge {
        int src = 0;
        int dst = 0;
    };
    /// Edges ij, jk, ik with matching endpoints.
    struct Triangle {
        int ij = 0;
        int jk = 0;
        int ik = 0;
    };

    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;

    void validate() const;
};

/// One scalar per oriented edge; the reverse orientation carries the
/// negated value, and on every listed triangle a_ik = a_ij + a_jk.
class NerveCocycle {
public:
    NerveCocycle(Nerve nerve, std::vector<Scalar> edge_values);

    const Nerve& nerve() const { return nerve_; }
    const std::vector<Scalar>& values() const { return values_; }

    friend NerveCocycle operator+(const NerveCocycle& a, const NerveCocycle& b);

private:
    Nerve nerve_;
    std::vector<Scalar> values_;
};

/// Coboundary of a vertex potential: edge (u,v) carries b_v - b_u.
NerveCocycle coboundary(const Nerve& nerve, const std::vector<Scalar>& potential);

struct WalkStep {
    int edge = 0;
    bool forward = true;
};
using EdgeWalk = std::vector<WalkStep>;

/// Checks contiguity and closedness of an edge walk.
void validate_walk(const Nerve& nerve, const EdgeWalk& walk);

/// Resolves a closed vertex sequence (v_0 .. v_n = v_0) to an edge walk;
/// fails on non-edges and on ambiguous parallel edges.
EdgeWalk walk_from_vertices(const Nerve& nerve, const std::vector<int>& vertices);

/// Sum of edge labels along a closed walk.
Scalar period(const NerveCocycle& cocycle, const EdgeWalk& walk);
Scalar period(const NerveCocycle& cocycle, const std::vector<int>& closed_vertex_walk);

/// Periods along the 2g basis walks: (P_A, P_B) concatenated.
std::vector<Scalar> period_map(const NerveCocycle& cocycle, const std::vector<EdgeWalk>& basis);

/// The polygon-identification nerve of a genus-g surface: a hub vertex,
/// one vertex per identified side class, and the 4g sides as spokes.
/// Carries ready-made closed walks for the basis loops.
struct StandardNerve {
    Nerve nerve;
    std::vector<EdgeWalk> basis_walks; // alpha_1..alpha_g then beta_1..beta_g

    EdgeWalk walk_for_word(const LoopWord& word) const;
};

StandardNerve polygon_nerve(int genus);

/// Cocycle on the polygon nerve with prescribed basis periods.
NerveCocycle cocycle_with_periods(const StandardNerve& nerve, const std::vector<Scalar>& periods);

/// Splitting of a class in C^{2g} along the holomorphic subspace
/// {(a, tau a)}: the subtracted 1-form and the A-normalized remainder
/// (0, b - tau a).  The decomposition is unique.
struct APeriodSplit {
    std::vector<Scalar> omega_coeffs;
    std::vector<Scalar> normalized;
};

APeriodSplit normalize_a_periods(const std::vector<Scalar>& periods, const SurfaceModel& surface);

/// The 1-form data of a neighborhood: tangency index k, periods along the
/// basis loops, and the relative periods along the paths from the first
/// zero to the others.  Relative periods are input data; extraction from
/// a holonomy pair leaves them empty.
struct UedaForm {
    int k = 1;
    std::vector<Scalar> a_periods;
    std::vector<Scalar> b_periods;
    std::vector<Scalar> rel_periods;
    bool simple_zeros = true;

    /// Period along basis loop 0..2g-1 (alphas then betas).
    const Scalar& loop_period(int index) const;

    /// Checks sizes and the holomorphicity constraint b = tau a.
    void validate_against(const SurfaceModel& surface) const;
};

/// Reads the Ueda form off a pair of holonomy representations: k is the
/// least tangency order of rho_G(gamma) o rho_F(gamma)^{-1} over the
/// basis loops and the periods are the degree-(k+1) coefficients.
UedaForm ueda_form_from_holonomy(const JetTuple& rho_f, const JetTuple& rho_g,
                                 const SurfaceModel& surface);

} // namespace holojet
