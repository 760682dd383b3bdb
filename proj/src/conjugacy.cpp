#include "holojet/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace holojet {

namespace {

// ---------------------------------------------------------------------
// Sparse polynomials in the pending psi-coefficients.  A monomial is the
// sorted multiset of symbol ids; the empty monomial is the constant term.
// Almost every value handled by the solver is constant or linear; higher
// degrees only arise through powers of the unknown conjugator.

using Monomial = std::vector<int>;

struct LinPoly {
    std::map<Monomial, Scalar> terms;

    static LinPoly constant(Scalar c) {
        LinPoly p;
        if (!c.is_zero()) p.terms.emplace(Monomial{}, std::move(c));
        return p;
    }
    static LinPoly symbol(int id) {
        LinPoly p;
        p.terms.emplace(Monomial{id}, Scalar(1));
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
    }
    Scalar constant_part() const {
        auto it = terms.find(Monomial{});
        return it == terms.end() ? Scalar() : it->second;
    }
    int degree() const {
        size_t d = 0;
        for (const auto& [m, c] : terms) d = std::max(d, m.size());
        return static_cast<int>(d);
    }

    void add_term(Monomial m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    LinPoly& operator+=(const LinPoly& o) {
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    LinPoly& operator-=(const LinPoly& o) {
        for (const auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend LinPoly operator+(LinPoly a, const LinPoly& b) { return a += b; }
    friend LinPoly operator-(LinPoly a, const LinPoly& b) { return a -= b; }

    friend LinPoly operator*(const LinPoly& a, const LinPoly& b) {
        LinPoly r;
        for (const auto& [ma, ca] : a.terms) {
            for (const auto& [mb, cb] : b.terms) {
                Monomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                r.add_term(std::move(m), ca * cb);
            }
        }
        return r;
    }

    LinPoly scaled(const Scalar& c) const {
        LinPoly r;
        if (c.is_zero()) return r;
        for (const auto& [m, v] : terms) r.terms.emplace(m, v * c);
        return r;
    }

    void collect_symbols(std::set<int>& out) const {
        for (const auto& [m, c] : terms)
            for (int s : m) out.insert(s);
    }
};

// Substitutes every solved symbol; solution values contain only free
// symbols, so one pass is enough.
LinPoly reduce(const LinPoly& p, const std::map<int, LinPoly>& solved) {
    LinPoly r;
    for (const auto& [mono, coeff] : p.terms) {
        bool touched = false;
        for (int s : mono) {
            if (solved.count(s)) {
                touched = true;
                break;
            }
        }
        if (!touched) {
            r.add_term(mono, coeff);
            continue;
        }
        LinPoly prod = LinPoly::constant(coeff);
        for (int s : mono) {
            auto it = solved.find(s);
            prod = it != solved.end() ? prod * it->second : prod * LinPoly::symbol(s);
        }
        r += prod;
    }
    return r;
}

struct PendingEq {
    LinPoly poly;
    int origin_order;
    int entry;
};

struct BranchOutcome {
    bool success = false;
    bool undecided = false;
    JetDiffeo psi;
    ConjugacyObstruction obstruction;
    std::string undecided_reason;

    BranchOutcome() : psi(JetDiffeo::identity(1)) {}
};

// Solves for a tangent-to-identity chi with chi o A_i o chi^{-1} = B_i.
// Raw powers of the symbolic chi are shared by the caller.
class TiSolver {
public:
    TiSolver(const JetTuple& a, const std::vector<std::vector<LinPoly>>& chi_pows)
        : a_(a), n_(a.order()), chi_pows_(chi_pows) {
        a_pows_.reserve(static_cast<size_t>(a_.size()));
        for (int i = 0; i < a_.size(); ++i) {
            std::vector<Series> pows;
            pows.reserve(static_cast<size_t>(n_) + 1);
            pows.emplace_back(Series(n_));
            pows.push_back(a_[i].series());
            for (int j = 2; j <= n_; ++j) pows.push_back(pows.back() * a_[i].series());
            a_pows_.push_back(std::move(pows));
        }
    }

    BranchOutcome solve(const std::vector<std::vector<Scalar>>& btilde) {
        solved_.clear();
        pool_.clear();
        equations_seen_ = 0;
        guessed_ = false;

        BranchOutcome out;
        for (int degree = 2; degree <= n_; ++degree) {
            for (int i = 0; i < a_.size(); ++i) {
                LinPoly eq = reduce(raw_residual(i, degree, btilde[static_cast<size_t>(i)]),
                                    solved_);
                ++equations_seen_;
                if (!consume(eq, degree, i, out)) return out;
                if (!sweep_pool(degree, out)) return out;
            }
        }
        if (!finalize_pool(out)) return out;

        // Remaining freedom is genuine (centralizer and tail directions);
        // tie-break to zero.
        std::vector<Scalar> chi_coeffs(static_cast<size_t>(n_) + 1);
        chi_coeffs[1] = Scalar(1);
        for (int j = 2; j <= n_; ++j) {
            LinPoly expr = reduce(LinPoly::symbol(j), solved_);
            LinPoly zeroed;
            for (const auto& [m, c] : expr.terms)
                if (m.empty()) zeroed.add_term(m, c);
            chi_coeffs[static_cast<size_t>(j)] = zeroed.constant_part();
        }
        out.success = true;
        out.undecided = guessed_;
        out.psi = JetDiffeo(Series(std::move(chi_coeffs)));
        return out;
    }

    bool guessed() const { return guessed_; }

private:
    LinPoly raw_residual(int entry, int degree, const std::vector<Scalar>& bt) const {
        // [t^degree] of (chi o A - Btilde o chi) with chi symbolic.
        LinPoly r;
        const auto& pows = a_pows_[static_cast<size_t>(entry)];
        r += LinPoly::constant(pows[1].coeff(degree)); // j = 1, chi_1 = 1
        for (int j = 2; j <= degree; ++j) {
            const Scalar& c = pows[static_cast<size_t>(j)].coeff(degree);
            if (!c.is_zero()) r.add_term(Monomial{j}, c);
        }
        // Btilde o chi = chi + sum_{m>=2} bt[m] chi^m  (bt[1] = 1).
        r.add_term(Monomial{degree}, Scalar(-1));
        for (int m = 2; m <= degree; ++m) {
            const Scalar& bm = bt[static_cast<size_t>(m)];
            if (bm.is_zero()) continue;
            r -= chi_pows_[static_cast<size_t>(m)][static_cast<size_t>(degree)].scaled(bm);
        }
        return r;
    }

    // A symbol is a usable pivot when it occurs in exactly one monomial,
    // linearly, outside every product: the equation can then be solved for
    // it even if other pending symbols appear nonlinearly.
    static int find_pivot(const LinPoly& eq) {
        std::set<int> linear_syms, blocked;
        for (const auto& [m, c] : eq.terms) {
            if (m.size() == 1) {
                if (!linear_syms.insert(m[0]).second) blocked.insert(m[0]);
            } else {
                for (int s : m) blocked.insert(s);
            }
        }
        int pivot = -1;
        for (int s : linear_syms)
            if (!blocked.count(s)) pivot = std::max(pivot, s);
        return pivot;
    }

    // Handles one reduced equation.  Returns false when the branch is dead.
    bool consume(LinPoly eq, int degree, int entry, BranchOutcome& out) {
        if (eq.is_zero()) return true;
        if (eq.is_constant()) {
            out.obstruction = make_obstruction(degree, entry, "inconsistent residual");
            return false;
        }
        int pivot = find_pivot(eq);
        if (pivot >= 0) {
            solve_for(pivot, std::move(eq));
            return true;
        }
        pool_.push_back(PendingEq{std::move(eq), degree, entry});
        return true;
    }

    void solve_for(int pivot, LinPoly eq) {
        Scalar pivot_coeff;
        LinPoly rest;
        for (const auto& [m, c] : eq.terms) {
            if (m.size() == 1 && m[0] == pivot)
                pivot_coeff = c;
            else
                rest.add_term(m, c);
        }
        LinPoly value = rest.scaled(-pivot_coeff.inverse());
        for (auto& [s, v] : solved_) {
            LinPoly updated;
            for (const auto& [m, c] : v.terms) {
                bool has = std::find(m.begin(), m.end(), pivot) != m.end();
                if (!has) {
                    updated.add_term(m, c);
                } else {
                    LinPoly prod = LinPoly::constant(c);
                    for (int sym : m)
                        prod = (sym == pivot) ? prod * value : prod * LinPoly::symbol(sym);
                    updated += prod;
                }
            }
            v = std::move(updated);
        }
        solved_.emplace(pivot, std::move(value));
    }

    bool sweep_pool(int degree, BranchOutcome& out) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (size_t idx = 0; idx < pool_.size(); ++idx) {
                LinPoly eq = reduce(pool_[idx].poly, solved_);
                if (eq.is_zero()) {
                    pool_.erase(pool_.begin() + static_cast<long>(idx));
                    progress = true;
                    break;
                }
                if (eq.is_constant()) {
                    out.obstruction = make_obstruction(degree, pool_[idx].entry,
                                                       "inconsistent pooled residual");
                    return false;
                }
                int pivot = find_pivot(eq);
                if (pivot >= 0) {
                    solve_for(pivot, std::move(eq));
                    pool_.erase(pool_.begin() + static_cast<long>(idx));
                    progress = true;
                    break;
                }
            }
        }
        return true;
    }

    bool finalize_pool(BranchOutcome& out) {
        if (!sweep_pool(n_, out)) return false;
        bool progress = true;
        while (progress && !pool_.empty()) {
            progress = false;
            for (size_t idx = 0; idx < pool_.size(); ++idx) {
                LinPoly eq = reduce(pool_[idx].poly, solved_);
                std::set<int> syms;
                eq.collect_symbols(syms);
                if (syms.size() != 1 || eq.degree() != 2) continue;
                // Quadratic in one pending coefficient; solve it exactly and
                // take the lexicographically first root.
                int s = *syms.begin();
                Scalar c2, c1, c0 = eq.constant_part();
                for (const auto& [m, c] : eq.terms) {
                    if (m.size() == 1) c1 = c;
                    if (m.size() == 2) c2 = c;
                }
                Scalar disc = c1 * c1 - Scalar(4) * c2 * c0;
                auto roots = square_roots(disc);
                if (roots.empty()) {
                    out.undecided = true;
                    out.undecided_reason = "quadratic residual has no root in Q(i)";
                    return false;
                }
                Scalar root = (-c1 + roots.front()) / (Scalar(2) * c2);
                guessed_ = true;
                pool_.erase(pool_.begin() + static_cast<long>(idx));
                solve_for(s, LinPoly::symbol(s) - LinPoly::constant(root));
                if (!sweep_pool(n_, out)) return false;
                progress = true;
                break;
            }
        }
        for (const PendingEq& p : pool_) {
            LinPoly eq = reduce(p.poly, solved_);
            if (eq.is_zero()) continue;
            out.undecided = true;
            out.undecided_reason = "nonlinear residual beyond the Q(i) search";
            return false;
        }
        return true;
    }

    ConjugacyObstruction make_obstruction(int order, int entry, const std::string& detail) {
        ConjugacyObstruction o;
        o.failing_order = order;
        o.entry_index = entry;
        o.equations_seen = equations_seen_;
        o.pinned_coefficients = static_cast<int>(solved_.size());
        o.detail = detail;
        return o;
    }

    const JetTuple& a_;
    int n_;
    const std::vector<std::vector<LinPoly>>& chi_pows_;
    std::vector<std::vector<Series>> a_pows_;
    std::map<int, LinPoly> solved_;
    std::vector<PendingEq> pool_;
    int equations_seen_ = 0;
    bool guessed_ = false;
};

std::vector<std::vector<LinPoly>> symbolic_chi_powers(int n) {
    // chi = t + sum_{j>=2} x_j t^j with x_j symbolic; powers truncated at n.
    std::vector<LinPoly> chi(static_cast<size_t>(n) + 1);
    chi[1] = LinPoly::constant(Scalar(1));
    for (int j = 2; j <= n; ++j) chi[static_cast<size_t>(j)] = LinPoly::symbol(j);

    std::vector<std::vector<LinPoly>> pows(static_cast<size_t>(n) + 1,
                                           std::vector<LinPoly>(static_cast<size_t>(n) + 1));
    pows[1] = chi;
    for (int m = 2; m <= n; ++m) {
        for (int d = m; d <= n; ++d) {
            LinPoly acc;
            for (int e = m - 1; e <= d - 1; ++e) {
                if (pows[static_cast<size_t>(m - 1)][static_cast<size_t>(e)].is_zero()) continue;
                if (chi[static_cast<size_t>(d - e)].is_zero()) continue;
                acc += pows[static_cast<size_t>(m - 1)][static_cast<size_t>(e)] *
                       chi[static_cast<size_t>(d - e)];
            }
            pows[static_cast<size_t>(m)][static_cast<size_t>(d)] = std::move(acc);
        }
    }
    return pows;
}

} // namespace

bool verify_conjugacy(const JetTuple& a, const JetTuple& b, const JetDiffeo& psi) {
    if (a.size() != b.size() || a.order() != b.order()) return false;
    const JetDiffeo inv = psi.inverse();
    for (int i = 0; i < a.size(); ++i)
        if (compose(compose(psi, a[i]), inv) != b[i]) return false;
    return true;
}

ConjugacyResult decide_conjugate_tuple(const JetTuple& a, const JetTuple& b) {
    if (a.size() != b.size()) fail(errc::invalid_argument, "tuple sizes differ");
    if (a.order() != b.order()) fail(errc::invalid_argument, "tuple orders differ");
    const int n = a.order();

    if (a == b) return ConjugacyCertificate{JetDiffeo::identity(n)};

    for (int i = 0; i < a.size(); ++i) {
        if (a[i].linear() != b[i].linear()) {
            ConjugacyObstruction o;
            o.failing_order = 1;
            o.entry_index = i;
            o.detail = "linear parts differ (conjugacy preserves multipliers)";
            return o;
        }
    }
    if (!a.all_tangent_to_identity())
        fail(errc::not_tangent_to_identity,
             "conjugacy decision implemented for tangent-to-identity tuples");

    int pivot = -1;
    for (int i = 0; i < a.size(); ++i) {
        if (!a[i].is_identity()) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) {
        // A consists of identities and A != B.
        for (int i = 0; i < a.size(); ++i) {
            if (!b[i].is_identity()) {
                ConjugacyObstruction o;
                o.failing_order = tangency_order(b[i]).value_or(n) + 1;
                o.entry_index = i;
                o.detail = "AllEntriesIdentity: quotient is trivial and tuples differ";
                return o;
            }
        }
        fail(errc::internal_error, "unreachable: equal tuples not detected");
    }

    const int k = *tangency_order(a[pivot]);
    if (b[pivot].is_identity()) {
        ConjugacyObstruction o;
        o.failing_order = k + 1;
        o.entry_index = pivot;
        o.detail = "entry is identity on one side only";
        return o;
    }
    const int kb = *tangency_order(b[pivot]);
    if (k != kb) {
        ConjugacyObstruction o;
        o.failing_order = std::min(k, kb) + 1;
        o.entry_index = pivot;
        o.detail = "tangency orders differ (conjugacy invariant)";
        return o;
    }

    const Scalar ratio = a[pivot].coeff(k + 1) / b[pivot].coeff(k + 1);
    const std::vector<Scalar> candidates = kth_roots(ratio, k);
    if (candidates.empty())
        return ConjugacyUndecided{"RootNotInField: s^" + std::to_string(k) +
                                  " = " + ratio.str() + " has no solution in Q(i)"};

    const auto chi_pows = symbolic_chi_powers(n);
    TiSolver solver(a, chi_pows);

    bool have_obstruction = false;
    bool have_undecided = false;
    ConjugacyObstruction best;
    std::string undecided_reason;

    for (const Scalar& s : candidates) {
        // Conjugating B entrywise by the inverse dilation reduces the
        // problem to a tangent-to-identity conjugator chi.
        std::vector<std::vector<Scalar>> btilde;
        btilde.reserve(static_cast<size_t>(b.size()));
        for (int i = 0; i < b.size(); ++i) {
            std::vector<Scalar> coeffs(static_cast<size_t>(n) + 1);
            Scalar spow(1); // s^{m-1}
            for (int m = 1; m <= n; ++m) {
                coeffs[static_cast<size_t>(m)] = b[i].coeff(m) * spow;
                spow *= s;
            }
            btilde.push_back(std::move(coeffs));
        }

        BranchOutcome outcome = solver.solve(btilde);
        if (outcome.success) {
            // psi = dilation o chi
            Series psi_s = outcome.psi.series();
            Series scaled(n);
            for (int d = 1; d <= n; ++d) scaled.coeff_mut(d) = s * psi_s.coeff(d);
            JetDiffeo psi(scaled);
            if (verify_conjugacy(a, b, psi)) return ConjugacyCertificate{psi};
            if (outcome.undecided) {
                have_undecided = true;
                undecided_reason = "certificate guess failed verification";
                continue;
            }
            fail(errc::internal_error, "conjugacy solver produced an invalid certificate");
        }
        if (outcome.undecided) {
            have_undecided = true;
            undecided_reason = outcome.undecided_reason;
            continue;
        }
        if (!have_obstruction || outcome.obstruction.failing_order > best.failing_order) {
            best = outcome.obstruction;
            have_obstruction = true;
        }
    }
    if (have_undecided) return ConjugacyUndecided{undecided_reason};
    return best;
}

} // namespace holojet
