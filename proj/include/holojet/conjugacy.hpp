#pragma once

#include <string>
#include <variant>

#include "holojet/jet.hpp"

namespace holojet {

struct ConjugacyCertificate {
    JetDiffeo psi;
};

/// Negative certificate: the order-by-order linear system for psi became
/// inconsistent.  Carries the failing order, the entry whose equation
/// failed and rank data of the residual system at that point.
struct ConjugacyObstruction {
    int failing_order = 0;
    int entry_index = -1;
    int equations_seen = 0;
    int pinned_coefficients = 0;
    std::string detail;
};

/// The decision could not be settled over Q(i); distinct from genuine
/// non-conjugacy (the pair may be conjugate over a field extension).
struct ConjugacyUndecided {
    std::string reason;
};

class ConjugacyResult {
public:
    ConjugacyResult(ConjugacyCertificate c) : v_(std::move(c)) {}
    ConjugacyResult(ConjugacyObstruction o) : v_(std::move(o)) {}
    ConjugacyResult(ConjugacyUndecided u) : v_(std::move(u)) {}

    bool is_certificate() const { return std::holds_alternative<ConjugacyCertificate>(v_); }
    bool is_obstruction() const { return std::holds_alternative<ConjugacyObstruction>(v_); }
    bool is_undecided() const { return std::holds_alternative<ConjugacyUndecided>(v_); }

    const ConjugacyCertificate& certificate() const { return std::get<ConjugacyCertificate>(v_); }
    const ConjugacyObstruction& obstruction() const { return std::get<ConjugacyObstruction>(v_); }
    const ConjugacyUndecided& undecided() const { return std::get<ConjugacyUndecided>(v_); }

private:
    std::variant<ConjugacyCertificate, ConjugacyObstruction, ConjugacyUndecided> v_;
};

/// Decides whether one psi conjugates every entry of a onto b
/// (psi o a_i o psi^{-1} = b_i exactly at the truncation order).
///
/// Candidate linear parts are the Q(i) solutions of s^k = a_A/a_B read
/// off the first non-identity entry; branches are explored in
/// lexicographic order of s and all free coefficients of a returned
/// certificate are tie-broken to zero.  Implemented for tuples whose
/// entries are tangent to the identity (the tuples this project
/// produces); entries with equal non-unit linear parts are rejected.
ConjugacyResult decide_conjugate_tuple(const JetTuple& a, const JetTuple& b);

/// Verifies a claimed certificate by direct composition.
bool verify_conjugacy(const JetTuple& a, const JetTuple& b, const JetDiffeo& psi);

} // namespace holojet
