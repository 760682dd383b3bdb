#pragma once

#include <stdexcept>
#include <string>

namespace holojet {

enum class errc {
    parse_error,
    invalid_argument,
    division_by_zero,
    non_vanishing_inner,
    not_invertible,
    not_tangent_to_identity,
    identity_has_no_leading_term,
    order_too_low_for_normal_form,
    walk_not_in_nerve,
    ambiguous_edge,
    pairs_coincide,
    holomorphicity_violated,
    series_coincide,
    extra_tangency,
    wrong_divisor,
    square_root_not_in_field,
    not_canonical_pair,
    foliations_coincide,
    degenerate_omega,
    realizability_failed,
    internal_error,
};

const char* errc_name(errc c);

// Exception carrying a machine-checkable code plus a human message.
class calc_error : public std::runtime_error {
public:
    calc_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw calc_error(code, what);
}

} // namespace holojet
