#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holojet/conjugacy.hpp"
#include "test_support.hpp"

using namespace holojet;

namespace {

JetTuple random_tuple(hjtest::Rng& rng, int entries, int order, int kmax = 2) {
    std::vector<JetDiffeo> e;
    for (int i = 0; i < entries; ++i)
        e.push_back(hjtest::random_ti_jet(rng, order, static_cast<int>(rng.uniform(1, kmax))));
    return JetTuple(std::move(e));
}

JetDiffeo jet(std::initializer_list<long> coeffs_from_deg1, int order) {
    std::vector<Scalar> c(static_cast<size_t>(order));
    int d = 0;
    for (long v : coeffs_from_deg1) c[static_cast<size_t>(d++)] = Scalar(v);
    return JetDiffeo::from_degree_one(c);
}

} // namespace

TEST_CASE("identical tuples yield the identity certificate") {
    hjtest::Rng rng(41);
    JetTuple a = random_tuple(rng, 3, 8);
    auto res = decide_conjugate_tuple(a, a);
    REQUIRE(res.is_certificate());
    CHECK(res.certificate().psi == JetDiffeo::identity(8));
}

TEST_CASE("dilation certificate with deterministic tie-breaks") {
    // A = (t+t^2), B = (t+t^2/2): psi = 2t.
    JetTuple a({jet({1, 1}, 6)});
    std::vector<Scalar> bc(6);
    bc[0] = Scalar(1);
    bc[1] = Scalar(Rational(1, 2));
    JetTuple b({JetDiffeo::from_degree_one(bc)});
    auto res = decide_conjugate_tuple(a, b);
    REQUIRE(res.is_certificate());
    const JetDiffeo& psi = res.certificate().psi;
    CHECK(psi.coeff(1) == Scalar(2));
    for (int d = 2; d <= 6; ++d) CHECK(psi.coeff(d).is_zero());
    CHECK(verify_conjugacy(a, b, psi));
}

TEST_CASE("obstruction at the first inconsistent order") {
    // A = (t+t^2, t+t^3), B = (t+t^2, t+2t^3): the degree-3 coefficient of
    // the second entry is invariant, inconsistency at order 3.
    JetTuple a({jet({1, 1}, 6), jet({1, 0, 1}, 6)});
    JetTuple b({jet({1, 1}, 6), jet({1, 0, 2}, 6)});
    auto res = decide_conjugate_tuple(a, b);
    REQUIRE(res.is_obstruction());
    CHECK(res.obstruction().failing_order == 3);
    CHECK(res.obstruction().entry_index == 1);
}

TEST_CASE("soundness and completeness on random conjugate tuples") {
    hjtest::Rng rng(42);
    for (int trial = 0; trial < 15; ++trial) {
        int order = static_cast<int>(rng.uniform(8, 12));
        JetTuple a = random_tuple(rng, static_cast<int>(rng.uniform(1, 4)), order);
        JetDiffeo psi = hjtest::random_invertible_jet(rng, order);
        JetTuple b = a.conjugated(psi);
        auto res = decide_conjugate_tuple(a, b);
        REQUIRE(res.is_certificate());
        CHECK(verify_conjugacy(a, b, res.certificate().psi));
    }
}

TEST_CASE("injected single-coefficient faults are caught at the right order") {
    hjtest::Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        int order = 10;
        JetTuple a = random_tuple(rng, 3, order, 1);
        JetDiffeo psi = hjtest::random_ti_jet(rng, order, 1);
        JetTuple b = a.conjugated(psi);

        int entry = static_cast<int>(rng.uniform(0, 2));
        int degree = static_cast<int>(rng.uniform(3, order));
        std::vector<Scalar> coeffs(static_cast<size_t>(order));
        for (int d = 1; d <= order; ++d)
            coeffs[static_cast<size_t>(d) - 1] = b[entry].coeff(d);
        coeffs[static_cast<size_t>(degree) - 1] += Scalar(1);
        std::vector<JetDiffeo> entries = b.entries();
        entries[static_cast<size_t>(entry)] = JetDiffeo::from_degree_one(coeffs);
        JetTuple faulted(entries);

        auto res = decide_conjugate_tuple(a, faulted);
        REQUIRE(res.is_obstruction());
        CHECK(res.obstruction().failing_order == degree);
    }
}

TEST_CASE("root extraction failures are reported as undecided") {
    // (t+t^3) vs (t+t^3/2): s^2 = 2 has no solution in Q(i).
    JetTuple a({jet({1, 0, 1}, 6)});
    std::vector<Scalar> bc(6);
    bc[0] = Scalar(1);
    bc[2] = Scalar(Rational(1, 2));
    JetTuple b({JetDiffeo::from_degree_one(bc)});
    auto res = decide_conjugate_tuple(a, b);
    REQUIRE(res.is_undecided());
    CHECK(res.undecided().reason.find("RootNotInField") != std::string::npos);
}

TEST_CASE("multiplier mismatch and scope") {
    JetTuple a({jet({2}, 4)});
    JetTuple b({jet({3}, 4)});
    auto res = decide_conjugate_tuple(a, b);
    REQUIRE(res.is_obstruction());
    CHECK(res.obstruction().failing_order == 1);

    // equal non-unit multipliers lie outside the implemented scope
    JetTuple c({jet({2, 1}, 4)});
    JetTuple d({jet({2, 0, 1}, 4)});
    CHECK_THROWS_AS(decide_conjugate_tuple(c, d), calc_error);
}

TEST_CASE("all-identity tuples") {
    JetTuple ids({JetDiffeo::identity(5), JetDiffeo::identity(5)});
    auto res = decide_conjugate_tuple(ids, ids);
    REQUIRE(res.is_certificate());
    CHECK(res.certificate().psi == JetDiffeo::identity(5));

    JetTuple other({JetDiffeo::identity(5), jet({1, 0, 0, 2}, 5)});
    auto res2 = decide_conjugate_tuple(ids, other);
    REQUIRE(res2.is_obstruction());
    CHECK(res2.obstruction().failing_order == 4);
    CHECK(res2.obstruction().detail.find("AllEntriesIdentity") != std::string::npos);
}

TEST_CASE("mixed tangency orders") {
    hjtest::Rng rng(44);
    for (int trial = 0; trial < 8; ++trial) {
        int order = 12;
        std::vector<JetDiffeo> e;
        e.push_back(hjtest::random_ti_jet(rng, order, 1));
        e.push_back(hjtest::random_ti_jet(rng, order, 3));
        e.push_back(JetDiffeo::identity(order));
        JetTuple a(std::move(e));
        JetDiffeo psi = hjtest::random_invertible_jet(rng, order);
        JetTuple b = a.conjugated(psi);
        auto res = decide_conjugate_tuple(a, b);
        REQUIRE(res.is_certificate());
        CHECK(verify_conjugacy(a, b, res.certificate().psi));
    }
}
