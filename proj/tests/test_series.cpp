#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holojet/series.hpp"
#include "test_support.hpp"

using namespace holojet;

namespace {

Series make(std::initializer_list<long> coeffs_from_deg0) {
    std::vector<Scalar> c;
    for (long v : coeffs_from_deg0) c.emplace_back(v);
    return Series(std::move(c));
}

// Independent oracle: solves g + g^2 = t coefficient by coefficient,
// never touching the composition machinery under test.
std::vector<Scalar> inverse_of_t_plus_t2(int order) {
    std::vector<Scalar> g(static_cast<size_t>(order) + 1);
    g[1] = Scalar(1);
    for (int n = 2; n <= order; ++n) {
        // [t^n] g^2 with the still-unknown g_n absent (it cannot appear:
        // g^2 at degree n uses g_i g_{n-i} with 1 <= i <= n-1).
        Scalar sq;
        for (int i = 1; i < n; ++i) sq += g[static_cast<size_t>(i)] * g[static_cast<size_t>(n - i)];
        g[static_cast<size_t>(n)] = -sq;
    }
    return g;
}

} // namespace

TEST_CASE("ring operations") {
    Series t = Series::identity(4);
    CHECK(t + t == make({0, 2, 0, 0, 0}));

    Series f = make({0, 1, 1, 0, 0}); // t + t^2
    CHECK(f * t == make({0, 0, 1, 1, 0}));

    Series g = make({0, 1, 0, 5});
    CHECK(g.truncated(2) == make({0, 1, 0}));

    // min-order rule
    Series a(5), b(9);
    CHECK((a + b).order() == 5);
    CHECK((a * b).order() == 5);

    CHECK(f.derivative() == make({1, 2, 0, 0}));
    CHECK(f.derivative().order() == 3);
}

TEST_CASE("derivative satisfies the Leibniz rule exactly") {
    hjtest::Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        Series f = hjtest::random_series(rng, 12, false);
        Series g = hjtest::random_series(rng, 12, false);
        Series lhs = (f * g).derivative();
        Series rhs = f.derivative() * g.truncated(11) + f.truncated(11) * g.derivative();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("composition") {
    Series f = make({0, 1, 1, 0, 0}); // t + t^2, order 4
    CHECK(compose(f, f) == make({0, 1, 2, 2, 1}));

    Series t = Series::identity(4);
    CHECK(compose(f, t) == f);
    Series g = make({0, 2, 0, 1, 3});
    CHECK(compose(t, g) == g);

    Series bad = make({1, 1, 0, 0, 0});
    CHECK_THROWS_AS(compose(f, bad), calc_error);
}

TEST_CASE("composition is associative up to truncation") {
    hjtest::Rng rng(22);
    for (int trial = 0; trial < 8; ++trial) {
        Series f = hjtest::random_series(rng, 10, false);
        Series g = hjtest::random_series(rng, 10);
        Series h = hjtest::random_series(rng, 10);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("compositional inverse") {
    CHECK(comp_inverse(Series::identity(6)) == Series::identity(6));

    Series two_t(6);
    two_t.coeff_mut(1) = Scalar(2);
    Series half_t(6);
    half_t.coeff_mut(1) = Scalar(Rational(1, 2));
    CHECK(comp_inverse(two_t) == half_t);

    // signed Catalan numbers, frozen from the g + g^2 = t oracle
    Series f = make({0, 1, 1, 0, 0});
    CHECK(comp_inverse(f) == make({0, 1, -1, 2, -5}));

    auto oracle = inverse_of_t_plus_t2(12);
    std::vector<Scalar> fc(13);
    fc[1] = Scalar(1);
    fc[2] = Scalar(1);
    Series f12 = Series(std::move(fc));
    Series inv = comp_inverse(f12);
    CHECK(inv == Series(std::move(oracle)));
    long frozen[] = {0, 1, -1, 2, -5, 14, -42, 132, -429, 1430, -4862, 16796, -58786};
    for (int d = 0; d <= 12; ++d) CHECK(inv.coeff(d) == Scalar(frozen[d]));

    CHECK_THROWS_AS(comp_inverse(make({1, 1})), calc_error);
    CHECK_THROWS_AS(comp_inverse(make({0, 0, 1})), calc_error);
}

TEST_CASE("inverse round trip on random invertible series") {
    hjtest::Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int order = static_cast<int>(rng.uniform(16, 20));
        Series f = hjtest::random_invertible_jet(rng, order).series();
        Series g = comp_inverse(f);
        CHECK(compose(f, g) == Series::identity(order));
        CHECK(compose(g, f) == Series::identity(order));
    }
}
