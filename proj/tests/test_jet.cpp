#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holojet/canonical.hpp"
#include "holojet/flow.hpp"
#include "holojet/jet.hpp"
#include "test_support.hpp"

using namespace holojet;

namespace {

JetDiffeo geometric_jet(int order, long ratio) {
    // t / (1 - r t) = sum r^{n-1} t^n, the time-r map of t^2 d/dt.
    std::vector<Scalar> c(static_cast<size_t>(order));
    Scalar p(1);
    for (int d = 1; d <= order; ++d) {
        c[static_cast<size_t>(d) - 1] = p;
        p *= Scalar(ratio);
    }
    return JetDiffeo::from_degree_one(c);
}

// Independent oracle for the generator: match exp(v) against f one degree
// at a time, using only exp_flow.
VectorFieldJet naive_log(const JetDiffeo& f) {
    const int n = f.order();
    const int k = *tangency_order(f);
    VectorFieldJet v(n);
    for (int m = k + 1; m <= n; ++m) {
        JetDiffeo e = exp_flow(v, Scalar(1));
        v.set_coeff(m, v.coeff(m) + f.coeff(m) - e.coeff(m));
    }
    return v;
}

} // namespace

TEST_CASE("group operations") {
    hjtest::Rng rng(31);
    JetDiffeo f = hjtest::random_invertible_jet(rng, 10);
    CHECK(commutator(f, f) == JetDiffeo::identity(10));
    CHECK(compose(f, f.inverse()) == JetDiffeo::identity(10));

    // two time-maps of t^2 d/dt commute
    JetDiffeo g1 = geometric_jet(12, 1);
    JetDiffeo g2 = geometric_jet(12, 2);
    CHECK(commutator(g1, g2) == JetDiffeo::identity(12));

    // conjugate(2t, t+t^2) = 2 f(t/2) = t + t^2/2
    std::vector<Scalar> two{Scalar(2), Scalar(0)};
    std::vector<Scalar> fc{Scalar(1), Scalar(1)};
    JetDiffeo conj = conjugate(JetDiffeo::from_degree_one(two), JetDiffeo::from_degree_one(fc));
    CHECK(conj.coeff(1) == Scalar(1));
    CHECK(conj.coeff(2) == Scalar(Rational(1, 2)));
}

TEST_CASE("tangency order") {
    std::vector<Scalar> c(5);
    c[0] = Scalar(1);
    c[3] = Scalar(3); // t + 3 t^4
    CHECK(*tangency_order(JetDiffeo::from_degree_one(c)) == 3);

    CHECK(!tangency_order(JetDiffeo::identity(6)).has_value());

    std::vector<Scalar> d{Scalar(1), Scalar(1), Scalar(7)};
    CHECK(*tangency_order(JetDiffeo::from_degree_one(d)) == 1);

    std::vector<Scalar> bad{Scalar(2)};
    CHECK_THROWS_AS(tangency_order(JetDiffeo::from_degree_one(bad)), calc_error);
}

TEST_CASE("exp_flow basics") {
    VectorFieldJet v(8);
    v.set_coeff(2, Scalar(1)); // t^2 d/dt
    JetDiffeo e = exp_flow(v, Scalar(1));
    CHECK(e == geometric_jet(8, 1));

    hjtest::Rng rng(5);
    CHECK(exp_flow(hjtest::random_field(rng, 10), Scalar(0)) == JetDiffeo::identity(10));
}

TEST_CASE("flow group law and commuting time maps") {
    hjtest::Rng rng(32);
    for (int trial = 0; trial < 6; ++trial) {
        VectorFieldJet v = hjtest::random_field(rng, 14, static_cast<int>(rng.uniform(1, 3)));
        Scalar s = hjtest::small_scalar(rng, true);
        Scalar u = hjtest::small_scalar(rng, true);
        JetDiffeo fs = exp_flow(v, s);
        JetDiffeo fu = exp_flow(v, u);
        CHECK(compose(fs, fu) == exp_flow(v, s + u));
        CHECK(commutator(fs, fu) == JetDiffeo::identity(14));
    }
}

TEST_CASE("log_flow inverts exp_flow and matches the naive oracle") {
    hjtest::Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        int k = static_cast<int>(rng.uniform(1, 3));
        JetDiffeo f = hjtest::random_ti_jet(rng, 16, k);
        VectorFieldJet v = log_flow(f);
        CHECK(exp_flow(v, Scalar(1)) == f);
        CHECK(v == naive_log(f));
    }
    for (int trial = 0; trial < 6; ++trial) {
        VectorFieldJet v = hjtest::random_field(rng, 16, static_cast<int>(rng.uniform(1, 2)));
        CHECK(log_flow(exp_flow(v, Scalar(1))) == v);
    }
    CHECK_THROWS_AS(log_flow(JetDiffeo::identity(8)), calc_error);
}

TEST_CASE("is_abelian") {
    hjtest::Rng rng(34);
    VectorFieldJet v = hjtest::random_field(rng, 12);
    std::vector<JetDiffeo> flows;
    for (long s : {1, 2, 5}) flows.push_back(exp_flow(v, Scalar(s)));
    CHECK(is_abelian(JetTuple(flows)));

    std::vector<Scalar> c1{Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
    std::vector<Scalar> c2{Scalar(1), Scalar(0), Scalar(1), Scalar(0)};
    JetTuple pair({JetDiffeo::from_degree_one(c1), JetDiffeo::from_degree_one(c2)});
    CHECK(!is_abelian(pair));

    CHECK(is_abelian(JetTuple({hjtest::random_ti_jet(rng, 8)})));
}

TEST_CASE("canonical form of a tangent-to-identity jet") {
    // t + t^2 + t^3: for k = 1 no tangent-to-identity conjugation moves the
    // degree-3 coefficient, so b = 1.
    std::vector<Scalar> c{Scalar(1), Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
    JetDiffeo f = JetDiffeo::from_degree_one(c);
    CanonicalFormTI nf = canonical_form_ti(f);
    CHECK(nf.k == 1);
    CHECK(nf.a == Scalar(1));
    CHECK(nf.b == Scalar(1));
    CHECK(conjugate(nf.psi, f) == nf.normal_form);
    for (int d = 2; d <= 5; ++d) {
        if (d == 2 || d == 3) continue;
        CHECK(nf.normal_form.coeff(d).is_zero());
    }

    // already in normal form: psi = id
    std::vector<Scalar> nc(7);
    nc[0] = Scalar(1);
    nc[2] = Scalar(1);
    nc[4] = Scalar(Rational(5, 3)); // t + t^3 + 5/3 t^5, k = 2
    JetDiffeo g = JetDiffeo::from_degree_one(nc);
    CanonicalFormTI gn = canonical_form_ti(g);
    CHECK(gn.psi == JetDiffeo::identity(7));
    CHECK(gn.k == 2);
    CHECK(gn.a == Scalar(1));
    CHECK(gn.b == Scalar(Rational(5, 3)));

    // order too low: k = 3 at order 4 needs degree 7
    std::vector<Scalar> low(4);
    low[0] = Scalar(1);
    low[3] = Scalar(1);
    CHECK_THROWS_AS(canonical_form_ti(JetDiffeo::from_degree_one(low)), calc_error);
    CHECK_THROWS_AS(canonical_form_ti(JetDiffeo::identity(6)), calc_error);
}

TEST_CASE("canonical form is a conjugacy invariant") {
    hjtest::Rng rng(35);
    for (int trial = 0; trial < 10; ++trial) {
        int k = static_cast<int>(rng.uniform(1, 2));
        int order = 3 * k + 4;
        JetDiffeo f = hjtest::random_ti_jet(rng, order, k);
        CanonicalFormTI base = canonical_form_ti(f);

        JetDiffeo psi = hjtest::random_ti_jet(rng, order, 1);
        CanonicalFormTI conj = canonical_form_ti(conjugate(psi, f));
        CHECK(conj.k == base.k);
        CHECK(conj.a == base.a);
        CHECK(conj.b == base.b);

        // general linear part s: a -> a s^{-k}, b -> b s^{-2k}
        Scalar s = hjtest::small_scalar(rng, true);
        Series dil(order);
        dil.coeff_mut(1) = s;
        CanonicalFormTI scaled = canonical_form_ti(conjugate(JetDiffeo(dil), f));
        Scalar sk(1);
        for (int j = 0; j < k; ++j) sk *= s;
        CHECK(scaled.k == base.k);
        CHECK(scaled.a == base.a / sk);
        CHECK(scaled.b == base.b / (sk * sk));
    }
}
