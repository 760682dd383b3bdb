#include "holojet/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>

namespace holojet {

const char* errc_name(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::non_vanishing_inner: return "NonVanishingInner";
        case errc::not_invertible: return "NotInvertible";
        case errc::not_tangent_to_identity: return "NotTangentToIdentity";
        case errc::identity_has_no_leading_term: return "IdentityHasNoLeadingTerm";
        case errc::order_too_low_for_normal_form: return "OrderTooLowForNormalForm";
        case errc::walk_not_in_nerve: return "WalkNotInNerve";
        case errc::ambiguous_edge: return "AmbiguousEdge";
        case errc::pairs_coincide: return "PairsCoincide";
        case errc::holomorphicity_violated: return "HolomorphicityViolated";
        case errc::series_coincide: return "SeriesCoincide";
        case errc::extra_tangency: return "ExtraTangency";
        case errc::wrong_divisor: return "WrongDivisor";
        case errc::square_root_not_in_field: return "SquareRootNotInField";
        case errc::not_canonical_pair: return "NotCanonicalPair";
        case errc::foliations_coincide: return "FoliationsCoincide";
        case errc::degenerate_omega: return "DegenerateOmega";
        case errc::realizability_failed: return "RealizabilityFailed";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

std::string Scalar::str() const {
    auto rat = [](const Rational& q) { return q.get_str(); };
    if (im_ == 0) return rat(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rat(im_) + "*i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rat(re_) + "+" + imag;
    // negative imaginary part: reuse the sign carried by `imag`
    return rat(re_) + imag;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

Rational parse_rational(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    if (cur.pos < cur.s.size() && (cur.s[cur.pos] == '+' || cur.s[cur.pos] == '-')) ++cur.pos;
    size_t digits = 0;
    while (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
        ++cur.pos;
        ++digits;
    }
    if (digits == 0) fail(errc::parse_error, "expected integer in scalar");
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == '/') {
        ++cur.pos;
        size_t den_digits = 0;
        while (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
            ++cur.pos;
            ++den_digits;
        }
        if (den_digits == 0) fail(errc::parse_error, "expected denominator");
    }
    Rational q;
    if (q.set_str(std::string(cur.s.substr(start, cur.pos - start)), 10) != 0)
        fail(errc::parse_error, "bad rational");
    if (q.get_den() == 0) fail(errc::parse_error, "zero denominator");
    q.canonicalize();
    return q;
}

// One signed term: either a rational, possibly times i, or a bare i.
struct Term {
    Rational value;
    bool imaginary;
};

Term parse_term(Cursor& cur) {
    cur.skip_ws();
    int sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
        if (cur.s[cur.pos] == '-') sign = -1;
        ++cur.pos;
        cur.skip_ws();
    }
    if (cur.peek() == 'i') {
        ++cur.pos;
        return {Rational(sign), true};
    }
    Rational q = parse_rational(cur);
    if (sign < 0) q = -q;
    cur.skip_ws();
    bool imag = false;
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == '*') {
        ++cur.pos;
        cur.skip_ws();
        if (cur.pos >= cur.s.size() || cur.s[cur.pos] != 'i')
            fail(errc::parse_error, "expected 'i' after '*'");
        ++cur.pos;
        imag = true;
    } else if (cur.pos < cur.s.size() && cur.s[cur.pos] == 'i') {
        ++cur.pos;
        imag = true;
    }
    return {q, imag};
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    Cursor cur{text};
    Term first = parse_term(cur);
    if (cur.done()) {
        return first.imaginary ? Scalar(Rational(0), first.value) : Scalar(first.value);
    }
    char c = cur.peek();
    if (c != '+' && c != '-') fail(errc::parse_error, "trailing characters in scalar");
    Term second = parse_term(cur);
    if (!cur.done()) fail(errc::parse_error, "trailing characters in scalar");
    if (first.imaginary || !second.imaginary)
        fail(errc::parse_error, "expected re then im*i");
    return Scalar(first.value, second.value);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::vector<Scalar> square_roots(const Scalar& q) {
    std::vector<Scalar> out;
    if (q.is_zero()) {
        out.push_back(Scalar());
        return out;
    }
    if (q.is_real()) {
        if (auto r = rational_sqrt(q.re())) {
            out.emplace_back(-*r);
            out.emplace_back(*r);
        } else if (auto ri = rational_sqrt(-q.re())) {
            out.emplace_back(Rational(0), -*ri);
            out.emplace_back(Rational(0), *ri);
        }
    } else {
        // s = u + iv, u^2 - v^2 = x, 2uv = y, u^2 + v^2 = |q|.
        auto n = rational_sqrt(q.norm2());
        if (!n) return out;
        auto u2 = rational_sqrt((q.re() + *n) / 2);
        if (!u2 || *u2 == 0) return out;
        Rational v = q.im() / (2 * *u2);
        out.emplace_back(Scalar(*u2, v));
        out.emplace_back(Scalar(-*u2, -v));
    }
    std::sort(out.begin(), out.end(), Scalar::lex_less);
    return out;
}

namespace {

struct GInt {
    mpz_class re, im;
};

GInt gmul(const GInt& a, const GInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt gpow(GInt base, unsigned long e) {
    GInt r{1, 0};
    while (e) {
        if (e & 1) r = gmul(r, base);
        base = gmul(base, base);
        e >>= 1;
    }
    return r;
}

// Fixed-point complex value x = (re + i*im) / 2^frac_bits.
struct FPC {
    mpz_class re, im;
};

FPC fp_mul(const FPC& a, const FPC& b, unsigned frac_bits) {
    mpz_class r = a.re * b.re - a.im * b.im;
    mpz_class i = a.re * b.im + a.im * b.re;
    r >>= frac_bits;
    i >>= frac_bits;
    return {r, i};
}

// Exact m-th root of a Gaussian integer, m odd.  Newton iteration in
// fixed point seeded from a double approximation, then exact
// verification; roots of odd order are unique in Q(i).
std::optional<GInt> gaussian_odd_root(const GInt& a, unsigned m) {
    if (a.re == 0 && a.im == 0) return GInt{0, 0};
    if (m == 1) return a;
    mpz_class n2 = a.re * a.re + a.im * a.im;
    mpz_class nroot;
    if (mpz_root(nroot.get_mpz_t(), n2.get_mpz_t(), m) == 0) return std::nullopt;

    // Seed: scale a by 2^(-m*j) so it fits a double, take the principal
    // m-th root, scale back by 2^j.  The Q(i) root, when it exists, is one
    // of the m rotations of the principal root; exact verification at the
    // end selects it.
    size_t bits = std::max(mpz_sizeinbase(a.re.get_mpz_t(), 2), mpz_sizeinbase(a.im.get_mpz_t(), 2));
    unsigned long j = 0;
    if (bits > 512) j = (bits - 512) / m + 1;
    mpz_class sre = a.re >> (m * j), sim = a.im >> (m * j);
    std::complex<double> approx(sre.get_d(), sim.get_d());
    std::complex<double> principal = std::pow(approx, 1.0 / static_cast<double>(m));

    const unsigned frac = 128;
    auto to_fp = [&](double v) {
        mpf_class f(v, 2 * frac);
        mpf_mul_2exp(f.get_mpf_t(), f.get_mpf_t(), frac);
        mpz_class z;
        mpz_set_f(z.get_mpz_t(), f.get_mpf_t());
        return z;
    };
    auto round_fp = [&](const mpz_class& v) {
        mpz_class half = mpz_class(1) << (frac - 1);
        mpz_class shifted = v + half;
        mpz_fdiv_q_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(), frac);
        return shifted;
    };

    FPC afp{a.re << frac, a.im << frac};
    const double two_pi = 6.283185307179586;
    for (unsigned rot = 0; rot < m; ++rot) {
        std::complex<double> phase =
            std::polar(1.0, two_pi * static_cast<double>(rot) / static_cast<double>(m));
        std::complex<double> seed = principal * phase;
        FPC x{to_fp(seed.real()), to_fp(seed.imag())};
        x.re <<= j;
        x.im <<= j;
        if (x.re == 0 && x.im == 0) x.re = mpz_class(1) << frac;

        for (int iter = 0; iter < 64; ++iter) {
            // w = x^(m-1)
            FPC w{mpz_class(1) << frac, 0};
            FPC base = x;
            unsigned long e = m - 1;
            while (e) {
                if (e & 1) w = fp_mul(w, base, frac);
                base = fp_mul(base, base, frac);
                e >>= 1;
            }
            mpz_class wn = w.re * w.re + w.im * w.im;
            if (wn == 0) break;
            // q = a / w in fixed point
            mpz_class qr = (afp.re * w.re + afp.im * w.im);
            mpz_class qi = (afp.im * w.re - afp.re * w.im);
            qr = (qr << frac) / wn;
            qi = (qi << frac) / wn;
            FPC next{(mpz_class(m - 1) * x.re + qr) / m, (mpz_class(m - 1) * x.im + qi) / m};
            mpz_class dr = next.re - x.re, di = next.im - x.im;
            x = next;
            if (abs(dr) <= 2 && abs(di) <= 2) break;
        }

        mpz_class cr = round_fp(x.re), ci = round_fp(x.im);
        for (long dr = -1; dr <= 1; ++dr) {
            for (long di = -1; di <= 1; ++di) {
                GInt cand{cr + dr, ci + di};
                GInt p = gpow(cand, m);
                if (p.re == a.re && p.im == a.im) return cand;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<Scalar> kth_roots(const Scalar& q, int k) {
    if (k < 1) fail(errc::invalid_argument, "root order must be positive");
    if (q.is_zero()) fail(errc::invalid_argument, "kth_roots of zero");
    unsigned m = static_cast<unsigned>(k);
    unsigned twos = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++twos;
    }

    std::vector<Scalar> current;
    if (m == 1) {
        current.push_back(q);
    } else {
        // Clear denominators: with dq minimal such that dq*q is a Gaussian
        // integer, any m-th root s satisfies (s*dq)^m = (dq*q) * dq^(m-1),
        // and s*dq is a Gaussian integer since Z[i] is integrally closed.
        mpz_class dq = lcm(q.re().get_den(), q.im().get_den());
        GInt a{q.re().get_num() * (dq / q.re().get_den()),
               q.im().get_num() * (dq / q.im().get_den())};
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), dq.get_mpz_t(), m - 1);
        a.re *= scale;
        a.im *= scale;
        auto sigma = gaussian_odd_root(a, m);
        if (!sigma) return {};
        Rational re(sigma->re, dq), im(sigma->im, dq);
        re.canonicalize();
        im.canonicalize();
        current.emplace_back(re, im);
    }

    for (unsigned level = 0; level < twos; ++level) {
        std::vector<Scalar> next;
        for (const Scalar& s : current) {
            auto roots = square_roots(s);
            next.insert(next.end(), roots.begin(), roots.end());
        }
        current = std::move(next);
        if (current.empty()) return current;
    }
    std::sort(current.begin(), current.end(), Scalar::lex_less);
    current.erase(std::unique(current.begin(), current.end()), current.end());
    return current;
}

} // namespace holojet
