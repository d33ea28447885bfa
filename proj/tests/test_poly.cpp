#include <doctest.h>

#include "fixtures.hpp"

using namespace spbw;
using fixtures::PresPtr;

TEST_CASE("diffusion relation: D2 * D1") {
    PresPtr d = fixtures::diffusion();
    NCPoly D1 = NCPoly::variable(d, 0);
    NCPoly D2 = NCPoly::variable(d, 1);
    NCPoly x1 = NCPoly::coeff(d, d->ring()->generator(0));
    NCPoly x2 = NCPoly::coeff(d, d->ring()->generator(1));

    NCPoly want = (D1 * D2).left_scale(d->ring()->constant(Rational(2))) + x2 * D1 - x1 * D2;
    CHECK(D2 * D1 == want);
    CHECK((D2 * D1).str() == "2*D1*D2 + x2*D1 - x1*D2");
}

TEST_CASE("R-algebra relation: w * y = yw - 5/6 xz") {
    PresPtr r = fixtures::ralgebra();
    NCPoly y = NCPoly::variable(r, 0);
    NCPoly z = NCPoly::variable(r, 1);
    NCPoly w = NCPoly::variable(r, 2);
    CPoly x = r->ring()->generator(0);

    NCPoly want = y * w - (z.left_scale(x.scaled(Rational(5, 6))));
    CHECK(w * y == want);
}

TEST_CASE("unit and zero laws") {
    PresPtr d = fixtures::diffusion();
    std::mt19937_64 rng(11);
    NCPoly f = fixtures::random_nonzero_poly(rng, d, 4, 3);
    CHECK(NCPoly::one(d) * f == f);
    CHECK(f * NCPoly::one(d) == f);
    CHECK((NCPoly::zero(d) * f).is_zero());
    CHECK((f + (-f)).is_zero());
}

TEST_CASE("left_scale acts freely on basis monomials") {
    PresPtr d = fixtures::diffusion();
    CPoly x2 = d->ring()->generator(1);
    NCPoly D1 = NCPoly::variable(d, 0);
    NCPoly s = D1.left_scale(x2.scaled(Rational(3)));
    CHECK(s.terms().size() == 1);
    CHECK(s.str() == "(3*x2)*D1");
}

TEST_CASE("like terms merge") {
    PresPtr t = fixtures::trivial({"x", "y", "w"});
    NCPoly x = NCPoly::variable(t, 0);
    NCPoly y = NCPoly::variable(t, 1);
    NCPoly w = NCPoly::variable(t, 2);
    NCPoly s = x * (y * w) + x * (y * w);
    CHECK(s.terms().size() == 1);
    CHECK(s.lc() == t->ring()->constant(Rational(2)));
}

TEST_CASE("leading data") {
    PresPtr d = fixtures::diffusion();
    CPoly x1 = d->ring()->generator(0);
    CPoly x2 = d->ring()->generator(1);
    NCPoly f = NCPoly::monomial(d, {2, 1}, x1 * x2 * x2) + NCPoly::monomial(d, {0, 1}, x1 * x1 * x2);
    LeadingData ld = f.leading_data();
    REQUIRE_FALSE(ld.zero);
    CHECK(ld.lm == Exp{2, 1});
    CHECK(ld.lc == x1 * x2 * x2);

    LeadingData z = NCPoly::zero(d).leading_data();
    CHECK(z.zero);

    NCPoly c = NCPoly::coeff(d, d->ring()->constant(Rational(5)));
    LeadingData lc5 = c.leading_data();
    CHECK(exp_is_zero(lc5.lm));
    CHECK(lc5.lc == d->ring()->constant(Rational(5)));
}

static void check_associativity(const PresPtr& p, int rounds, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < rounds; ++t) {
        NCPoly f = fixtures::random_poly(rng, p, 3, 3);
        NCPoly g = fixtures::random_poly(rng, p, 3, 3);
        NCPoly h = fixtures::random_poly(rng, p, 3, 3);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("associativity on random triples") {
    check_associativity(fixtures::diffusion(), 100, 101);
    check_associativity(fixtures::ralgebra(), 100, 102);
    check_associativity(fixtures::weyl(), 100, 103);
}

TEST_CASE("left distributivity and R-bilinearity") {
    PresPtr d = fixtures::diffusion();
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        NCPoly f = fixtures::random_poly(rng, d, 3, 3);
        NCPoly fp = fixtures::random_poly(rng, d, 3, 3);
        NCPoly g = fixtures::random_poly(rng, d, 3, 3);
        CPoly r = fixtures::random_cpoly(rng, 2, 2, 2);
        CHECK((f.left_scale(r) + fp) * g == (f * g).left_scale(r) + fp * g);
    }
}

TEST_CASE("lm of monomial times poly is multiplicative") {
    for (const PresPtr& p : {fixtures::diffusion(), fixtures::ralgebra(), fixtures::weyl_q()}) {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 100; ++t) {
            NCPoly g = fixtures::random_nonzero_poly(rng, p, 3, 3);
            Exp a(p->nvars());
            for (size_t i = 0; i < a.size(); ++i) a[i] = rng() % 3;
            NCPoly prod = NCPoly::monomial(p, a, p->ring()->one()) * g;
            REQUIRE_FALSE(prod.is_zero());
            CHECK(prod.lm_exp() == exp_add(a, g.lm_exp()));
        }
    }
}

TEST_CASE("degree is additive over a domain") {
    for (const PresPtr& p : {fixtures::diffusion(), fixtures::ralgebra()}) {
        std::mt19937_64 rng(41);
        for (int t = 0; t < 100; ++t) {
            NCPoly f = fixtures::random_nonzero_poly(rng, p, 3, 3);
            NCPoly g = fixtures::random_nonzero_poly(rng, p, 3, 3);
            CHECK((f * g).degree() == f.degree() + g.degree());
        }
    }
}

TEST_CASE("quasi-commutative products of terms stay single terms") {
    PresPtr qp = fixtures::quantum_plane();
    std::mt19937_64 rng(51);
    for (int t = 0; t < 100; ++t) {
        Exp a{uint32_t(rng() % 4), uint32_t(rng() % 4)};
        Exp b{uint32_t(rng() % 4), uint32_t(rng() % 4)};
        NCPoly prod = NCPoly::monomial(qp, a, qp->ring()->constant(Rational(3, 2))) *
                      NCPoly::monomial(qp, b, qp->ring()->one());
        CHECK(prod.terms().size() == 1);
        auto [c, tail] = qp->structure_constants(a, b);
        CHECK(tail.empty());
        CHECK(!c.is_zero());
    }
}

TEST_CASE("rendering matches the documented canonical form") {
    PresPtr d = fixtures::diffusion();
    CPoly x1 = d->ring()->generator(0);
    CPoly x2 = d->ring()->generator(1);
    NCPoly f = NCPoly::monomial(d, {1, 0}, x2.scaled(Rational(3))) -
               NCPoly::coeff(d, (x1 * x2).scaled(Rational(3)));
    CHECK(f.str() == "(3*x2)*D1 - (3*x1*x2)");
    CHECK(NCPoly::zero(d).str() == "0");
    CHECK(NCPoly::coeff(d, d->ring()->constant(Rational(5))).str() == "5");
    CHECK(NCPoly::monomial(d, {1, 2}, d->ring()->one()).str() == "D1*D2^2");
}
