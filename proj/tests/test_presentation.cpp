#include <doctest.h>

#include "fixtures.hpp"

using namespace spbw;
using fixtures::PresPtr;

TEST_CASE("diffusion presentation validates as bijective, not quasi-commutative") {
    auto ring = CoeffRing::polynomials({"x1", "x2"});
    PresentationSpec spec;
    spec.ring = ring;
    spec.vars = {"D1", "D2"};
    LinearTail tail{ring->zero(), {ring->generator(1), -ring->generator(0)}};
    spec.relations[{0, 1}] = {ring->constant(Rational(2)), tail};
    auto [p, rep] = Presentation::build(std::move(spec));
    REQUIRE(p);
    CHECK(rep.ok);
    CHECK_FALSE(rep.quasi_commutative);
}

TEST_CASE("trivial twist is quasi-commutative") {
    auto ring = CoeffRing::rationals();
    PresentationSpec spec;
    spec.ring = ring;
    spec.vars = {"x", "y"};
    auto [p, rep] = Presentation::build(std::move(spec));
    REQUIRE(p);
    CHECK(rep.quasi_commutative);
}

TEST_CASE("zero constant is rejected") {
    auto ring = CoeffRing::rationals();
    PresentationSpec spec;
    spec.ring = ring;
    spec.vars = {"x", "y"};
    spec.relations[{0, 1}] = {ring->zero(), LinearTail{ring->zero(), {}}};
    auto [p, rep] = Presentation::build(std::move(spec));
    CHECK(!p);
    REQUIRE(!rep.issues.empty());
    CHECK(rep.issues[0].find("not a unit") != std::string::npos);
}

TEST_CASE("bad sigma inverse certificate is rejected") {
    auto ring = CoeffRing::polynomials({"x"});
    PresentationSpec spec;
    spec.ring = ring;
    spec.vars = {"y"};
    spec.sigma[0] = TwistMap{{ring->generator(0).scaled(Rational(2))},
                             {ring->generator(0)}}; // wrong inverse
    auto [p, rep] = Presentation::build(std::move(spec));
    CHECK(!p);
}

TEST_CASE("leibniz violation is rejected") {
    auto ring = CoeffRing::polynomials({"a", "b"});
    PresentationSpec spec;
    spec.ring = ring;
    spec.vars = {"y"};
    // sigma(a) = a, sigma(b) = 2b with delta(a) = 1, delta(b) = 0:
    // sigma(a)delta(b) + delta(a)b = b, sigma(b)delta(a) + delta(b)a = 2b
    spec.sigma[0] = TwistMap{{ring->generator(0), ring->generator(1).scaled(Rational(2))},
                             {ring->generator(0), ring->generator(1).scaled(Rational(1, 2))}};
    spec.delta[0] = SkewDerivation{{ring->one(), ring->zero()}};
    auto [p, rep] = Presentation::build(std::move(spec));
    CHECK(!p);
}

TEST_CASE("sigma_alpha on the R-algebra") {
    PresPtr p = fixtures::ralgebra();
    auto ring = p->ring();
    CPoly x = ring->generator(0);
    // sigma_2(x) = 2x  (alpha = (0,1,0))
    CHECK(p->sigma_alpha({0, 1, 0}, x) == x.scaled(Rational(2)));
    // sigma^0 = id
    CHECK(p->sigma_alpha({0, 0, 0}, x) == x);
    // sigma_1^2(x) = 9/4 x
    CHECK(p->sigma_alpha({2, 0, 0}, x) == x.scaled(Rational(9, 4)));
}

TEST_CASE("structure constants") {
    PresPtr r = fixtures::ralgebra();
    // z * yw = 2/3 yzw
    auto [c, tail] = r->structure_constants({0, 1, 0}, {1, 0, 1});
    CHECK(c == r->ring()->constant(Rational(2, 3)));
    CHECK(tail.empty());

    // alpha = 0 gives c = 1, tail 0
    auto [c0, t0] = r->structure_constants({0, 0, 0}, {2, 1, 0});
    CHECK(c0.is_one());
    CHECK(t0.empty());

    PresPtr d = fixtures::diffusion();
    auto [cd, td] = d->structure_constants({0, 1}, {1, 0});
    CHECK(cd == d->ring()->constant(Rational(2)));
    // tail = x2 D1 - x1 D2
    NCPoly tail_poly = NCPoly::from_terms(d, TermList(td));
    NCPoly want = NCPoly::monomial(d, {1, 0}, d->ring()->generator(1)) -
                  NCPoly::monomial(d, {0, 1}, d->ring()->generator(0));
    CHECK(tail_poly == want);
}

TEST_CASE("associated quasi-commutative extension") {
    PresPtr d = fixtures::diffusion();
    auto q = d->associated_quasicommutative();
    CHECK(q->quasi_commutative());
    CHECK(q->c(0, 1) == d->c(0, 1));
    auto [c, tail] = q->structure_constants({0, 1}, {1, 0});
    CHECK(c == q->ring()->constant(Rational(2)));
    CHECK(tail.empty());

    // fixpoint on an already quasi-commutative presentation
    PresPtr qp = fixtures::quantum_plane();
    auto q2 = qp->associated_quasicommutative();
    CHECK(q2->quasi_commutative());
    CHECK(q2->c(0, 1) == qp->c(0, 1));

    // R-algebra: the yw tail is dropped, other constants kept
    PresPtr r = fixtures::ralgebra();
    auto rq = r->associated_quasicommutative();
    CHECK(rq->quasi_commutative());
    CHECK(rq->d(0, 2).is_zero());
    CHECK(rq->c(0, 1) == r->c(0, 1));
    CHECK(rq->c(1, 2) == r->c(1, 2));
}

static void check_identities(const PresPtr& p, uint32_t cap) {
    const size_t n = p->nvars();
    const auto& ring = p->ring();
    std::vector<Exp> grid;
    Exp cur(n, 0);
    while (true) {
        grid.push_back(cur);
        size_t i = 0;
        while (i < n && cur[i] == cap) cur[i++] = 0;
        if (i == n) break;
        ++cur[i];
    }
    size_t checks = 0;
    for (const Exp& th : grid)
        for (const Exp& ga : grid)
            for (const Exp& be : grid) {
                auto [c_gb, t1] = p->structure_constants(ga, be);
                auto [c_tgb, t2] = p->structure_constants(th, exp_add(ga, be));
                auto [c_tg, t3] = p->structure_constants(th, ga);
                auto [c_tgb2, t4] = p->structure_constants(exp_add(th, ga), be);
                CHECK(p->sigma_alpha(th, c_gb) * c_tgb == c_tg * c_tgb2);
                for (size_t k = 0; k < ring->generator_count(); ++k) {
                    CPoly c = ring->generator(k);
                    CHECK(p->sigma_alpha(th, p->sigma_alpha(ga, c)) * c_tg ==
                          c_tg * p->sigma_alpha(exp_add(th, ga), c));
                }
                ++checks;
            }
    CHECK(checks == grid.size() * grid.size() * grid.size());
}

TEST_CASE("structure-constant identities hold on the sampled grid") {
    check_identities(fixtures::diffusion(), 2);
    check_identities(fixtures::ralgebra(), 1);
}

TEST_CASE("sigma_alpha composes additively") {
    PresPtr r = fixtures::ralgebra();
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Exp a(3), b(3);
        for (size_t i = 0; i < 3; ++i) a[i] = rng() % 3, b[i] = rng() % 3;
        CPoly c = fixtures::random_cpoly(rng, 1, 3, 3);
        CHECK(r->sigma_alpha(exp_add(a, b), c) == r->sigma_alpha(a, r->sigma_alpha(b, c)));
    }
}
