#ifndef SPBW_TEST_FIXTURES_HPP
#define SPBW_TEST_FIXTURES_HPP

#include <random>

#include "spbw/groebner.hpp"
#include "spbw/modules.hpp"

namespace fixtures {

using namespace spbw;

using PresPtr = std::shared_ptr<const Presentation>;

// Diffusion algebra over QQ[x1,x2] with D2 D1 = 2 D1 D2 + x2 D1 - x1 D2.
inline PresPtr diffusion() {
    auto ring = CoeffRing::polynomials({"x1", "x2"});
    PresentationSpec spec;
    spec.ring = ring;
    spec.vars = {"D1", "D2"};
    LinearTail tail{ring->zero(), {ring->generator(1), -ring->generator(0)}};
    spec.relations[{0, 1}] = {ring->constant(Rational(2)), tail};
    auto [p, rep] = Presentation::build(std::move(spec));
    if (!p) throw Error("diffusion fixture: " + rep.str());
    return p;
}

// sigma(QQ[x])<y,z,w> with q = 2/3, mu = 1/2:
//   zy = (2/3) yz, wz = (1/3) zw, wy = yw - (5/6) xz,
//   sigma_y(x) = 3/2 x, sigma_z(x) = 2x, sigma_w(x) = 4/3 x.
// The w-constants are the unique choice (sigma_w = q/mu, c_zw = q*mu) that
// keeps the overlap words w z y and w y x confluent for mu != 1; they reduce
// to q and q at mu = 1.
inline PresPtr ralgebra() {
    auto ring = CoeffRing::polynomials({"x"});
    PresentationSpec spec;
    spec.ring = ring;
    spec.vars = {"y", "z", "w"};
    auto scale = [&](Rational r) {
        return TwistMap{{ring->generator(0).scaled(r)}, {ring->generator(0).scaled(r.inverse())}};
    };
    spec.sigma[0] = scale(Rational(3, 2));
    spec.sigma[1] = scale(Rational(2));
    spec.sigma[2] = scale(Rational(4, 3));
    Rational q(2, 3);
    spec.relations[{0, 1}] = {ring->constant(q), LinearTail{ring->zero(), {}}};
    spec.relations[{1, 2}] = {ring->constant(Rational(1, 3)), LinearTail{ring->zero(), {}}};
    LinearTail wy_tail{ring->zero(),
                       {ring->zero(), ring->generator(0).scaled(Rational(-5, 6)), ring->zero()}};
    spec.relations[{0, 2}] = {ring->one(), wy_tail};
    auto [p, rep] = Presentation::build(std::move(spec));
    if (!p) throw Error("ralgebra fixture: " + rep.str());
    return p;
}

// First Weyl algebra A_1(QQ) presented over QQ[t]: x t = t x + 1.
inline PresPtr weyl() {
    auto ring = CoeffRing::polynomials({"t"});
    PresentationSpec spec;
    spec.ring = ring;
    spec.vars = {"x"};
    spec.delta[0] = SkewDerivation{{ring->one()}};
    auto [p, rep] = Presentation::build(std::move(spec));
    if (!p) throw Error("weyl fixture: " + rep.str());
    return p;
}

// Additive analogue A_1(q) with q = 2 over QQ[x]: y x = 2 x y + 1.
inline PresPtr weyl_q() {
    auto ring = CoeffRing::polynomials({"x"});
    PresentationSpec spec;
    spec.ring = ring;
    spec.vars = {"y"};
    spec.sigma[0] = TwistMap{{ring->generator(0).scaled(Rational(2))},
                             {ring->generator(0).scaled(Rational(1, 2))}};
    spec.delta[0] = SkewDerivation{{ring->one()}};
    auto [p, rep] = Presentation::build(std::move(spec));
    if (!p) throw Error("weyl_q fixture: " + rep.str());
    return p;
}

// Quantum plane over QQ: y x = 2 x y.
inline PresPtr quantum_plane() {
    auto ring = CoeffRing::rationals();
    PresentationSpec spec;
    spec.ring = ring;
    spec.vars = {"x", "y"};
    spec.relations[{0, 1}] = {ring->constant(Rational(2)), LinearTail{ring->zero(), {}}};
    auto [p, rep] = Presentation::build(std::move(spec));
    if (!p) throw Error("quantum plane fixture: " + rep.str());
    return p;
}

// Trivial twist: commutative QQ[vars...] as a skew PBW extension of QQ.
inline PresPtr trivial(std::vector<std::string> vars) {
    PresentationSpec spec;
    spec.ring = CoeffRing::rationals();
    spec.vars = std::move(vars);
    auto [p, rep] = Presentation::build(std::move(spec));
    if (!p) throw Error("trivial fixture: " + rep.str());
    return p;
}

// deterministic random data helpers
inline CPoly random_cpoly(std::mt19937_64& rng, size_t nvars, int max_terms, uint32_t max_deg) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<uint32_t> dg(0, max_deg);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<CPoly::Term> terms;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exp e(nvars, 0);
        uint32_t budget = dg(rng);
        for (uint32_t u = 0; u < budget && nvars; ++u) e[rng() % nvars] += 1;
        terms.emplace_back(std::move(e), Rational(num(rng), den(rng)));
    }
    return CPoly::from_terms(nvars, std::move(terms));
}

inline NCPoly random_poly(std::mt19937_64& rng, const PresPtr& pres, int max_terms,
                          uint32_t max_deg, int coeff_terms = 2, uint32_t coeff_deg = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<uint32_t> dg(0, max_deg);
    const size_t n = pres->nvars();
    const size_t m = pres->ring()->generator_count();
    TermList terms;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exp e(n, 0);
        uint32_t budget = dg(rng);
        for (uint32_t u = 0; u < budget; ++u) e[rng() % n] += 1;
        CPoly c = random_cpoly(rng, m, coeff_terms, coeff_deg);
        if (c.is_zero()) continue;
        terms.emplace_back(std::move(e), std::move(c));
    }
    return NCPoly::from_terms(pres, std::move(terms));
}

inline NCPoly random_nonzero_poly(std::mt19937_64& rng, const PresPtr& pres, int max_terms,
                                  uint32_t max_deg) {
    for (int tries = 0; tries < 64; ++tries) {
        NCPoly f = random_poly(rng, pres, max_terms, max_deg);
        if (!f.is_zero()) return f;
    }
    return NCPoly::one(pres);
}

} // namespace fixtures

#endif
