#include <doctest.h>

#include <set>

#include "spbw/order.hpp"
#include "spbw/rational.hpp"

using namespace spbw;

TEST_CASE("deglex compares degree first, then leftmost larger exponent") {
    MonomialOrder ord = MonomialOrder::deglex(2);
    CHECK(ord.compare({2, 1}, {1, 1}) > 0); // degree 3 > 2
    CHECK(ord.compare({2, 1}, {1, 2}) > 0); // equal degree, first index decides
    CHECK(ord.compare({1, 1}, {1, 1}) == 0);
    CHECK_THROWS_AS(ord.compare({1}, {1, 1}), Error);
}

TEST_CASE("precedence permutation reorders the tie-break") {
    // y > x on exponents stored as (x, y)
    MonomialOrder ord(OrderKind::Deglex, {1, 0});
    CHECK(ord.compare({1, 0}, {0, 1}) < 0); // y beats x
}

TEST_CASE("degrevlex differs from deglex in the standard way") {
    MonomialOrder ord(OrderKind::Degrevlex, {0, 1, 2});
    // x z vs y^2: equal degree; revlex looks at the last variable first:
    // xz has z-exponent 1 > 0, so xz is smaller
    CHECK(ord.compare({1, 0, 1}, {0, 2, 0}) < 0);
    // but deglex puts xz first (x exponent decides)
    MonomialOrder dl = MonomialOrder::deglex(3);
    CHECK(dl.compare({1, 0, 1}, {0, 2, 0}) > 0);
}

TEST_CASE("module orders break ties per scheme") {
    MonomialOrder base = MonomialOrder::deglex(3);
    ModuleOrder top(base, ModuleScheme::TOP);
    ModuleOrder toprev(base, ModuleScheme::TOPREV);
    Exp yw{1, 0, 1};
    // same monomial: TOP prefers the larger index, TOPREV the smaller
    CHECK(top.compare(yw, 1, yw, 0) > 0);
    CHECK(toprev.compare(yw, 0, yw, 1) > 0);
    // monomial comparison dominates both
    Exp zw{0, 1, 1};
    CHECK(top.compare(yw, 0, zw, 1) > 0);
    CHECK(toprev.compare(yw, 1, zw, 0) > 0);
    // PosElim: index dominates, low index strongest
    ModuleOrder elim(base, ModuleScheme::PosElim);
    CHECK(elim.compare(zw, 0, yw, 1) > 0);
}

TEST_CASE("no infinite descent at bounded degree") {
    // any strictly descending chain from a degree-D monomial is bounded by
    // the number of monomials of degree <= D
    const size_t n = 4;
    const uint32_t D = 6;
    MonomialOrder ord = MonomialOrder::deglex(n);
    std::vector<Exp> all;
    Exp cur(n, 0);
    // enumerate all exponents with total degree <= D
    while (true) {
        if (total_degree(cur) <= D) all.push_back(cur);
        size_t i = 0;
        while (i < n && cur[i] == D) cur[i++] = 0;
        if (i == n) break;
        ++cur[i];
    }
    std::sort(all.begin(), all.end(),
              [&](const Exp& a, const Exp& b) { return ord.compare(a, b) > 0; });
    for (size_t i = 0; i + 1 < all.size(); ++i)
        CHECK(ord.compare(all[i], all[i + 1]) > 0);
    // chain length == number of monomials of degree <= D, and finite
    size_t expect = 1;
    for (uint32_t d = 1; d <= D; ++d) {
        // count monomials of degree exactly d in n variables: C(d+n-1, n-1)
        size_t c = 1;
        for (uint32_t k = 1; k < n; ++k) c = c * (d + k) / k;
        expect += c;
    }
    CHECK(all.size() == expect);
}
