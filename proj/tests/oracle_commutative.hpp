#ifndef SPBW_TEST_ORACLE_COMMUTATIVE_HPP
#define SPBW_TEST_ORACLE_COMMUTATIVE_HPP

// Textbook commutative Buchberger over QQ, written independently of the
// engine (own monomial/polynomial representation, classical S-polynomial
// pair loop with first-divisor-wins reduction). Test oracle only.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "spbw/rational.hpp"

namespace oracle {

using spbw::Rational;
using Mono = std::vector<uint32_t>;

struct OPoly {
    // map keyed by exponent, deglex-largest term accessed via lead()
    std::map<Mono, Rational> t;

    bool zero() const { return t.empty(); }
    void clean() {
        for (auto it = t.begin(); it != t.end();) {
            if (it->second.is_zero())
                it = t.erase(it);
            else
                ++it;
        }
    }
};

inline uint32_t deg(const Mono& m) {
    uint32_t d = 0;
    for (uint32_t x : m) d += x;
    return d;
}

inline bool deglex_less(const Mono& a, const Mono& b) {
    if (deg(a) != deg(b)) return deg(a) < deg(b);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline const std::pair<const Mono, Rational>& lead(const OPoly& p) {
    auto best = p.t.begin();
    for (auto it = p.t.begin(); it != p.t.end(); ++it)
        if (deglex_less(best->first, it->first)) best = it;
    return *best;
}

inline bool divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline OPoly mul_term(const OPoly& p, const Mono& m, const Rational& c) {
    OPoly r;
    for (const auto& [e, k] : p.t) {
        Mono e2(e.size());
        for (size_t i = 0; i < e.size(); ++i) e2[i] = e[i] + m[i];
        r.t[e2] = k * c;
    }
    return r;
}

inline OPoly sub(const OPoly& a, const OPoly& b) {
    OPoly r = a;
    for (const auto& [e, k] : b.t) {
        auto it = r.t.find(e);
        if (it == r.t.end())
            r.t[e] = -k;
        else
            it->second -= k;
    }
    r.clean();
    return r;
}

inline OPoly reduce(OPoly f, const std::vector<OPoly>& G) {
    OPoly rem;
    while (!f.zero()) {
        auto [lm, lc] = lead(f);
        bool hit = false;
        for (const auto& g : G) {
            auto [gm, gc] = lead(g);
            if (!divides(gm, lm)) continue;
            Mono q(lm.size());
            for (size_t i = 0; i < lm.size(); ++i) q[i] = lm[i] - gm[i];
            f = sub(f, mul_term(g, q, lc / gc));
            hit = true;
            break;
        }
        if (!hit) {
            rem.t[lm] = lc;
            OPoly lt;
            lt.t[lm] = lc;
            f = sub(f, lt);
        }
    }
    return rem;
}

inline std::vector<OPoly> buchberger(std::vector<OPoly> G) {
    G.erase(std::remove_if(G.begin(), G.end(), [](const OPoly& p) { return p.zero(); }),
            G.end());
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            auto [mi, ci] = lead(G[i]);
            auto [mj, cj] = lead(G[j]);
            Mono l(mi.size());
            for (size_t k = 0; k < l.size(); ++k) l[k] = std::max(mi[k], mj[k]);
            Mono qi(l.size()), qj(l.size());
            for (size_t k = 0; k < l.size(); ++k) qi[k] = l[k] - mi[k], qj[k] = l[k] - mj[k];
            OPoly s = sub(mul_term(G[i], qi, ci.inverse()), mul_term(G[j], qj, cj.inverse()));
            OPoly r = reduce(s, G);
            if (!r.zero()) G.push_back(r);
        }
    return G;
}

// minimal generating exponents of the leading-term ideal
inline std::set<Mono> staircase(const std::vector<OPoly>& G) {
    std::vector<Mono> lms;
    for (const auto& g : G)
        if (!g.zero()) lms.push_back(lead(g).first);
    std::set<Mono> out;
    for (size_t i = 0; i < lms.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < lms.size() && minimal; ++j)
            if (j != i && divides(lms[j], lms[i]) && lms[j] != lms[i]) minimal = false;
        if (minimal) out.insert(lms[i]);
    }
    return out;
}

} // namespace oracle

#endif
