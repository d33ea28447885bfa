#ifndef SPBW_GROEBNER_HPP
#define SPBW_GROEBNER_HPP

#include <optional>
#include <vector>

#include "spbw/poly.hpp"

namespace spbw {

struct DivisionOptions {
    bool trace = false;
};

// f = sum q_i f_i + h with h reduced w.r.t. the divisors and
// lm(f) = max{lm(lm(q_i) lm(f_i)), lm(h)}.
struct DivisionResult {
    std::vector<NCPoly> quotients;
    NCPoly remainder;
    std::vector<std::string> trace;
};

DivisionResult divide(const NCPoly& f, const std::vector<NCPoly>& divisors,
                      const DivisionOptions& opt = {});

// One reduction step: h = f - sum r_i x^{alpha_i} f_i killing lt(f), or
// nullopt when f is reduced w.r.t. F.
std::optional<NCPoly> reduce_once(const NCPoly& f, const std::vector<NCPoly>& F);

// B_F data for a subset F: X_F, the offsets gamma_i, the lcm-scaled leading
// scalars sigma^{gamma_i}(lc g_i) c_{gamma_i,beta_i}, and generators of their
// syzygy module.
struct BFData {
    Exp xf_exp;
    std::vector<Exp> gammas;
    std::vector<CPoly> scaled_lcs;
    std::vector<std::vector<CPoly>> generators;
};

BFData bf_set(const std::vector<NCPoly>& F);

struct BuchbergerOptions {
    size_t max_basis = 128;
    uint32_t max_degree = 128;
    bool pairs_only = false;   // restrict subset enumeration to size <= 2
    bool interreduce = false;  // optional post-pass
    bool track = false;        // carry certificates in terms of the input
    bool trace = false;
};

struct BuchbergerResult {
    std::vector<NCPoly> basis;
    // certificates[k][i]: basis[k] = sum_i certificates[k][i] * gens[i]
    std::vector<std::vector<NCPoly>> certificates;
    size_t rounds = 0;
    std::vector<std::string> trace;
};

BuchbergerResult buchberger(const std::vector<NCPoly>& gens, const BuchbergerOptions& opt = {});

struct MembershipResult {
    bool member = false;
    std::vector<NCPoly> certificate; // quotients against the basis
};

// G must be a Groebner basis (verified or produced by buchberger).
MembershipResult is_member(const NCPoly& f, const std::vector<NCPoly>& G);

} // namespace spbw

#endif
