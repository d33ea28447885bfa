#include "spbw/groebner.hpp"

#include <algorithm>

namespace spbw {

namespace {

void check_divisors(const NCPoly& f, const std::vector<NCPoly>& divisors) {
    if (divisors.empty()) throw Error("division needs at least one divisor");
    for (const auto& d : divisors) {
        if (d.is_zero()) throw Error("zero divisor polynomial");
        require_same_presentation(f, d);
    }
}

// lcm-scaled leading scalar of g shifted by alpha:
// sigma^alpha(lc(g)) * c_{alpha, exp(lm(g))}
CPoly scaled_lc(const Presentation& pres, const Exp& alpha, const NCPoly& g) {
    auto [cab, tail] = pres.structure_constants(alpha, g.lm_exp());
    (void)tail;
    return pres.sigma_alpha(alpha, g.lc()) * cab;
}

} // namespace

DivisionResult divide(const NCPoly& f, const std::vector<NCPoly>& divisors,
                      const DivisionOptions& opt) {
    check_divisors(f, divisors);
    const auto& pres = f.pres();
    const auto& ring = pres->ring();

    DivisionResult out;
    out.quotients.assign(divisors.size(), NCPoly::zero(pres));
    NCPoly h = f;
    size_t step = 0;
    while (!h.is_zero()) {
        const Exp hl = h.lm_exp();
        std::vector<size_t> J;
        for (size_t j = 0; j < divisors.size(); ++j)
            if (exp_divides(divisors[j].lm_exp(), hl)) J.push_back(j);
        if (J.empty()) break;

        std::vector<Exp> alphas;
        std::vector<CPoly> weights;
        alphas.reserve(J.size());
        weights.reserve(J.size());
        for (size_t j : J) {
            Exp a = exp_sub(hl, divisors[j].lm_exp());
            weights.push_back(scaled_lc(*pres, a, divisors[j]));
            alphas.push_back(std::move(a));
        }
        auto cert = ring->divide_member(h.lc(), weights);
        if (!cert) break; // stop branch: the coefficient equation is unsolvable, h is reduced

        ++step;
        for (size_t k = 0; k < J.size(); ++k) {
            if ((*cert)[k].is_zero()) continue;
            NCPoly piece = NCPoly::monomial(pres, alphas[k], (*cert)[k]);
            out.quotients[J[k]] += piece;
            h -= piece * divisors[J[k]];
        }
        if (opt.trace) {
            std::string line = "step " + std::to_string(step) + ": h = " + h.str();
            out.trace.push_back(std::move(line));
        }
        if (!h.is_zero() && !(pres->order().compare(h.lm_exp(), hl) < 0))
            throw Error("division step failed to lower the leading monomial");
    }
    out.remainder = h;
    return out;
}

std::optional<NCPoly> reduce_once(const NCPoly& f, const std::vector<NCPoly>& F) {
    if (F.empty()) throw Error("reduction needs a nonempty divisor set");
    if (f.is_zero()) return std::nullopt;
    check_divisors(f, F);
    const auto& pres = f.pres();

    const Exp hl = f.lm_exp();
    std::vector<size_t> J;
    for (size_t j = 0; j < F.size(); ++j)
        if (exp_divides(F[j].lm_exp(), hl)) J.push_back(j);
    if (J.empty()) return std::nullopt;

    std::vector<Exp> alphas;
    std::vector<CPoly> weights;
    for (size_t j : J) {
        Exp a = exp_sub(hl, F[j].lm_exp());
        weights.push_back(scaled_lc(*pres, a, F[j]));
        alphas.push_back(std::move(a));
    }
    auto cert = pres->ring()->divide_member(f.lc(), weights);
    if (!cert) return std::nullopt;

    NCPoly h = f;
    for (size_t k = 0; k < J.size(); ++k) {
        if ((*cert)[k].is_zero()) continue;
        h -= NCPoly::monomial(pres, alphas[k], (*cert)[k]) * F[J[k]];
    }
    return h;
}

BFData bf_set(const std::vector<NCPoly>& F) {
    if (F.empty()) throw Error("B_F needs a nonempty subset");
    for (const auto& g : F)
        if (g.is_zero()) throw Error("B_F subset contains zero");
    const auto& pres = F.front().pres();

    BFData data;
    data.xf_exp = F.front().lm_exp();
    for (const auto& g : F) data.xf_exp = exp_lcm(data.xf_exp, g.lm_exp());
    for (const auto& g : F) {
        Exp gamma = exp_sub(data.xf_exp, g.lm_exp());
        data.scaled_lcs.push_back(scaled_lc(*pres, gamma, g));
        data.gammas.push_back(std::move(gamma));
    }
    data.generators = pres->ring()->syzygy_generators(data.scaled_lcs);
    return data;
}

BuchbergerResult buchberger(const std::vector<NCPoly>& gens, const BuchbergerOptions& opt) {
    if (gens.empty()) throw Error("buchberger needs at least one generator");
    for (const auto& g : gens)
        if (g.is_zero()) throw Error("buchberger generators must be nonzero");
    const auto& pres = gens.front().pres();
    for (const auto& g : gens) require_same_presentation(gens.front(), g);

    BuchbergerResult out;
    out.basis = gens;
    if (opt.track) {
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<NCPoly> row(gens.size(), NCPoly::zero(pres));
            row[i] = NCPoly::one(pres);
            out.certificates.push_back(std::move(row));
        }
    }

    size_t old_size = 0;
    while (old_size < out.basis.size()) {
        ++out.rounds;
        const size_t cur = out.basis.size();
        const size_t max_subset = opt.pairs_only ? std::min<size_t>(2, cur) : cur;

        // P(G') - P(G): subsets touching at least one element added last
        // round, enumerated by size then lexicographically.
        std::vector<size_t> subset;
        auto process = [&](const std::vector<size_t>& S) {
            std::vector<NCPoly> sub;
            sub.reserve(S.size());
            for (size_t idx : S) sub.push_back(out.basis[idx]);
            BFData bf = bf_set(sub);
            for (const auto& b : bf.generators) {
                NCPoly combo = NCPoly::zero(pres);
                for (size_t k = 0; k < S.size(); ++k) {
                    if (b[k].is_zero()) continue;
                    combo += NCPoly::monomial(pres, bf.gammas[k], b[k]) * out.basis[S[k]];
                }
                if (combo.is_zero()) continue;
                DivisionResult div = divide(combo, out.basis);
                if (div.remainder.is_zero()) continue;
                if (out.basis.size() + 1 > opt.max_basis)
                    throw ResourceLimit("basis size guard exceeded (" +
                                        std::to_string(opt.max_basis) + ")");
                if (static_cast<uint32_t>(div.remainder.degree()) > opt.max_degree)
                    throw ResourceLimit("degree guard exceeded (" +
                                        std::to_string(opt.max_degree) + ")");
                if (opt.trace)
                    out.trace.push_back("add g" + std::to_string(out.basis.size() + 1) + " = " +
                                        div.remainder.str());
                if (opt.track) {
                    std::vector<NCPoly> cert(gens.size(), NCPoly::zero(pres));
                    // remainder = combo - sum_t q_t basis_t
                    for (size_t i = 0; i < gens.size(); ++i) {
                        NCPoly acc = NCPoly::zero(pres);
                        for (size_t k = 0; k < S.size(); ++k) {
                            if (b[k].is_zero()) continue;
                            acc += NCPoly::monomial(pres, bf.gammas[k], b[k]) *
                                   out.certificates[S[k]][i];
                        }
                        for (size_t t = 0; t < out.basis.size(); ++t) {
                            if (div.quotients[t].is_zero()) continue;
                            acc -= div.quotients[t] * out.certificates[t][i];
                        }
                        cert[i] = std::move(acc);
                    }
                    out.certificates.push_back(std::move(cert));
                }
                out.basis.push_back(div.remainder);
            }
        };

        auto next_combination = [cur](std::vector<size_t>& idx) -> bool {
            const size_t k = idx.size();
            for (size_t i = k; i-- > 0;) {
                if (idx[i] != i + cur - k) {
                    ++idx[i];
                    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        for (size_t size = 1; size <= max_subset; ++size) {
            subset.resize(size);
            for (size_t i = 0; i < size; ++i) subset[i] = i;
            do {
                if (subset.back() >= old_size) // touches a new element
                    process(subset);
            } while (next_combination(subset));
        }
        old_size = cur;
    }

    if (opt.interreduce) {
        // drop members whose leading term is one-step reducible by the rest
        std::vector<NCPoly> kept;
        std::vector<std::vector<NCPoly>> kept_certs;
        for (size_t i = 0; i < out.basis.size(); ++i) {
            std::vector<NCPoly> others = kept;
            others.insert(others.end(), out.basis.begin() + i + 1, out.basis.end());
            if (!others.empty() && reduce_once(out.basis[i], others).has_value()) continue;
            kept.push_back(out.basis[i]);
            if (opt.track) kept_certs.push_back(out.certificates[i]);
        }
        out.basis = std::move(kept);
        out.certificates = std::move(kept_certs);
    }
    return out;
}

MembershipResult is_member(const NCPoly& f, const std::vector<NCPoly>& G) {
    MembershipResult r;
    if (f.is_zero()) {
        r.member = true;
        r.certificate.assign(G.size(), NCPoly::zero(f.pres()));
        return r;
    }
    DivisionResult div = divide(f, G);
    r.member = div.remainder.is_zero();
    r.certificate = std::move(div.quotients);
    return r;
}

} // namespace spbw
