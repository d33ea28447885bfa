#include "spbw/coeffring.hpp"

#include <algorithm>

#include "spbw/groebner.hpp"
#include "spbw/modules.hpp"
#include "spbw/presentation.hpp"

namespace spbw {

std::shared_ptr<const CoeffRing> CoeffRing::rationals() {
    static std::shared_ptr<const CoeffRing> qq(new CoeffRing({}));
    return qq;
}

std::shared_ptr<const CoeffRing> CoeffRing::polynomials(std::vector<std::string> generators) {
    if (generators.empty()) return rationals();
    return std::shared_ptr<const CoeffRing>(new CoeffRing(std::move(generators)));
}

std::string CoeffRing::str() const {
    if (is_field()) return "QQ";
    std::string s = "QQ[";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += gens_[i];
    }
    return s + "]";
}

// The commutative ring QQ[t1..tm] is the trivial-twist instance of the skew
// engine over QQ, so membership and syzygies below reuse the same Buchberger
// machinery the ring serves.
std::shared_ptr<const Presentation> CoeffRing::twist() const {
    std::lock_guard<std::mutex> lock(twist_mu_);
    if (!twist_) {
        PresentationSpec spec;
        spec.ring = rationals();
        spec.vars = gens_;
        auto [pres, report] = Presentation::build(std::move(spec));
        if (!pres) throw Error("internal: trivial twist failed to validate: " + report.str());
        twist_ = pres;
    }
    return twist_;
}

namespace {

// CPoly over QQ[t..] <-> NCPoly over the trivial twist
NCPoly embed(const std::shared_ptr<const Presentation>& tw, const CPoly& p) {
    TermList terms;
    for (const auto& [e, c] : p.terms())
        terms.emplace_back(e, CPoly::constant(0, c));
    return NCPoly::from_terms(tw, std::move(terms));
}

CPoly project(size_t m, const NCPoly& f) {
    std::vector<CPoly::Term> terms;
    for (const auto& [e, c] : f.terms())
        terms.emplace_back(e, c.constant_value());
    return CPoly::from_terms(m, std::move(terms));
}

} // namespace

std::optional<std::vector<CPoly>> CoeffRing::divide_member_field(
    const CPoly& a, const std::vector<CPoly>& gens) const {
    // leftmost usable pivot over QQ
    std::vector<CPoly> cert(gens.size(), zero());
    if (a.is_zero()) return cert;
    for (size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].is_zero()) continue;
        cert[j] = constant(a.constant_value() / gens[j].constant_value());
        return cert;
    }
    return std::nullopt; // all generators zero, a nonzero
}

std::optional<std::vector<CPoly>> CoeffRing::spread_certificate(
    const CPoly& a, const std::vector<CPoly>& gens) const {
    if (!a.is_monomial()) return std::nullopt;
    const Exp& mu = a.lead_exp();
    for (const auto& g : gens)
        if (!g.is_monomial() || !exp_divides(g.lead_exp(), mu)) return std::nullopt;
    const size_t m = gens.size();
    const long deg = static_cast<long>(total_degree(mu));
    std::vector<CPoly> cert(m, zero());
    Rational balance = a.lead_coeff();
    for (size_t j = 1; j < m; ++j) {
        Rational lam(-(deg + static_cast<long>(j + 1) - static_cast<long>(m) - 1), 2);
        if (lam.is_zero()) continue;
        balance -= lam * gens[j].lead_coeff();
        cert[j] = CPoly::monomial(gens_.size(), exp_sub(mu, gens[j].lead_exp()), lam);
    }
    Rational lam0 = balance / gens[0].lead_coeff();
    if (!lam0.is_zero())
        cert[0] = CPoly::monomial(gens_.size(), exp_sub(mu, gens[0].lead_exp()), lam0);
    return cert;
}

std::optional<std::vector<CPoly>> CoeffRing::divide_member(
    const CPoly& a, const std::vector<CPoly>& gens) const {
    if (gens.empty()) throw Error("divide_member needs a nonempty generator list");
    for (const auto& g : gens)
        if (g.nvars() != gens_.size()) throw Error("coefficient ring mismatch");
    if (a.nvars() != gens_.size()) throw Error("coefficient ring mismatch");

    if (a.is_zero()) return std::vector<CPoly>(gens.size(), zero());
    if (is_field()) return divide_member_field(a, gens);
    if (auto spread = spread_certificate(a, gens)) return spread;

    // self-hosted route: certificate-tracked basis over the trivial twist,
    // then division
    auto tw = twist();
    std::vector<NCPoly> embedded;
    std::vector<size_t> nonzero_at;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        nonzero_at.push_back(i);
        embedded.push_back(embed(tw, gens[i]));
    }
    if (embedded.empty()) return std::nullopt;

    BuchbergerOptions opt;
    opt.track = true;
    opt.pairs_only = true; // field coefficients: the pairwise criterion is complete
    BuchbergerResult gb = buchberger(embedded, opt);
    DivisionResult div = divide(embed(tw, a), gb.basis);
    if (!div.remainder.is_zero()) return std::nullopt;

    std::vector<CPoly> cert(gens.size(), zero());
    for (size_t k = 0; k < gb.basis.size(); ++k) {
        if (div.quotients[k].is_zero()) continue;
        for (size_t i = 0; i < embedded.size(); ++i) {
            NCPoly contrib = div.quotients[k] * gb.certificates[k][i];
            if (!contrib.is_zero())
                cert[nonzero_at[i]] += project(gens_.size(), contrib);
        }
    }
    return cert;
}

std::vector<std::vector<CPoly>> CoeffRing::syzygy_generators(
    const std::vector<CPoly>& gens) const {
    if (gens.empty()) throw Error("syzygy_generators needs a nonempty generator list");
    for (const auto& g : gens)
        if (g.nvars() != gens_.size()) throw Error("coefficient ring mismatch");

    std::vector<std::vector<CPoly>> out;
    std::vector<size_t> nonzero_at;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) {
            std::vector<CPoly> unit(gens.size(), zero());
            unit[i] = one();
            out.push_back(std::move(unit)); // zero entries contribute e_i
        } else {
            nonzero_at.push_back(i);
        }
    }
    if (nonzero_at.size() <= 1) return out; // a domain: a single nonzero entry has no syzygy

    if (is_field()) {
        // pivot-pair generators (1/w_p) e_p - (1/w_j) e_j, pivot leftmost
        size_t p = nonzero_at.front();
        Rational wp = gens[p].constant_value();
        for (size_t k = 1; k < nonzero_at.size(); ++k) {
            size_t j = nonzero_at[k];
            std::vector<CPoly> tup(gens.size(), zero());
            tup[p] = constant(wp.inverse());
            tup[j] = constant(-gens[j].constant_value().inverse());
            out.push_back(std::move(tup));
        }
        return out;
    }

    // position-tagged rows (r_i, e_i) in A^{1+s}; value-component-eliminating
    // order makes the tags of value-zero basis vectors generate Syz
    auto tw = twist();
    const size_t s = nonzero_at.size();
    std::vector<ModVec> rows;
    for (size_t k = 0; k < s; ++k) {
        std::vector<ModVec::Term> terms;
        for (const auto& [e, c] : gens[nonzero_at[k]].terms())
            terms.push_back({e, 0, CPoly::constant(0, c)});
        terms.push_back({Exp(tw->nvars(), 0), k + 1, CPoly::constant(0, Rational(1))});
        rows.push_back(ModVec::from_terms(tw, 1 + s, std::move(terms), ModuleScheme::PosElim));
    }
    BuchbergerOptions opt;
    opt.pairs_only = true;
    opt.max_basis = 4096;
    opt.max_degree = 4096;
    ModBuchbergerResult gb = mod_buchberger(rows, opt);
    for (const auto& v : gb.basis) {
        if (!v.component(0).is_zero()) continue;
        std::vector<CPoly> tup(gens.size(), zero());
        for (size_t k = 0; k < s; ++k)
            tup[nonzero_at[k]] = project(gens_.size(), v.component(k + 1));
        out.push_back(std::move(tup));
    }
    return out;
}

std::optional<CPoly> CoeffRing::unit_inverse(const CPoly& r) const {
    if (r.nvars() != gens_.size()) throw Error("coefficient ring mismatch");
    if (r.is_zero() || !r.is_constant()) return std::nullopt;
    return constant(r.constant_value().inverse());
}

} // namespace spbw
