#include "spbw/modules.hpp"

#include <algorithm>

namespace spbw {

namespace {

CPoly scaled_lc(const Presentation& pres, const Exp& gamma, const Exp& beta, const CPoly& lc) {
    auto [cab, tail] = pres.structure_constants(gamma, beta);
    (void)tail;
    return pres.sigma_alpha(gamma, lc) * cab;
}

} // namespace

ModVec::ModVec(std::shared_ptr<const Presentation> pres, size_t m, ModuleScheme scheme)
    : pres_(std::move(pres)), m_(m), scheme_(scheme) {}

ModVec ModVec::unit(std::shared_ptr<const Presentation> pres, size_t m, size_t idx,
                    ModuleScheme scheme) {
    ModVec v(pres, m, scheme);
    if (idx >= m) throw Error("component index out of range");
    v.terms_.push_back({Exp(pres->nvars(), 0), idx, pres->ring()->one()});
    return v;
}

ModVec ModVec::from_components(std::vector<NCPoly> comps, ModuleScheme scheme) {
    if (comps.empty()) throw Error("module vector needs at least one component");
    ModVec v(comps.front().pres(), comps.size(), scheme);
    for (size_t k = 0; k < comps.size(); ++k) {
        require_same_presentation(comps.front(), comps[k]);
        for (const auto& [e, c] : comps[k].terms()) v.terms_.push_back({e, k, c});
    }
    v.canonicalize();
    return v;
}

ModVec ModVec::from_terms(std::shared_ptr<const Presentation> pres, size_t m,
                          std::vector<Term> terms, ModuleScheme scheme) {
    ModVec v(std::move(pres), m, scheme);
    v.terms_ = std::move(terms);
    v.canonicalize();
    return v;
}

void ModVec::canonicalize() {
    ModuleOrder ord(pres_->order(), scheme_);
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.e, static_cast<int>(a.idx), b.e, static_cast<int>(b.idx)) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (t.idx >= m_) throw Error("component index out of range");
        if (!out.empty() && out.back().e == t.e && out.back().idx == t.idx)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

int ModVec::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(total_degree(t.e)));
    return d;
}

const ModVec::Term& ModVec::lt() const {
    if (terms_.empty()) throw Error("leading term of the zero vector");
    return terms_.front();
}

NCPoly ModVec::component(size_t idx) const {
    TermList terms;
    for (const auto& t : terms_)
        if (t.idx == idx) terms.emplace_back(t.e, t.c);
    return NCPoly::from_terms(pres_, std::move(terms));
}

ModVec ModVec::operator-() const {
    ModVec r(pres_, m_, scheme_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.e, t.idx, -t.c});
    return r;
}

ModVec operator+(const ModVec& a, const ModVec& b) {
    if (a.pres_ != b.pres_ || a.m_ != b.m_)
        throw Error("module vectors live in different modules");
    ModVec r(a.pres_, a.m_, a.scheme_);
    r.terms_ = a.terms_;
    r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
    r.canonicalize();
    return r;
}

ModVec operator-(const ModVec& a, const ModVec& b) { return a + (-b); }

ModVec operator*(const NCPoly& f, const ModVec& v) {
    require_same_presentation(f, NCPoly::zero(v.pres_));
    ModVec r(v.pres_, v.m_, v.scheme_);
    for (size_t k = 0; k < v.m_; ++k) {
        NCPoly comp = v.component(k);
        if (comp.is_zero()) continue;
        NCPoly prod = f * comp;
        for (const auto& [e, c] : prod.terms()) r.terms_.push_back({e, k, c});
    }
    r.canonicalize();
    return r;
}

bool operator==(const ModVec& a, const ModVec& b) {
    return a.pres_ == b.pres_ && a.m_ == b.m_ && a.terms_ == b.terms_;
}

std::string ModVec::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        NCPoly piece = NCPoly::monomial(pres_, t.e, t.c);
        int sign = t.c.lead_coeff().sign();
        NCPoly body = sign < 0 ? -piece : piece;
        if (first) {
            if (sign < 0) s += "-";
            first = false;
        } else {
            s += sign < 0 ? " - " : " + ";
        }
        std::string bs = body.str();
        bool needs_parens = bs.find(' ') != std::string::npos;
        s += (needs_parens ? "(" + bs + ")" : bs) + "*e" + std::to_string(t.idx + 1);
    }
    return s;
}

namespace {

void check_mod_divisors(const ModVec& v, const std::vector<ModVec>& divisors) {
    if (divisors.empty()) throw Error("division needs at least one divisor");
    for (const auto& d : divisors) {
        if (d.is_zero()) throw Error("zero divisor vector");
        if (d.pres() != v.pres() || d.m() != v.m())
            throw Error("module divisor shape mismatch");
    }
}

} // namespace

ModDivisionResult mod_divide(const ModVec& v, const std::vector<ModVec>& divisors,
                             const DivisionOptions& opt) {
    check_mod_divisors(v, divisors);
    const auto& pres = v.pres();
    const auto& ring = pres->ring();
    ModuleOrder ord(pres->order(), v.scheme());

    ModDivisionResult out;
    out.quotients.assign(divisors.size(), NCPoly::zero(pres));
    ModVec h = v;
    size_t step = 0;
    while (!h.is_zero()) {
        const auto& hl = h.lt();
        std::vector<size_t> J;
        for (size_t j = 0; j < divisors.size(); ++j) {
            const auto& dl = divisors[j].lt();
            if (dl.idx == hl.idx && exp_divides(dl.e, hl.e)) J.push_back(j);
        }
        if (J.empty()) break;

        std::vector<Exp> alphas;
        std::vector<CPoly> weights;
        for (size_t j : J) {
            const auto& dl = divisors[j].lt();
            Exp a = exp_sub(hl.e, dl.e);
            weights.push_back(scaled_lc(*pres, a, dl.e, dl.c));
            alphas.push_back(std::move(a));
        }
        auto cert = ring->divide_member(hl.c, weights);
        if (!cert) break;

        ++step;
        Exp prev = hl.e;
        size_t previdx = hl.idx;
        for (size_t k = 0; k < J.size(); ++k) {
            if ((*cert)[k].is_zero()) continue;
            NCPoly piece = NCPoly::monomial(pres, alphas[k], (*cert)[k]);
            out.quotients[J[k]] += piece;
            h -= piece * divisors[J[k]];
        }
        if (opt.trace)
            out.trace.push_back("step " + std::to_string(step) + ": h = " + h.str());
        if (!h.is_zero()) {
            const auto& nl = h.lt();
            if (!(ord.compare(nl.e, static_cast<int>(nl.idx), prev, static_cast<int>(previdx)) < 0))
                throw Error("module division step failed to lower the leading term");
        }
    }
    out.remainder = h;
    return out;
}

std::optional<ModVec> mod_reduce_once(const ModVec& v, const std::vector<ModVec>& F) {
    if (F.empty()) throw Error("reduction needs a nonempty divisor set");
    if (v.is_zero()) return std::nullopt;
    check_mod_divisors(v, F);
    const auto& pres = v.pres();

    const auto& hl = v.lt();
    std::vector<size_t> J;
    for (size_t j = 0; j < F.size(); ++j) {
        const auto& dl = F[j].lt();
        if (dl.idx == hl.idx && exp_divides(dl.e, hl.e)) J.push_back(j);
    }
    if (J.empty()) return std::nullopt;

    std::vector<Exp> alphas;
    std::vector<CPoly> weights;
    for (size_t j : J) {
        const auto& dl = F[j].lt();
        Exp a = exp_sub(hl.e, dl.e);
        weights.push_back(scaled_lc(*pres, a, dl.e, dl.c));
        alphas.push_back(std::move(a));
    }
    auto cert = pres->ring()->divide_member(hl.c, weights);
    if (!cert) return std::nullopt;
    ModVec h = v;
    for (size_t k = 0; k < J.size(); ++k) {
        if ((*cert)[k].is_zero()) continue;
        h -= NCPoly::monomial(pres, alphas[k], (*cert)[k]) * F[J[k]];
    }
    return h;
}

ModBFData mod_bf_set(const std::vector<ModVec>& F) {
    if (F.empty()) throw Error("B_F needs a nonempty subset");
    for (const auto& g : F)
        if (g.is_zero()) throw Error("B_F subset contains zero");
    const auto& pres = F.front().pres();

    ModBFData data;
    data.index = F.front().lt().idx;
    for (const auto& g : F)
        if (g.lt().idx != data.index) return data; // X_F = 0, skipped
    data.nonzero = true;
    data.xf_exp = F.front().lt().e;
    for (const auto& g : F) data.xf_exp = exp_lcm(data.xf_exp, g.lt().e);
    for (const auto& g : F) {
        const auto& dl = g.lt();
        Exp gamma = exp_sub(data.xf_exp, dl.e);
        data.scaled_lcs.push_back(scaled_lc(*pres, gamma, dl.e, dl.c));
        data.gammas.push_back(std::move(gamma));
    }
    data.generators = pres->ring()->syzygy_generators(data.scaled_lcs);
    return data;
}

ModBuchbergerResult mod_buchberger(const std::vector<ModVec>& gens,
                                   const BuchbergerOptions& opt) {
    if (gens.empty()) throw Error("buchberger needs at least one generator");
    for (const auto& g : gens)
        if (g.is_zero()) throw Error("buchberger generators must be nonzero");
    const auto& pres = gens.front().pres();

    ModBuchbergerResult out;
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

        auto process = [&](const std::vector<size_t>& S) {
            std::vector<ModVec> sub;
            sub.reserve(S.size());
            for (size_t idx : S) sub.push_back(out.basis[idx]);
            ModBFData bf = mod_bf_set(sub);
            if (!bf.nonzero) return; // mixed leading indices: skipped before syzygy work
            for (const auto& b : bf.generators) {
                ModVec combo(pres, gens.front().m(), gens.front().scheme());
                for (size_t k = 0; k < S.size(); ++k) {
                    if (b[k].is_zero()) continue;
                    combo += NCPoly::monomial(pres, bf.gammas[k], b[k]) * out.basis[S[k]];
                }
                if (combo.is_zero()) continue;
                ModDivisionResult div = mod_divide(combo, out.basis);
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
        std::vector<size_t> subset;
        for (size_t size = 1; size <= max_subset; ++size) {
            subset.resize(size);
            for (size_t i = 0; i < size; ++i) subset[i] = i;
            do {
                if (subset.back() >= old_size) process(subset);
            } while (next_combination(subset));
        }
        old_size = cur;
    }
    return out;
}

ModMembershipResult mod_is_member(const ModVec& v, const std::vector<ModVec>& G) {
    ModMembershipResult r;
    if (v.is_zero()) {
        r.member = true;
        r.certificate.assign(G.size(), NCPoly::zero(v.pres()));
        return r;
    }
    ModDivisionResult div = mod_divide(v, G);
    r.member = div.remainder.is_zero();
    r.certificate = std::move(div.quotients);
    return r;
}

} // namespace spbw
