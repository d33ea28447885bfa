#include "spbw/presentation.hpp"

#include <algorithm>

namespace spbw {

bool LinearTail::is_zero() const {
    if (!c0.is_zero()) return false;
    for (const auto& c : cvar)
        if (!c.is_zero()) return false;
    return true;
}

std::string ValidationReport::str() const {
    std::string s = ok ? "valid" : "invalid";
    if (ok) s += quasi_commutative ? ", quasi-commutative" : ", not quasi-commutative";
    for (const auto& i : issues) s += "\n  - " + i;
    return s;
}

namespace {

CPoly apply_map(const std::vector<CPoly>& images, const CPoly& r) {
    if (r.is_constant()) return r;
    return r.substitute(images);
}

} // namespace

std::pair<std::shared_ptr<const Presentation>, ValidationReport>
Presentation::build(PresentationSpec spec) {
    ValidationReport report;
    if (!spec.ring) throw Error("presentation needs a coefficient ring");
    const size_t n = spec.vars.size();
    const size_t m = spec.ring->generator_count();
    if (n == 0) report.issues.push_back("presentation needs at least one variable");

    auto pres = std::shared_ptr<Presentation>(new Presentation());
    pres->ring_ = spec.ring;
    pres->vars_ = spec.vars;
    pres->order_ = spec.order ? *spec.order : MonomialOrder::deglex(n);
    if (pres->order_.nvars() != n)
        report.issues.push_back("monomial order arity does not match the variable count");

    // identity / zero defaults
    pres->sigma_.resize(n);
    pres->delta_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        TwistMap id;
        for (size_t k = 0; k < m; ++k) {
            id.images.push_back(spec.ring->generator(k));
            id.inverse_images.push_back(spec.ring->generator(k));
        }
        pres->sigma_[i] = id;
        pres->delta_[i].images.assign(m, spec.ring->zero());
    }
    for (auto& [i, tw] : spec.sigma) {
        if (i >= n) { report.issues.push_back("sigma index out of range"); continue; }
        if (tw.images.size() != m || tw.inverse_images.size() != m)
            report.issues.push_back("sigma for " + spec.vars[i] + " must map every coefficient generator");
        else
            pres->sigma_[i] = tw;
    }
    for (auto& [i, dv] : spec.delta) {
        if (i >= n) { report.issues.push_back("delta index out of range"); continue; }
        if (dv.images.size() != m)
            report.issues.push_back("delta for " + spec.vars[i] + " must map every coefficient generator");
        else
            pres->delta_[i] = dv;
    }

    pres->c_.assign(n, std::vector<CPoly>(n));
    pres->d_.assign(n, std::vector<LinearTail>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            pres->c_[i][j] = spec.ring->one();
            pres->d_[i][j] = LinearTail{spec.ring->zero(), std::vector<CPoly>(n, spec.ring->zero())};
        }
    for (auto& [ij, rel] : spec.relations) {
        auto [i, j] = ij;
        if (!(i < j) || j >= n) {
            report.issues.push_back("relation indices must satisfy i < j within the variable range");
            continue;
        }
        pres->c_[i][j] = rel.first;
        LinearTail tail = rel.second;
        tail.cvar.resize(n, spec.ring->zero());
        pres->d_[i][j] = std::move(tail);
    }

    // axiom checks
    for (size_t i = 0; i < n; ++i) {
        const auto& tw = pres->sigma_[i];
        for (size_t k = 0; k < m; ++k) {
            CPoly forth = apply_map(tw.inverse_images, tw.images[k]);
            CPoly back = apply_map(tw.images, tw.inverse_images[k]);
            if (forth != spec.ring->generator(k) || back != spec.ring->generator(k)) {
                report.issues.push_back("sigma for " + spec.vars[i] +
                                        " has no valid inverse certificate on generator " +
                                        spec.ring->generator_names()[k]);
                break;
            }
        }
        // sigma_i-Leibniz consistency of delta_i on generator pairs:
        // sigma(a) delta(b) + delta(a) b must be symmetric in a, b.
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b) {
                CPoly lhs = pres->sigma_[i].images[a] * pres->delta_[i].images[b] +
                            pres->delta_[i].images[a] * spec.ring->generator(b);
                CPoly rhs = pres->sigma_[i].images[b] * pres->delta_[i].images[a] +
                            pres->delta_[i].images[b] * spec.ring->generator(a);
                if (lhs != rhs)
                    report.issues.push_back("delta for " + spec.vars[i] +
                                            " violates the Leibniz rule on a generator pair");
            }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (!spec.ring->unit_inverse(pres->c_[i][j]))
                report.issues.push_back("constant for " + spec.vars[j] + "*" + spec.vars[i] +
                                        " is not a unit");
        }

    bool qc = true;
    for (size_t i = 0; i < n && qc; ++i)
        for (const auto& im : pres->delta_[i].images)
            if (!im.is_zero()) { qc = false; break; }
    for (size_t i = 0; i < n && qc; ++i)
        for (size_t j = i + 1; j < n && qc; ++j)
            if (!pres->d_[i][j].is_zero()) qc = false;
    pres->quasi_commutative_ = qc;

    report.quasi_commutative = qc;
    report.ok = report.issues.empty();
    if (!report.ok) return {nullptr, report};
    return {pres, report};
}

const CPoly& Presentation::c(size_t i, size_t j) const {
    if (!(i < j) || j >= nvars()) throw Error("c(i,j) needs i < j");
    return c_[i][j];
}

const LinearTail& Presentation::d(size_t i, size_t j) const {
    if (!(i < j) || j >= nvars()) throw Error("d(i,j) needs i < j");
    return d_[i][j];
}

CPoly Presentation::sigma(size_t i, const CPoly& r) const {
    return apply_map(sigma_[i].images, r);
}

CPoly Presentation::sigma_inv(size_t i, const CPoly& r) const {
    return apply_map(sigma_[i].inverse_images, r);
}

CPoly Presentation::delta(size_t i, const CPoly& r) const {
    // extend delta_i from generator images by the sigma_i-Leibniz rule,
    // walking each monomial's factors left to right
    const size_t m = ring_->generator_count();
    CPoly out = ring_->zero();
    for (const auto& [e, coef] : r.terms()) {
        std::vector<size_t> factors;
        for (size_t k = 0; k < m; ++k)
            for (uint32_t p = 0; p < e[k]; ++p) factors.push_back(k);
        for (size_t pos = 0; pos < factors.size(); ++pos) {
            CPoly term = ring_->constant(coef);
            for (size_t q = 0; q < pos; ++q) term *= sigma_[i].images[factors[q]];
            term *= delta_[i].images[factors[pos]];
            for (size_t q = pos + 1; q < factors.size(); ++q)
                term *= ring_->generator(factors[q]);
            out += term;
        }
    }
    return out;
}

CPoly Presentation::sigma_alpha(const Exp& alpha, const CPoly& r) const {
    if (alpha.size() != nvars()) throw Error("sigma_alpha exponent dimension mismatch");
    CPoly out = r;
    for (size_t i = nvars(); i-- > 0;)
        for (uint32_t p = 0; p < alpha[i]; ++p) out = sigma(i, out);
    return out;
}

TermList Presentation::canonicalize(TermList terms) const {
    std::sort(terms.begin(), terms.end(), [this](const auto& a, const auto& b) {
        return order_.compare(a.first, b.first) > 0;
    });
    TermList out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    return out;
}

TermList Presentation::mono_times_var(const Exp& alpha, size_t i) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = mono_var_cache_.find({alpha, i});
        if (it != mono_var_cache_.end()) return it->second;
    }
    const size_t n = nvars();
    TermList result;
    size_t j = n;
    for (size_t k = n; k-- > i + 1;)
        if (alpha[k] > 0) { j = k; break; }
    if (j == n) {
        Exp e = alpha;
        e[i] += 1;
        result.emplace_back(std::move(e), ring_->one());
    } else {
        // x^alpha x_i = x^{alpha - e_j} (c_ij x_i x_j + d_ij)
        Exp ap = alpha;
        ap[j] -= 1;
        TermList t = mono_times_coeff(ap, c_[i][j]);
        t = terms_times_var(t, i);
        t = terms_times_var(t, j);
        const LinearTail& tail = d_[i][j];
        if (!tail.is_zero()) {
            TermList base{{ap, ring_->one()}};
            if (!tail.c0.is_zero()) {
                TermList part = terms_times_coeff_right(base, tail.c0);
                t.insert(t.end(), part.begin(), part.end());
            }
            for (size_t k = 0; k < n; ++k) {
                if (tail.cvar[k].is_zero()) continue;
                TermList part = terms_times_coeff_right(base, tail.cvar[k]);
                part = terms_times_var(part, k);
                t.insert(t.end(), part.begin(), part.end());
            }
        }
        result = canonicalize(std::move(t));
    }
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto [it, inserted] = mono_var_cache_.try_emplace({alpha, i}, std::move(result));
    (void)inserted; // concurrent fills are idempotent
    return it->second;
}

TermList Presentation::mono_times_coeff(const Exp& alpha, const CPoly& c) const {
    if (c.is_zero()) return {};
    if (exp_is_zero(alpha) || c.is_constant()) return {{alpha, c}};
    size_t k = 0;
    for (size_t i = nvars(); i-- > 0;)
        if (alpha[i] > 0) { k = i; break; }
    Exp ap = alpha;
    ap[k] -= 1;
    // x^alpha c = x^{alpha - e_k} (sigma_k(c) x_k + delta_k(c))
    TermList t = mono_times_coeff(ap, sigma(k, c));
    t = terms_times_var(t, k);
    CPoly dc = delta(k, c);
    if (!dc.is_zero()) {
        TermList part = mono_times_coeff(ap, dc);
        t.insert(t.end(), part.begin(), part.end());
    }
    return canonicalize(std::move(t));
}

TermList Presentation::terms_times_var(const TermList& f, size_t i) const {
    TermList out;
    for (const auto& [e, c] : f) {
        TermList part = mono_times_var(e, i);
        for (auto& [pe, pc] : part) out.emplace_back(pe, c * pc);
    }
    return canonicalize(std::move(out));
}

TermList Presentation::terms_times_coeff_right(const TermList& f, const CPoly& c) const {
    TermList out;
    for (const auto& [e, fc] : f) {
        TermList part = mono_times_coeff(e, c);
        for (auto& [pe, pc] : part) out.emplace_back(pe, fc * pc);
    }
    return canonicalize(std::move(out));
}

TermList Presentation::mul_terms(const TermList& f, const TermList& g) const {
    TermList acc;
    for (const auto& [ge, gc] : g) {
        TermList part = terms_times_coeff_right(f, gc);
        for (size_t i = 0; i < nvars(); ++i)
            for (uint32_t p = 0; p < ge[i]; ++p) part = terms_times_var(part, i);
        acc.insert(acc.end(), part.begin(), part.end());
    }
    return canonicalize(std::move(acc));
}

std::pair<CPoly, TermList> Presentation::structure_constants(const Exp& alpha,
                                                             const Exp& beta) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = struct_cache_.find({alpha, beta});
        if (it != struct_cache_.end()) return it->second;
    }
    TermList prod = mul_terms({{alpha, ring_->one()}}, {{beta, ring_->one()}});
    Exp target = exp_add(alpha, beta);
    CPoly cab = ring_->zero();
    TermList tail;
    for (auto& [e, c] : prod) {
        if (e == target)
            cab = c;
        else
            tail.emplace_back(e, c);
    }
    std::pair<CPoly, TermList> result{std::move(cab), std::move(tail)};
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto [it, inserted] = struct_cache_.try_emplace({alpha, beta}, std::move(result));
    (void)inserted;
    return it->second;
}

std::shared_ptr<const Presentation> Presentation::associated_quasicommutative() const {
    PresentationSpec spec;
    spec.ring = ring_;
    spec.vars = vars_;
    spec.order = order_;
    for (size_t i = 0; i < nvars(); ++i) {
        spec.sigma[i] = sigma_[i];
        // deltas stay zero
    }
    for (size_t i = 0; i < nvars(); ++i)
        for (size_t j = i + 1; j < nvars(); ++j)
            spec.relations[{i, j}] = {c_[i][j],
                                      LinearTail{ring_->zero(), std::vector<CPoly>(nvars(), ring_->zero())}};
    auto [pres, report] = build(std::move(spec));
    if (!pres) throw Error("associated quasi-commutative extension failed to validate: " + report.str());
    return pres;
}

} // namespace spbw
