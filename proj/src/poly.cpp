#include "spbw/poly.hpp"

namespace spbw {

void require_same_presentation(const NCPoly& a, const NCPoly& b) {
    if (a.pres() != b.pres())
        throw Error("operands live over different presentations");
}

NCPoly NCPoly::one(std::shared_ptr<const Presentation> pres) {
    CPoly c = CPoly::constant(pres->ring()->generator_count(), Rational(1));
    return coeff(std::move(pres), std::move(c));
}

NCPoly NCPoly::coeff(std::shared_ptr<const Presentation> pres, CPoly c) {
    NCPoly f(std::move(pres));
    if (!c.is_zero()) f.terms_.emplace_back(Exp(f.pres_->nvars(), 0), std::move(c));
    return f;
}

NCPoly NCPoly::monomial(std::shared_ptr<const Presentation> pres, Exp e, CPoly c) {
    NCPoly f(std::move(pres));
    if (e.size() != f.pres_->nvars()) throw Error("exponent dimension mismatch");
    if (!c.is_zero()) f.terms_.emplace_back(std::move(e), std::move(c));
    return f;
}

NCPoly NCPoly::variable(std::shared_ptr<const Presentation> pres, size_t i) {
    if (i >= pres->nvars()) throw Error("variable index out of range");
    Exp e(pres->nvars(), 0);
    e[i] = 1;
    return monomial(pres, std::move(e), pres->ring()->one());
}

NCPoly NCPoly::from_terms(std::shared_ptr<const Presentation> pres, TermList terms) {
    NCPoly f(pres);
    f.terms_ = pres->canonicalize(std::move(terms));
    return f;
}

int NCPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
}

LeadingData NCPoly::leading_data() const {
    LeadingData ld;
    if (terms_.empty()) return ld;
    ld.zero = false;
    ld.lm = terms_.front().first;
    ld.lc = terms_.front().second;
    return ld;
}

const Exp& NCPoly::lm_exp() const {
    if (terms_.empty()) throw Error("leading monomial of zero");
    return terms_.front().first;
}

const CPoly& NCPoly::lc() const {
    if (terms_.empty()) throw Error("leading coefficient of zero");
    return terms_.front().second;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(pres_);
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
    return r;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    require_same_presentation(a, b);
    const MonomialOrder& ord = a.pres_->order();
    NCPoly r(a.pres_);
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = ord.compare(a.terms_[i].first, b.terms_[j].first);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            CPoly s = a.terms_[i].second + b.terms_[j].second;
            if (!s.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    require_same_presentation(a, b);
    NCPoly r(a.pres_);
    r.terms_ = a.pres_->mul_terms(a.terms_, b.terms_);
    return r;
}

NCPoly NCPoly::left_scale(const CPoly& r) const {
    NCPoly f(pres_);
    if (r.is_zero()) return f;
    f.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        CPoly p = r * c;
        if (!p.is_zero()) f.terms_.emplace_back(e, std::move(p));
    }
    return f;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.pres_ == b.pres_ && a.terms_ == b.terms_;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    const auto& names = pres_->ring()->generator_names();
    const auto& vars = pres_->var_names();
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        int sign = c.lead_coeff().sign();
        const CPoly body = sign < 0 ? -c : c;
        if (first) {
            if (sign < 0) s += "-";
            first = false;
        } else {
            s += sign < 0 ? " - " : " + ";
        }
        std::string cs = body.str(names);
        bool has_vars = !exp_is_zero(e);
        std::string piece;
        if (!(body.is_one() && has_vars)) {
            bool needs_parens = cs.find('*') != std::string::npos ||
                                cs.find(' ') != std::string::npos ||
                                cs.find('/') != std::string::npos;
            piece = needs_parens ? "(" + cs + ")" : cs;
        }
        for (size_t i = 0; i < vars.size(); ++i) {
            if (!e[i]) continue;
            if (!piece.empty()) piece += "*";
            piece += vars[i];
            if (e[i] > 1) piece += "^" + std::to_string(e[i]);
        }
        s += piece;
    }
    return s;
}

} // namespace spbw
