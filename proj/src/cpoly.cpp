#include "spbw/cpoly.hpp"

#include <algorithm>
#include <map>

namespace spbw {

int cexp_compare(const Exp& a, const Exp& b) {
    uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

CPoly CPoly::constant(size_t nvars, Rational c) {
    CPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(Exp(nvars, 0), std::move(c));
    return p;
}

CPoly CPoly::generator(size_t nvars, size_t k, Rational c) {
    if (k >= nvars) throw Error("coefficient generator index out of range");
    CPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(exp_unit(nvars, k), std::move(c));
    return p;
}

CPoly CPoly::monomial(size_t nvars, Exp e, Rational c) {
    if (e.size() != nvars) throw Error("coefficient exponent dimension mismatch");
    CPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(std::move(e), std::move(c));
    return p;
}

CPoly CPoly::from_terms(size_t nvars, std::vector<Term> terms) {
    CPoly p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void CPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return cexp_compare(a.first, b.first) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (t.first.size() != nvars_) throw Error("coefficient exponent dimension mismatch");
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

bool CPoly::is_one() const {
    return terms_.size() == 1 && exp_is_zero(terms_[0].first) && terms_[0].second.is_one();
}

bool CPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_is_zero(terms_[0].first));
}

int CPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.front().first));
}

const Exp& CPoly::lead_exp() const {
    if (terms_.empty()) throw Error("leading term of zero coefficient");
    return terms_.front().first;
}

const Rational& CPoly::lead_coeff() const {
    if (terms_.empty()) throw Error("leading term of zero coefficient");
    return terms_.front().second;
}

Rational CPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("coefficient is not constant");
    return terms_[0].second;
}

CPoly CPoly::operator-() const {
    CPoly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, -t.second);
    return r;
}

CPoly operator+(const CPoly& a, const CPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error("coefficient ring mismatch");
    CPoly r(a.nvars_);
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = cexp_compare(a.terms_[i].first, b.terms_[j].first);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rational s = a.terms_[i].second + b.terms_[j].second;
            if (!s.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

CPoly operator-(const CPoly& a, const CPoly& b) { return a + (-b); }

CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error("coefficient ring mismatch");
    std::map<Exp, Rational> acc;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            Exp e = exp_add(ta.first, tb.first);
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), ta.second * tb.second);
            else
                it->second += ta.second * tb.second;
        }
    CPoly r(a.nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(), [](const CPoly::Term& x, const CPoly::Term& y) {
        return cexp_compare(x.first, y.first) > 0;
    });
    return r;
}

CPoly CPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return CPoly(nvars_);
    CPoly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, t.second * c);
    return r;
}

bool operator<(const CPoly& a, const CPoly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = cexp_compare(a.terms_[i].first, b.terms_[i].first);
        if (c != 0) return c < 0;
        if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
    }
    return a.terms_.size() < b.terms_.size();
}

CPoly CPoly::substitute(const std::vector<CPoly>& images) const {
    if (images.size() != nvars_) throw Error("substitution image count mismatch");
    size_t out_vars = nvars_;
    for (const auto& im : images)
        if (im.nvars() != out_vars) throw Error("substitution image ring mismatch");
    CPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
        CPoly term = CPoly::constant(out_vars, c);
        for (size_t k = 0; k < nvars_; ++k)
            for (uint32_t p = 0; p < e[k]; ++p) term *= images[k];
        r += term;
    }
    return r;
}

std::string CPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        bool has_vars = !exp_is_zero(e);
        std::string body;
        if (!mag.is_one() || !has_vars) body = mag.str();
        for (size_t k = 0; k < nvars_; ++k) {
            if (!e[k]) continue;
            if (!body.empty()) body += "*";
            body += names[k];
            if (e[k] > 1) body += "^" + std::to_string(e[k]);
        }
        s += body;
    }
    return s;
}

} // namespace spbw
