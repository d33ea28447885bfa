#include "spbw/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace spbw {

namespace {

enum class Tok { Id, Number, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    size_t line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_, col_ = 1, ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_, ++pos_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_, ++col_;
            tok_ = {Tok::Id, text_.substr(start, pos_ - start), tok_.line, tok_.col};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_, ++col_;
            // p/q rational literal: slash immediately followed by digits
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_, ++col_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_, ++col_;
            }
            tok_ = {Tok::Number, text_.substr(start, pos_ - start), tok_.line, tok_.col};
        } else {
            tok_ = {Tok::Punct, std::string(1, c), tok_.line, tok_.col};
            ++pos_, ++col_;
            // two-character arrow
            if (tok_.text == "-" && pos_ < text_.size() && text_[pos_] == '>') {
                tok_.text = "->";
                ++pos_, ++col_;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0, line_ = 1, col_ = 1;
    Token tok_{Tok::End, "", 1, 1};
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    PresentationFile run() {
        // header pass builds the presentation, definition pass resolves names
        while (lex_.peek().kind != Tok::End) statement();
        finalize_presentation();
        for (auto& d : pending_defines_) resolve_define(d.first, d.second);
        return std::move(out_);
    }

  private:
    struct RawDefine {
        Token at;
        std::vector<Token> tokens;
    };

    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.col, msg);
    }

    Token expect_id(const std::string& what) {
        Token t = lex_.take();
        if (t.kind != Tok::Id) fail(t, "expected " + what);
        return t;
    }

    void expect_punct(const std::string& p) {
        Token t = lex_.take();
        if (t.kind != Tok::Punct || t.text != p) fail(t, "expected '" + p + "'");
    }

    void statement() {
        Token head = lex_.take();
        if (head.kind != Tok::Id) fail(head, "expected a statement keyword");
        const std::string& kw = head.text;
        if (kw == "coeff") {
            parse_coeff(head);
        } else if (kw == "vars") {
            if (!var_names_.empty()) fail(head, "duplicate vars clause");
            var_names_ = parse_idlist();
            for (const auto& v : var_names_) declare(head, v);
        } else if (kw == "order") {
            parse_order(head);
        } else if (kw == "module_order") {
            Token t = expect_id("a module order scheme");
            if (t.text == "top")
                out_.module_scheme = ModuleScheme::TOP;
            else if (t.text == "toprev")
                out_.module_scheme = ModuleScheme::TOPREV;
            else
                fail(t, "unknown module order '" + t.text + "' (expected top or toprev)");
            out_.module_scheme_given = true;
        } else if (kw == "sigma" || kw == "sigma_inv" || kw == "delta") {
            parse_map(head, kw);
        } else if (kw == "relation") {
            parse_relation(head);
        } else if (kw == "define") {
            Token name = expect_id("a definition name");
            declare(name, name.text);
            expect_punct("=");
            RawDefine d;
            d.at = name;
            capture_until_statement(d.tokens);
            pending_defines_.emplace_back(name.text, std::move(d));
        } else {
            fail(head, "unknown statement '" + kw + "'");
        }
    }

    void parse_coeff(const Token& at) {
        if (ring_) fail(at, "duplicate coeff clause");
        Token t = lex_.take();
        if (t.kind != Tok::Id || t.text != "QQ") fail(t, "coefficient ring must be QQ or QQ[...]");
        std::vector<std::string> gens;
        if (lex_.peek().kind == Tok::Punct && lex_.peek().text == "[") {
            lex_.take();
            gens = parse_idlist();
            expect_punct("]");
        }
        for (const auto& g : gens) declare(at, g);
        coeff_names_ = gens;
        ring_ = CoeffRing::polynomials(gens);
    }

    std::vector<std::string> parse_idlist() {
        std::vector<std::string> names;
        names.push_back(expect_id("an identifier").text);
        while (lex_.peek().kind == Tok::Punct && lex_.peek().text == ",") {
            lex_.take();
            names.push_back(expect_id("an identifier").text);
        }
        return names;
    }

    void parse_order(const Token& at) {
        Token kind = expect_id("an order kind");
        OrderKind k;
        if (kind.text == "deglex")
            k = OrderKind::Deglex;
        else if (kind.text == "degrevlex")
            k = OrderKind::Degrevlex;
        else
            fail(kind, "order '" + kind.text + "' is not degree compatible (use deglex or degrevlex)");
        std::vector<std::string> names;
        names.push_back(expect_id("a variable").text);
        while (lex_.peek().kind == Tok::Punct && lex_.peek().text == ">") {
            lex_.take();
            names.push_back(expect_id("a variable").text);
        }
        order_decl_ = {k, names, at};
        (void)at;
    }

    void parse_map(const Token& at, const std::string& kw) {
        Token var = expect_id("a variable name");
        expect_punct(":");
        std::vector<std::pair<std::string, std::vector<Token>>> entries;
        while (true) {
            Token gen = expect_id("a coefficient generator");
            Token arrow = lex_.take();
            if (arrow.kind != Tok::Punct || arrow.text != "->") fail(arrow, "expected '->'");
            std::vector<Token> expr;
            capture_expr(expr);
            entries.emplace_back(gen.text, std::move(expr));
            if (lex_.peek().kind == Tok::Punct && lex_.peek().text == ",") {
                lex_.take();
                continue;
            }
            break;
        }
        map_decls_.push_back({at, kw, var.text, std::move(entries)});
    }

    void parse_relation(const Token& at) {
        Token lhs1 = expect_id("a variable");
        expect_punct("*");
        Token lhs2 = expect_id("a variable");
        expect_punct("=");
        std::vector<Token> rhs;
        capture_until_statement(rhs);
        relation_decls_.push_back({at, lhs1.text, lhs2.text, std::move(rhs)});
    }

    static bool statement_keyword(const std::string& s) {
        return s == "coeff" || s == "vars" || s == "order" || s == "module_order" ||
               s == "sigma" || s == "sigma_inv" || s == "delta" || s == "relation" ||
               s == "define";
    }

    // capture a polynomial expression: stops at ',' (outside parens/brackets),
    // end of input, or the next statement keyword
    void capture_expr(std::vector<Token>& out) {
        int depth = 0;
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Tok::End) break;
            if (t.kind == Tok::Id && depth == 0 && statement_keyword(t.text)) break;
            if (t.kind == Tok::Punct && depth == 0 && (t.text == "," || t.text == ";")) break;
            if (t.kind == Tok::Punct && (t.text == "(" || t.text == "[")) ++depth;
            if (t.kind == Tok::Punct && (t.text == ")" || t.text == "]")) {
                if (depth == 0) break;
                --depth;
            }
            out.push_back(lex_.take());
        }
    }

    void capture_until_statement(std::vector<Token>& out) {
        int depth = 0;
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Tok::End) break;
            if (t.kind == Tok::Id && depth == 0 && statement_keyword(t.text)) break;
            if (t.kind == Tok::Punct && (t.text == "(" || t.text == "[")) ++depth;
            if (t.kind == Tok::Punct && (t.text == ")" || t.text == "]")) --depth;
            out.push_back(lex_.take());
        }
    }

    void declare(const Token& at, const std::string& name) {
        if (name == "QQ") fail(at, "'QQ' is reserved");
        if (!namespace_.insert(name).second)
            fail(at, "identifier '" + name + "' is already declared");
    }

    // ---- second pass: expression evaluation over the built presentation ----

    struct TokenStream {
        const std::vector<Token>* toks;
        size_t pos = 0;
        Token end;
        const Token& peek() const { return pos < toks->size() ? (*toks)[pos] : end; }
        Token take() { return pos < toks->size() ? (*toks)[pos++] : end; }
        bool at_end() const { return pos >= toks->size(); }
    };

    TokenStream stream(const std::vector<Token>& toks) {
        TokenStream s;
        s.toks = &toks;
        s.end = Token{Tok::End, "", toks.empty() ? 0 : toks.back().line,
                      toks.empty() ? 0 : toks.back().col + toks.back().text.size()};
        return s;
    }

    NCPoly parse_polyexpr(TokenStream& ts) {
        NCPoly acc = NCPoly::zero(pres_);
        bool first = true;
        while (true) {
            int sign = 1;
            const Token& t = ts.peek();
            if (t.kind == Tok::Punct && (t.text == "+" || t.text == "-")) {
                sign = t.text == "-" ? -1 : 1;
                ts.take();
            } else if (!first) {
                break;
            }
            NCPoly term = parse_term(ts);
            acc = sign < 0 ? acc - term : acc + term;
            first = false;
            const Token& nxt = ts.peek();
            if (!(nxt.kind == Tok::Punct && (nxt.text == "+" || nxt.text == "-"))) break;
        }
        return acc;
    }

    NCPoly parse_term(TokenStream& ts) {
        NCPoly acc = parse_factor(ts);
        while (ts.peek().kind == Tok::Punct && ts.peek().text == "*") {
            ts.take();
            acc = acc * parse_factor(ts);
        }
        return acc;
    }

    NCPoly parse_factor(TokenStream& ts) {
        Token t = ts.take();
        if (t.kind == Tok::Number) {
            return NCPoly::coeff(pres_, ring_->constant(Rational::parse(t.text)));
        }
        if (t.kind == Tok::Punct && t.text == "(") {
            NCPoly inner = parse_polyexpr(ts);
            Token close = ts.take();
            if (close.kind != Tok::Punct || close.text != ")") fail(close, "expected ')'");
            return apply_power(ts, inner);
        }
        if (t.kind != Tok::Id) fail(t, "expected a factor");
        NCPoly base = NCPoly::zero(pres_);
        auto vit = std::find(var_names_.begin(), var_names_.end(), t.text);
        if (vit != var_names_.end()) {
            base = NCPoly::variable(pres_, vit - var_names_.begin());
        } else {
            auto cit = std::find(coeff_names_.begin(), coeff_names_.end(), t.text);
            if (cit == coeff_names_.end()) fail(t, "undeclared identifier '" + t.text + "'");
            base = NCPoly::coeff(pres_, ring_->generator(cit - coeff_names_.begin()));
        }
        return apply_power(ts, base);
    }

    NCPoly apply_power(TokenStream& ts, NCPoly base) {
        if (!(ts.peek().kind == Tok::Punct && ts.peek().text == "^")) return base;
        ts.take();
        Token e = ts.take();
        if (e.kind != Tok::Number || e.text.find('/') != std::string::npos)
            fail(e, "expected a natural exponent");
        unsigned long n = std::stoul(e.text);
        NCPoly acc = NCPoly::one(pres_);
        for (unsigned long i = 0; i < n; ++i) acc = acc * base;
        return acc;
    }

    CPoly to_coeff(const Token& at, const NCPoly& p) {
        for (const auto& [e, c] : p.terms())
            if (!exp_is_zero(e)) fail(at, "expression must lie in the coefficient ring");
        if (p.is_zero()) return ring_->zero();
        return p.terms().front().second;
    }

    void finalize_presentation() {
        if (!ring_) {
            Token t{Tok::End, "", 1, 1};
            fail(t, "missing coeff clause");
        }
        if (var_names_.empty()) {
            Token t{Tok::End, "", 1, 1};
            fail(t, "missing vars clause");
        }

        PresentationSpec spec;
        spec.ring = ring_;
        spec.vars = var_names_;
        if (order_decl_) {
            auto& [kind, names, at] = *order_decl_;
            std::vector<int> prec;
            for (const auto& nm : names) {
                auto it = std::find(var_names_.begin(), var_names_.end(), nm);
                if (it == var_names_.end()) fail(at, "order names undeclared variable '" + nm + "'");
                prec.push_back(static_cast<int>(it - var_names_.begin()));
            }
            if (prec.size() != var_names_.size())
                fail(at, "order clause must rank every variable");
            spec.order = MonomialOrder(kind, prec);
        }

        // the maps and relations need polynomial parsing, which needs a
        // presentation; bootstrap with a trivial one sharing the same ring
        {
            PresentationSpec boot;
            boot.ring = ring_;
            boot.vars = var_names_;
            boot.order = spec.order;
            auto [p, rep] = Presentation::build(boot);
            if (!p) {
                Token t{Tok::End, "", 1, 1};
                fail(t, "presentation rejected: " + rep.str());
            }
            pres_ = p;
        }

        for (auto& md : map_decls_) {
            auto vit = std::find(var_names_.begin(), var_names_.end(), md.var);
            if (vit == var_names_.end()) fail(md.at, "undeclared variable '" + md.var + "'");
            size_t vi = vit - var_names_.begin();
            auto ensure_sigma = [&](size_t i) -> TwistMap& {
                if (!spec.sigma.count(i)) {
                    TwistMap tw;
                    for (size_t k = 0; k < coeff_names_.size(); ++k) {
                        tw.images.push_back(ring_->generator(k));
                        tw.inverse_images.push_back(ring_->generator(k));
                    }
                    spec.sigma[i] = tw;
                }
                return spec.sigma[i];
            };
            for (auto& [gen, toks] : md.entries) {
                auto git = std::find(coeff_names_.begin(), coeff_names_.end(), gen);
                if (git == coeff_names_.end())
                    fail(md.at, "undeclared coefficient generator '" + gen + "'");
                size_t gi = git - coeff_names_.begin();
                TokenStream ts = stream(toks);
                CPoly value = to_coeff(md.at, parse_polyexpr(ts));
                if (!ts.at_end()) fail(ts.peek(), "trailing tokens in map image");
                if (md.kw == "sigma")
                    ensure_sigma(vi).images[gi] = value;
                else if (md.kw == "sigma_inv")
                    ensure_sigma(vi).inverse_images[gi] = value;
                else {
                    if (!spec.delta.count(vi))
                        spec.delta[vi] = SkewDerivation{std::vector<CPoly>(coeff_names_.size(),
                                                                           ring_->zero())};
                    spec.delta[vi].images[gi] = value;
                }
            }
        }

        for (auto& rd : relation_decls_) {
            auto jit = std::find(var_names_.begin(), var_names_.end(), rd.lhs1);
            auto iit = std::find(var_names_.begin(), var_names_.end(), rd.lhs2);
            if (jit == var_names_.end()) fail(rd.at, "undeclared variable '" + rd.lhs1 + "'");
            if (iit == var_names_.end()) fail(rd.at, "undeclared variable '" + rd.lhs2 + "'");
            size_t j = jit - var_names_.begin();
            size_t i = iit - var_names_.begin();
            if (!(i < j)) fail(rd.at, "left side must be x_j*x_i with j > i in declaration order");
            TokenStream ts = stream(rd.rhs);
            NCPoly rhs = parse_polyexpr(ts);
            if (!ts.at_end()) fail(ts.peek(), "trailing tokens in relation");

            // split c_ij x_i x_j + d_ij
            Exp xij(var_names_.size(), 0);
            xij[i] += 1, xij[j] += 1;
            CPoly cij = ring_->zero();
            LinearTail tail{ring_->zero(), std::vector<CPoly>(var_names_.size(), ring_->zero())};
            for (const auto& [e, c] : rhs.terms()) {
                if (e == xij) {
                    cij = c;
                } else if (exp_is_zero(e)) {
                    tail.c0 = c;
                } else if (total_degree(e) == 1) {
                    size_t k = 0;
                    while (!e[k]) ++k;
                    tail.cvar[k] = c;
                } else {
                    fail(rd.at, "relation tail must have degree at most 1");
                }
            }
            if (cij.is_zero()) fail(rd.at, "relation must contain the x_i*x_j term");
            spec.relations[{i, j}] = {cij, tail};
        }

        auto [p, rep] = Presentation::build(spec);
        out_.report = rep;
        if (!p) {
            Token t{Tok::End, "", 1, 1};
            fail(t, "presentation rejected: " + rep.str());
        }
        out_.presentation = p;
        pres_ = p;
    }

    void resolve_define(const std::string& name, RawDefine& d) {
        out_.define_order.push_back(name);
        // vector or matrix literal?
        if (!d.tokens.empty() && d.tokens.front().kind == Tok::Punct &&
            d.tokens.front().text == "[") {
            bool matrix = d.tokens.size() > 1 && d.tokens[1].kind == Tok::Punct &&
                          d.tokens[1].text == "[";
            TokenStream ts = stream(d.tokens);
            if (matrix) {
                out_.matrices.emplace(name, parse_matrix(ts));
            } else {
                out_.vectors.emplace(name, parse_vector(ts));
            }
            if (!ts.at_end()) fail(ts.peek(), "trailing tokens in definition");
            return;
        }
        TokenStream ts = stream(d.tokens);
        NCPoly p = parse_polyexpr(ts);
        if (!ts.at_end()) fail(ts.peek(), "trailing tokens in definition");
        out_.polys.emplace(name, std::move(p));
    }

    ModVec parse_vector(TokenStream& ts) {
        Token open = ts.take(); // '['
        std::vector<NCPoly> comps;
        comps.push_back(parse_polyexpr(ts));
        while (ts.peek().kind == Tok::Punct && ts.peek().text == ";") {
            ts.take();
            comps.push_back(parse_polyexpr(ts));
        }
        Token close = ts.take();
        if (close.kind != Tok::Punct || close.text != "]") fail(close, "expected ']'");
        (void)open;
        return ModVec::from_components(std::move(comps), out_.module_scheme);
    }

    MatrixOverA parse_matrix(TokenStream& ts) {
        Token open = ts.take(); // '['
        std::vector<std::vector<NCPoly>> transpose_rows;
        while (true) {
            Token rowopen = ts.take();
            if (rowopen.kind != Tok::Punct || rowopen.text != "[") fail(rowopen, "expected '['");
            std::vector<NCPoly> row;
            row.push_back(parse_polyexpr(ts));
            while (ts.peek().kind == Tok::Punct && ts.peek().text == ",") {
                ts.take();
                row.push_back(parse_polyexpr(ts));
            }
            Token rowclose = ts.take();
            if (rowclose.kind != Tok::Punct || rowclose.text != "]") fail(rowclose, "expected ']'");
            transpose_rows.push_back(std::move(row));
            if (ts.peek().kind == Tok::Punct && ts.peek().text == ",") {
                ts.take();
                continue;
            }
            break;
        }
        Token close = ts.take();
        if (close.kind != Tok::Punct || close.text != "]") fail(close, "expected ']'");
        (void)open;
        // the literal lists rows of F^T, i.e. the columns of F
        return MatrixOverA::from_rows(pres_, std::move(transpose_rows)).transpose();
    }

    Lexer lex_;
    PresentationFile out_;

    std::shared_ptr<const CoeffRing> ring_;
    std::shared_ptr<const Presentation> pres_;
    std::vector<std::string> coeff_names_;
    std::vector<std::string> var_names_;
    std::set<std::string> namespace_;
    std::optional<std::tuple<OrderKind, std::vector<std::string>, Token>> order_decl_;

    struct MapDecl {
        Token at;
        std::string kw;
        std::string var;
        std::vector<std::pair<std::string, std::vector<Token>>> entries;
    };
    std::vector<MapDecl> map_decls_;

    struct RelationDecl {
        Token at;
        std::string lhs1, lhs2;
        std::vector<Token> rhs;
    };
    std::vector<RelationDecl> relation_decls_;

    std::vector<std::pair<std::string, RawDefine>> pending_defines_;
};

} // namespace

PresentationFile parse_presentation_file(const std::string& text) {
    Parser p(text);
    return p.run();
}

std::string render_presentation_file(const PresentationFile& file) {
    const auto& pres = file.presentation;
    const auto& ring = pres->ring();
    const auto& vars = pres->var_names();
    const auto& gens = ring->generator_names();
    std::ostringstream os;

    os << "coeff " << ring->str() << "\n";
    os << "vars ";
    for (size_t i = 0; i < vars.size(); ++i) os << (i ? ", " : "") << vars[i];
    os << "\n";
    os << "order " << pres->order().str(vars) << "\n";
    if (file.module_scheme_given)
        os << "module_order " << (file.module_scheme == ModuleScheme::TOP ? "top" : "toprev")
           << "\n";

    auto coeff_str = [&](const CPoly& c) { return c.str(gens); };
    for (size_t i = 0; i < vars.size(); ++i) {
        bool nontrivial = false;
        for (size_t k = 0; k < gens.size(); ++k)
            if (pres->sigma(i, ring->generator(k)) != ring->generator(k)) nontrivial = true;
        if (nontrivial) {
            os << "sigma " << vars[i] << ": ";
            for (size_t k = 0; k < gens.size(); ++k)
                os << (k ? ", " : "") << gens[k] << " -> "
                   << coeff_str(pres->sigma(i, ring->generator(k)));
            os << "\n";
            os << "sigma_inv " << vars[i] << ": ";
            for (size_t k = 0; k < gens.size(); ++k)
                os << (k ? ", " : "") << gens[k] << " -> "
                   << coeff_str(pres->sigma_inv(i, ring->generator(k)));
            os << "\n";
        }
        bool has_delta = false;
        for (size_t k = 0; k < gens.size(); ++k)
            if (!pres->delta(i, ring->generator(k)).is_zero()) has_delta = true;
        if (has_delta) {
            os << "delta " << vars[i] << ": ";
            bool firstk = true;
            for (size_t k = 0; k < gens.size(); ++k) {
                CPoly im = pres->delta(i, ring->generator(k));
                if (im.is_zero()) continue;
                os << (firstk ? "" : ", ") << gens[k] << " -> " << coeff_str(im);
                firstk = false;
            }
            os << "\n";
        }
    }

    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j) {
            const CPoly& cij = pres->c(i, j);
            const LinearTail& dij = pres->d(i, j);
            if (cij.is_one() && dij.is_zero()) continue;
            Exp e(vars.size(), 0);
            e[i] += 1, e[j] += 1;
            NCPoly rhs = NCPoly::monomial(pres, e, cij);
            if (!dij.c0.is_zero()) rhs += NCPoly::coeff(pres, dij.c0);
            for (size_t k = 0; k < vars.size(); ++k)
                if (!dij.cvar[k].is_zero())
                    rhs += NCPoly::monomial(pres, exp_unit(vars.size(), k), dij.cvar[k]);
            os << "relation " << vars[j] << "*" << vars[i] << " = " << rhs.str() << "\n";
        }

    for (const auto& name : file.define_order) {
        os << "define " << name << " = ";
        if (auto it = file.polys.find(name); it != file.polys.end()) {
            os << it->second.str();
        } else if (auto vt = file.vectors.find(name); vt != file.vectors.end()) {
            os << "[ ";
            for (size_t k = 0; k < vt->second.m(); ++k)
                os << (k ? " ; " : "") << vt->second.component(k).str();
            os << " ]";
        } else if (auto mt = file.matrices.find(name); mt != file.matrices.end()) {
            os << mt->second.transpose().str(); // back to rows-of-the-transpose
        }
        os << "\n";
    }
    return os.str();
}

} // namespace spbw
