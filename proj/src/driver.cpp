#include "spbw/driver.hpp"

#include <sstream>

namespace spbw {

namespace {

const NCPoly& poly_arg(const PresentationFile& file, const std::string& name) {
    auto it = file.polys.find(name);
    if (it == file.polys.end()) throw Error("'" + name + "' is not a defined polynomial");
    return it->second;
}

const MatrixOverA& matrix_arg(const PresentationFile& file, const std::string& name) {
    auto it = file.matrices.find(name);
    if (it == file.matrices.end()) throw Error("'" + name + "' is not a defined matrix");
    return it->second;
}

// a column vector may be written either as a matrix literal or as a module
// vector [v1 ; ... ; vr]
MatrixOverA column_arg(const PresentationFile& file, const std::string& name) {
    if (auto it = file.matrices.find(name); it != file.matrices.end()) {
        if (it->second.cols() != 1) throw Error("'" + name + "' is not a column");
        return it->second;
    }
    if (auto it = file.vectors.find(name); it != file.vectors.end()) {
        const ModVec& v = it->second;
        MatrixOverA col(v.pres(), v.m(), 1);
        for (size_t k = 0; k < v.m(); ++k) col.at(k, 0) = v.component(k);
        return col;
    }
    throw Error("'" + name + "' is not a defined column");
}

std::string criterion_summary(const std::vector<NCPoly>& basis, size_t cap) {
    size_t checked = 0;
    const size_t n = basis.size();
    std::vector<size_t> subset;
    for (size_t size = 1; size <= std::min(cap, n); ++size) {
        subset.assign(size, 0);
        for (size_t i = 0; i < size; ++i) subset[i] = i;
        while (true) {
            std::vector<NCPoly> sub;
            for (size_t idx : subset) sub.push_back(basis[idx]);
            BFData bf = bf_set(sub);
            for (const auto& b : bf.generators) {
                NCPoly combo = NCPoly::zero(basis.front().pres());
                for (size_t k = 0; k < sub.size(); ++k) {
                    if (b[k].is_zero()) continue;
                    combo += NCPoly::monomial(basis.front().pres(), bf.gammas[k], b[k]) * sub[k];
                }
                ++checked;
                if (!divide(combo, basis).remainder.is_zero())
                    return "criterion check: FAILED";
            }
            size_t i = size;
            bool more = false;
            while (i-- > 0) {
                if (subset[i] != i + n - size) {
                    ++subset[i];
                    for (size_t j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
                    more = true;
                    break;
                }
            }
            if (!more) break;
        }
    }
    return "criterion check: all " + std::to_string(checked) +
           " syzygy combinations over subsets of size <= " + std::to_string(std::min(cap, n)) +
           " reduce to 0";
}

std::string mod_criterion_summary(const std::vector<ModVec>& basis, size_t cap) {
    size_t checked = 0;
    const size_t n = basis.size();
    std::vector<size_t> subset;
    for (size_t size = 1; size <= std::min(cap, n); ++size) {
        subset.assign(size, 0);
        for (size_t i = 0; i < size; ++i) subset[i] = i;
        while (true) {
            std::vector<ModVec> sub;
            for (size_t idx : subset) sub.push_back(basis[idx]);
            ModBFData bf = mod_bf_set(sub);
            if (bf.nonzero) {
                for (const auto& b : bf.generators) {
                    ModVec combo(basis.front().pres(), basis.front().m(),
                                 basis.front().scheme());
                    for (size_t k = 0; k < sub.size(); ++k) {
                        if (b[k].is_zero()) continue;
                        combo += NCPoly::monomial(basis.front().pres(), bf.gammas[k], b[k]) * sub[k];
                    }
                    ++checked;
                    if (!mod_divide(combo, basis).remainder.is_zero())
                        return "criterion check: FAILED";
                }
            }
            size_t i = size;
            bool more = false;
            while (i-- > 0) {
                if (subset[i] != i + n - size) {
                    ++subset[i];
                    for (size_t j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
                    more = true;
                    break;
                }
            }
            if (!more) break;
        }
    }
    return "criterion check: all " + std::to_string(checked) +
           " syzygy combinations over subsets of size <= " + std::to_string(std::min(cap, n)) +
           " reduce to 0";
}

} // namespace

RunResult run_command(const std::string& command, const std::string& file_text,
                      const std::vector<std::string>& args, const RunFlags& flags) {
    RunResult out;
    std::ostringstream os;
    os << "# spbw-report v1\n";
    os << "command: " << command << "\n";
    try {
        PresentationFile file = parse_presentation_file(file_text);
        const auto& pres = file.presentation;
        os << "presentation: " << pres->ring()->str() << "<";
        for (size_t i = 0; i < pres->nvars(); ++i)
            os << (i ? "," : "") << pres->var_names()[i];
        os << ">\n";

        BuchbergerOptions bopt;
        bopt.max_basis = flags.max_basis;
        bopt.max_degree = flags.max_degree;
        bopt.pairs_only = flags.pairs_only;
        bopt.trace = flags.trace;

        if (command == "validate") {
            os << "result: " << file.report.str() << "\n";
        } else if (command == "mul") {
            if (args.size() != 2) throw Error("mul needs two polynomial names");
            const NCPoly& f = poly_arg(file, args[0]);
            const NCPoly& g = poly_arg(file, args[1]);
            os << args[0] << "*" << args[1] << " = " << (f * g).str() << "\n";
        } else if (command == "divide") {
            if (args.size() < 2) throw Error("divide needs a dividend and divisors");
            const NCPoly& f = poly_arg(file, args[0]);
            std::vector<NCPoly> divisors;
            std::vector<std::string> names;
            for (size_t i = 1; i < args.size(); ++i) {
                if (args[i] == "by" && i == 1) continue;
                divisors.push_back(poly_arg(file, args[i]));
                names.push_back(args[i]);
            }
            DivisionOptions dopt;
            dopt.trace = flags.trace;
            DivisionResult res = divide(f, divisors, dopt);
            for (const auto& line : res.trace) os << line << "\n";
            for (size_t i = 0; i < divisors.size(); ++i)
                os << "q" << i + 1 << " = " << res.quotients[i].str() << "\n";
            os << "h = " << res.remainder.str() << "\n";
        } else if (command == "gb") {
            std::vector<NCPoly> gens;
            if (args.empty()) {
                for (const auto& name : file.define_order)
                    if (file.polys.count(name)) gens.push_back(file.polys.at(name));
            } else {
                for (const auto& a : args) gens.push_back(poly_arg(file, a));
            }
            if (gens.empty()) throw Error("gb needs polynomial generators");
            BuchbergerResult res = buchberger(gens, bopt);
            for (const auto& line : res.trace) os << line << "\n";
            os << "basis size: " << res.basis.size() << " (" << res.rounds << " rounds)\n";
            for (size_t i = 0; i < res.basis.size(); ++i)
                os << "g" << i + 1 << " = " << res.basis[i].str() << "\n";
            os << criterion_summary(res.basis, 3) << "\n";
        } else if (command == "modgb") {
            std::vector<ModVec> gens;
            if (args.empty()) {
                for (const auto& name : file.define_order)
                    if (file.vectors.count(name)) gens.push_back(file.vectors.at(name));
            } else {
                for (const auto& a : args) {
                    auto it = file.vectors.find(a);
                    if (it == file.vectors.end())
                        throw Error("'" + a + "' is not a defined vector");
                    gens.push_back(it->second);
                }
            }
            if (gens.empty()) throw Error("modgb needs vector generators");
            ModBuchbergerResult res = mod_buchberger(gens, bopt);
            for (const auto& line : res.trace) os << line << "\n";
            os << "basis size: " << res.basis.size() << " (" << res.rounds << " rounds)\n";
            for (size_t i = 0; i < res.basis.size(); ++i)
                os << "g" << i + 1 << " = " << res.basis[i].str() << "\n";
            os << mod_criterion_summary(res.basis, 3) << "\n";
        } else if (command == "linv") {
            if (args.size() != 1) throw Error("linv needs one matrix name");
            const MatrixOverA& F = matrix_arg(file, args[0]);
            auto X = left_inverse(F);
            if (!X) {
                os << "left inverse: none\n";
                out.exit_code = EXIT_MATH;
            } else {
                os << "left inverse (rows of X^T): " << X->transpose().str() << "\n";
            }
        } else if (command == "unimod") {
            if (args.size() != 1) throw Error("unimod needs one column name");
            MatrixOverA v = column_arg(file, args[0]);
            UnimodularResult res = is_unimodular_column(v);
            if (res.unimodular) {
                os << "unimodular: yes\n";
                os << "certificate: [";
                for (size_t i = 0; i < res.certificate.size(); ++i)
                    os << (i ? ", " : "") << res.certificate[i].str();
                os << "]\n";
            } else {
                os << "unimodular: no\n";
                out.exit_code = EXIT_MATH;
            }
        } else if (command == "idem-diag") {
            if (args.size() != 1) throw Error("idem-diag needs one matrix name");
            const MatrixOverA& F = matrix_arg(file, args[0]);
            IdempotentDiagonalization res = idempotent_diagonalize_division(F);
            os << "rank: " << res.rank << "\n";
            os << "U (rows of U^T): " << res.u.transpose().str() << "\n";
        } else {
            throw Error("unknown command '" + command + "'");
        }
    } catch (const ResourceLimit& e) {
        os << "error: " << e.what() << "\n";
        out.exit_code = EXIT_GUARD;
    } catch (const ParseError& e) {
        os << "error: " << e.what() << "\n";
        out.exit_code = EXIT_INPUT;
    } catch (const MathError& e) {
        os << "error: " << e.what() << "\n";
        out.exit_code = EXIT_MATH;
    } catch (const Error& e) {
        os << "error: " << e.what() << "\n";
        if (out.exit_code == EXIT_OK) out.exit_code = EXIT_INPUT;
    }
    out.report = os.str();
    return out;
}

} // namespace spbw
