#ifndef SPBW_PARSER_HPP
#define SPBW_PARSER_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "spbw/matrixkit.hpp"

namespace spbw {

struct ParseError : Error {
    ParseError(size_t line, size_t col, const std::string& what)
        : Error("line " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line(line), col(col) {}
    size_t line, col;
};

// A parsed .spbw file: one presentation plus named definitions.
struct PresentationFile {
    std::shared_ptr<const Presentation> presentation;
    ValidationReport report;
    ModuleScheme module_scheme = ModuleScheme::TOPREV;
    bool module_scheme_given = false;

    std::vector<std::string> define_order;
    std::map<std::string, NCPoly> polys;
    std::map<std::string, ModVec> vectors;
    std::map<std::string, MatrixOverA> matrices;

    bool has(const std::string& name) const {
        return polys.count(name) || vectors.count(name) || matrices.count(name);
    }
};

// Grammar (sketch):
//   file       := stmt*
//   stmt       := "coeff" ringdecl | "vars" idlist | "order" orderdecl
//               | "module_order" ("top"|"toprev")
//               | "sigma" ID ":" maplist | "sigma_inv" ID ":" maplist
//               | "delta" ID ":" maplist
//               | "relation" ID "*" ID "=" polyexpr
//               | "define" ID "=" (polyexpr | "[" polyexpr (";" polyexpr)* "]"
//                                  | "[" row ("," row)* "]")
//   ringdecl   := "QQ" | "QQ" "[" idlist "]"
//   orderdecl  := ("deglex"|"degrevlex") ID (">" ID)*
//   maplist    := ID "->" polyexpr ("," ID "->" polyexpr)*
//   polyexpr   := ("+"|"-")? term (("+"|"-") term)*
//   term       := factor ("*" factor)*
//   factor     := rational | ID ("^" nat)? | "(" polyexpr ")"
// Rationals are written p/q or p. Unspecified sigma/delta default to
// identity/zero, unspecified relations to c_ij = 1, d_ij = 0. Matrix
// literals list the rows of F^T (the columns of F), matching the column
// convention for homomorphism matrices.
PresentationFile parse_presentation_file(const std::string& text);

// canonical rendering; parsing it again reproduces the same file
std::string render_presentation_file(const PresentationFile& file);

} // namespace spbw

#endif
