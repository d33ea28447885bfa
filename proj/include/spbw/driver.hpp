#ifndef SPBW_DRIVER_HPP
#define SPBW_DRIVER_HPP

#include <string>
#include <vector>

#include "spbw/parser.hpp"

namespace spbw {

// exit codes: 0 success, 1 mathematical failure, 2 input error, 3 resource guard
enum ExitCode { EXIT_OK = 0, EXIT_MATH = 1, EXIT_INPUT = 2, EXIT_GUARD = 3 };

struct RunFlags {
    bool trace = false;
    bool pairs_only = false;
    size_t max_basis = 128;
    uint32_t max_degree = 128;
};

struct RunResult {
    int exit_code = EXIT_OK;
    std::string report; // starts with "# spbw-report v1"
};

// command: validate | mul | divide | gb | modgb | linv | unimod | idem-diag
// args name entities defined in the file ("by" is accepted as a separator
// for divide).
RunResult run_command(const std::string& command, const std::string& file_text,
                      const std::vector<std::string>& args, const RunFlags& flags);

} // namespace spbw

#endif
