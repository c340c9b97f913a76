#pragma once

#include "cache.hpp"

#include "projdim/arith.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace projdim::cli {

enum ExitCode { kOk = 0, kComputationError = 1, kUsageError = 2 };

// Runs one command line (without the program name). Deterministic for a given
// argument list.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct RunConfig {
    std::vector<std::pair<long long, long long>> slopes;
    std::vector<std::string> computations{"dimension"};
    std::size_t count_n = 8;
    std::size_t pressure_n = 20;
    std::size_t entropy_n = 10;
    std::size_t fourier_n = 20;
    double tolerance = 1e-9;
    std::uint64_t seed = 1;
    std::string output_dir = "projdim-batch";
    std::string format = "json";
    unsigned jobs = 1;
};

// Throws projdim::Error(InvalidArgument | NotCoprime | OutOfRange) on bad input.
RunConfig parse_run_config(const std::string& json_text);

int batch_run(const RunConfig& config, const ResultCache& cache, std::ostream& out, std::ostream& err);

}  // namespace projdim::cli
