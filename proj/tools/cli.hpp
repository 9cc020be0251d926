#pragma once

#include <iosfwd>
#include <string>

namespace totalparts::cli {

struct Config {
    int precision_start_bits = 128;
    int precision_cap_bits = 8192;
    int workers = 1;
    std::string output_format = "table"; // json | csv | table
};

/// Applies TOTALPARTS_PRECISION to the defaults; throws std::invalid_argument
/// when the value is not an integer in [32, cap].
Config config_from_environment();

/// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace totalparts::cli
