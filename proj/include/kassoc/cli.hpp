#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kassoc {

struct RunConfig {
    std::uint64_t seed = 1;
    int trials = 8;
    int index_base = 1;
    std::string output = "table";  // or "json"
};

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// Runs one command line (without the program name).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kassoc
