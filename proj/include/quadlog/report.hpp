#pragma once

#include <string>
#include <vector>

namespace quadlog {

struct VerificationReport {
    std::string claim;
    std::string instance;
    bool pass = false;
    std::vector<std::string> residual_terms;
    long wall_time_ms = 0;

    std::string json() const;
};

/// Milliseconds wall clock helper.
class Stopwatch {
public:
    Stopwatch();
    long ms() const;

private:
    long long start_;
};

} // namespace quadlog
