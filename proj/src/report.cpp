#include "quadlog/report.hpp"

#include <chrono>
#include <sstream>

namespace quadlog {

namespace {
std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}
} // namespace

std::string VerificationReport::json() const {
    std::ostringstream os;
    os << "{\"claim\":\"" << escape(claim) << "\",\"instance\":\"" << escape(instance)
       << "\",\"status\":\"" << (pass ? "pass" : "fail") << "\",\"residual_terms\":[";
    for (size_t i = 0; i < residual_terms.size(); ++i) {
        if (i) os << ",";
        os << "\"" << escape(residual_terms[i]) << "\"";
    }
    os << "],\"wall_time_ms\":" << wall_time_ms << "}";
    return os.str();
}

Stopwatch::Stopwatch() {
    start_ = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now().time_since_epoch())
                 .count();
}

long Stopwatch::ms() const {
    auto now = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now().time_since_epoch())
                   .count();
    return (long)(now - start_);
}

} // namespace quadlog
