#pragma once

#include <cstdint>
#include <string>

namespace omega::cli {

struct RunConfig {
    int radial_order = 64;
    int angular_order = 256;
    double tol = 0.0;  // 0: per-suite default
    long max_m = -1;   // -1: per-suite default
    std::uint64_t seed = 12345;
    std::string format = "json";
};

// exit codes: 0 ok, 1 verification failure, 2 bad arguments, 3 domain error
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitDomain = 3;

int cmd_eval(const std::string& target, long m, long n, const std::string& point,
             const std::string& point2, const RunConfig& cfg);
int cmd_verify(const std::string& suite, const RunConfig& cfg);
int cmd_decompose(const std::string& fspec, const RunConfig& cfg, const std::string& out_path);
int cmd_table(const std::string& which, const RunConfig& cfg);
int cmd_zonal(long m, const std::string& p1, const std::string& p2,
              const std::string& restrict_to, const RunConfig& cfg);
int cmd_transform(const std::string& psi, const std::string& family, const std::string& point,
                  const RunConfig& cfg);

}  // namespace omega::cli
