#ifndef THEOREMS_REPORT_HPP
#define THEOREMS_REPORT_HPP

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace theorems {

/// One verified claim: passes iff predicted and computed agree exactly.
/// Every comparison in this module is exact; there are no tolerances.
struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string predicted;
  std::string computed;
  bool pass;
  std::chrono::microseconds elapsed;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::microseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline VerificationReport make_report(std::string claim,
                                      std::vector<std::pair<std::string, std::string>> params,
                                      std::string predicted, std::string computed,
                                      const Stopwatch& watch) {
  const bool pass = predicted == computed;
  return VerificationReport{std::move(claim), std::move(params), std::move(predicted),
                            std::move(computed), pass, watch.elapsed()};
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace theorems

#endif
