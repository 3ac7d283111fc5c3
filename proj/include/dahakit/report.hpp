#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace daha {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // first failure detail, empty when passing
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  void add(const std::string& name, bool pass, const std::string& witness = "") {
    checks.push_back({name, pass, witness});
  }
  bool allPass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string json() const;
  std::string text() const;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace daha
