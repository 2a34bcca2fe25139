#pragma once

// Check records and suite reports with a stable JSON shape.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace k3k {

struct CheckRecord {
    std::string check_id;
    std::string claim;
    std::string status;  // pass | fail | skip | inconclusive
    std::string detail;
    int64_t elapsed_ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    void finalize() {
        std::sort(checks.begin(), checks.end(),
                  [](const CheckRecord& a, const CheckRecord& b) {
                      return a.check_id < b.check_id;
                  });
    }

    // pass iff no fail and no inconclusive; skips are tolerated
    bool passed() const {
        for (const auto& c : checks)
            if (c.status != "pass" && c.status != "skip") return false;
        return true;
    }

    std::string overall() const { return passed() ? "pass" : "fail"; }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            arr.push_back({{"check_id", c.check_id},
                           {"claim", c.claim},
                           {"status", c.status},
                           {"detail", c.detail},
                           {"elapsed_ms", c.elapsed_ms}});
        }
        return {{"suite", suite}, {"overall", overall()}, {"checks", arr}};
    }
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace k3k
