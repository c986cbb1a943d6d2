#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "aw/scalar.hpp"

namespace aw {

enum class CheckStatus { pass, fail, skipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckRecord {
  std::string name;
  std::string ref;       // which identity the check exercises
  CheckStatus status = CheckStatus::skipped;
  bool exact = true;     // exact backend check (residual reported as "exact")
  double residual = 0.0; // max residual seen (float checks)
  double elapsed = 0.0;  // seconds; reported in text output only
  std::string note;
};

struct Report {
  std::vector<CheckRecord> checks;

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  void sort_by_name() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  }
  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (c.status == s) ++n;
    return n;
  }
};

class CheckTimer {
 public:
  CheckTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Run one check body, capturing thrown errors as failures.
template <class Fn>
void run_check(Report& rep, const std::string& name, const std::string& ref, bool exact, Fn&& body) {
  CheckRecord rec;
  rec.name = name;
  rec.ref = ref;
  rec.exact = exact;
  CheckTimer timer;
  try {
    bool ok = body(rec);
    rec.status = ok ? CheckStatus::pass : CheckStatus::fail;
  } catch (const Error& e) {
    rec.status = CheckStatus::fail;
    rec.note = e.what();
  } catch (const std::exception& e) {
    rec.status = CheckStatus::fail;
    rec.note = e.what();
  }
  rec.elapsed = timer.seconds();
  rep.add(std::move(rec));
}

}  // namespace aw
