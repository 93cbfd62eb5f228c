#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

namespace ordlat {

/// One checked property: a stable id, a one-line statement of what was
/// checked, how (exhaustive, sampled, symbolic, ...), and the outcome.
struct Verdict {
  std::string id;
  std::string anchor;
  std::string mode;
  bool pass = true;
  std::string witness;  // empty unless the check failed or found something notable
  std::size_t cases = 0;
  double wall_ms = 0.0;  // excluded from deterministic renderings
};

inline bool all_pass(const std::vector<Verdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.pass; });
}

inline const Verdict* first_failure(const std::vector<Verdict>& vs) {
  auto it = std::find_if(vs.begin(), vs.end(), [](const Verdict& v) { return !v.pass; });
  return it == vs.end() ? nullptr : &*it;
}

/// Accumulates verdicts for one property while cases are checked; keeps the
/// first counterexample only.
class PropertyTally {
 public:
  PropertyTally(std::string id, std::string anchor, std::string mode)
      : v_{std::move(id), std::move(anchor), std::move(mode), true, {}, 0, 0.0} {}

  template <std::invocable WitnessFn>
  bool expect(bool ok, WitnessFn&& describe) {
    ++v_.cases;
    if (!ok && v_.pass) {
      v_.pass = false;
      v_.witness = describe();
    }
    return ok;
  }
  bool expect(bool ok, const std::string& witness = "") {
    return expect(ok, [&] { return witness; });
  }

  void set_mode(std::string mode) { v_.mode = std::move(mode); }
  void note(std::string text) { v_.witness = std::move(text); }
  bool pass() const { return v_.pass; }
  Verdict done() && { return std::move(v_); }
  const Verdict& peek() const { return v_; }

 private:
  Verdict v_;
};

}  // namespace ordlat
