#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace wsym {

using json = nlohmann::json;

enum class Verdict { pass, fail, error };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::error: return "error";
  }
  return "error";
}

/// Machine-readable outcome of one check.
struct Report {
  std::string check;
  Verdict verdict = Verdict::pass;
  json witness = json::object();
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;

  bool passed() const { return verdict == Verdict::pass; }

  json to_json() const {
    json j;
    j["check"] = check;
    j["verdict"] = to_string(verdict);
    j["witness"] = witness;
    if (seed) j["seed"] = *seed;
    if (samples) j["samples"] = *samples;
    return j;
  }
};

}  // namespace wsym
