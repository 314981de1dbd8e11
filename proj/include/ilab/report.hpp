#ifndef ILAB_REPORT_HPP
#define ILAB_REPORT_HPP

#include <json.hpp>
#include <string>
#include <vector>

namespace ilab {

/// One verification check inside a suite.
struct CheckResult {
  std::string id;
  bool pass = false;
  double residual = 0;
  double tolerance = 0;
  std::string note;  // optional
};

/// Deterministic machine-readable suite report. The body is byte-identical
/// for identical inputs and seed; the timestamp lives next to the body and
/// never enters the hash.
class Report {
 public:
  Report(std::string suite, std::uint64_t seed);

  void setParameter(const std::string& key, const nlohmann::json& value);
  void add(CheckResult r);
  void merge(const Report& other, const std::string& prefix);

  bool allPass() const;
  const std::vector<CheckResult>& results() const { return results_; }

  /// The hashed body: schemaVersion, artifactVersion, suite, seed, rng,
  /// parameters, results (sorted by check id), overallPass.
  nlohmann::json body() const;
  /// Body plus {"meta": {"timestamp": ...}} wrapper.
  nlohmann::json document() const;

  /// FNV-1a hash of the serialized body, hex.
  std::string bodyHash() const;

 private:
  std::string suite_;
  std::uint64_t seed_;
  nlohmann::json parameters_ = nlohmann::json::object();
  std::vector<CheckResult> results_;
};

/// JSON serialization with sorted keys and every floating value rendered
/// with 17 significant digits; newline-terminated when pretty.
std::string dumpDeterministic(const nlohmann::json& j, int indent = 2);

constexpr int kSchemaVersion = 1;
constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace ilab

#endif  // ILAB_REPORT_HPP
