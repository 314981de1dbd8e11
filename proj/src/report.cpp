#include "ilab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "ilab/rng.hpp"

namespace ilab {
namespace {

void appendEscaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dumpValue(std::string& out, const nlohmann::json& j, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent) * depth, ' ');
  const std::string padIn(static_cast<size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      // std::map storage already iterates keys in sorted order
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += padIn;
        appendEscaped(out, it.key());
        out += ": ";
        dumpValue(out, it.value(), indent, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += padIn;
        dumpValue(out, v, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case nlohmann::json::value_t::string:
      appendEscaped(out, j.get<std::string>());
      return;
    case nlohmann::json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case nlohmann::json::value_t::number_float: {
      double v = j.get<double>();
      char buf[48];
      if (std::isfinite(v))
        std::snprintf(buf, sizeof buf, "%.17g", v);
      else
        std::snprintf(buf, sizeof buf, "\"%s\"", v > 0 ? "inf" : (v < 0 ? "-inf" : "nan"));
      out += buf;
      return;
    }
    case nlohmann::json::value_t::number_integer: {
      out += std::to_string(j.get<long long>());
      return;
    }
    case nlohmann::json::value_t::number_unsigned: {
      out += std::to_string(j.get<unsigned long long>());
      return;
    }
    default:
      out += "null";
      return;
  }
}

}  // namespace

std::string dumpDeterministic(const nlohmann::json& j, int indent) {
  std::string out;
  dumpValue(out, j, indent, 0);
  out += "\n";
  return out;
}

Report::Report(std::string suite, std::uint64_t seed) : suite_(std::move(suite)), seed_(seed) {}

void Report::setParameter(const std::string& key, const nlohmann::json& value) {
  parameters_[key] = value;
}

void Report::add(CheckResult r) { results_.push_back(std::move(r)); }

void Report::merge(const Report& other, const std::string& prefix) {
  for (CheckResult r : other.results_) {
    r.id = prefix + "." + r.id;
    results_.push_back(std::move(r));
  }
  if (!other.parameters_.empty()) parameters_[prefix] = other.parameters_;
}

bool Report::allPass() const {
  return std::all_of(results_.begin(), results_.end(),
                     [](const CheckResult& r) { return r.pass; });
}

nlohmann::json Report::body() const {
  nlohmann::json b;
  b["schemaVersion"] = kSchemaVersion;
  b["artifactVersion"] = kArtifactVersion;
  b["suite"] = suite_;
  b["seed"] = seed_;
  b["rng"] = Rng::name();
  b["parameters"] = parameters_;
  std::vector<CheckResult> sorted = results_;
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  nlohmann::json rs = nlohmann::json::array();
  for (const CheckResult& r : sorted) {
    nlohmann::json e;
    e["id"] = r.id;
    e["status"] = r.pass ? "pass" : "fail";
    e["residual"] = r.residual;
    e["tolerance"] = r.tolerance;
    if (!r.note.empty()) e["note"] = r.note;
    rs.push_back(e);
  }
  b["results"] = rs;
  b["overallPass"] = allPass();
  return b;
}

nlohmann::json Report::document() const {
  nlohmann::json doc;
  doc["report"] = body();
  char buf[64];
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  doc["meta"] = {{"timestamp", buf}, {"bodyHash", bodyHash()}};
  return doc;
}

std::string Report::bodyHash() const {
  std::string s = dumpDeterministic(body(), 0);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ilab
