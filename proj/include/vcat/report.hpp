#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vcat {

/// One failed diagram instance: which diagram, at which index tuple, and the
/// two composite morphisms that disagreed. `lhs`/`rhs` hold morphism names,
/// or "<ill-typed>" when a leg did not even compose.
struct Witness {
  std::string diagram;
  std::vector<std::string> at;
  std::string lhs;
  std::string rhs;
};

enum class Status { Pass, Fail, SampledPass, NotApplicable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::SampledPass: return "sampled-pass";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

/// Outcome of one named check: every diagram instance evaluated counts toward
/// `instances`; sampled runs record the sample size and seed used.
struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::vector<Witness> witnesses;
  std::uint64_t instances = 0;
  bool exhaustive = true;
  std::uint64_t sample_size = 0;
  std::uint64_t seed = 0;
  std::string note;

  bool failed() const { return status == Status::Fail; }
};

/// The axiom families of an iterated monoidal structure, used for coverage
/// accounting: which instances a verification actually leaned on.
enum class Axiom {
  Pentagon,
  InternalUnit,
  ExternalUnit,
  InternalAssoc,
  ExternalAssoc,
  GiantHexagon,
};

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Pentagon: return "pentagon";
    case Axiom::InternalUnit: return "internal-unit";
    case Axiom::ExternalUnit: return "external-unit";
    case Axiom::InternalAssoc: return "internal-assoc";
    case Axiom::ExternalAssoc: return "external-assoc";
    case Axiom::GiantHexagon: return "giant-hexagon";
  }
  return "?";
}

/// An axiom instance: a family plus the tensor indices it was invoked at.
/// Unused index slots stay 0 (pentagon uses one slot, unit/assoc two, the
/// giant hexagon three).
struct AxiomKey {
  Axiom axiom;
  std::array<int, 3> idx{0, 0, 0};

  friend bool operator<(const AxiomKey& a, const AxiomKey& b) {
    if (a.axiom != b.axiom) return a.axiom < b.axiom;
    return a.idx < b.idx;
  }
  friend bool operator==(const AxiomKey& a, const AxiomKey& b) {
    return a.axiom == b.axiom && a.idx == b.idx;
  }
};

/// Coverage counters. `consumed` counts instances a verification relied on to
/// establish its conclusion; `delooped` counts instances evaluated as part of
/// certifying the induced structure's own axiom suite one level up.
struct AxiomUsage {
  std::map<AxiomKey, std::uint64_t> consumed;
  std::map<AxiomKey, std::uint64_t> delooped;

  void record_consumed(Axiom a, std::array<int, 3> idx, std::uint64_t n = 1) {
    if (n) consumed[AxiomKey{a, idx}] += n;
  }
  void record_delooped(Axiom a, std::array<int, 3> idx, std::uint64_t n = 1) {
    if (n) delooped[AxiomKey{a, idx}] += n;
  }
  void merge(const AxiomUsage& other) {
    for (const auto& [k, n] : other.consumed) consumed[k] += n;
    for (const auto& [k, n] : other.delooped) delooped[k] += n;
  }
  bool empty() const { return consumed.empty() && delooped.empty(); }
};

/// Aggregated evidence for a suite of checks.
struct DiagramReport {
  std::string suite;
  std::vector<CheckResult> checks;
  AxiomUsage usage;
  double wall_seconds = 0.0;

  bool passed() const {
    for (const auto& c : checks)
      if (c.failed()) return false;
    return true;
  }

  std::uint64_t total_instances() const {
    std::uint64_t n = 0;
    for (const auto& c : checks) n += c.instances;
    return n;
  }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void add(CheckResult r) { checks.push_back(std::move(r)); }

  void merge(const DiagramReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
    usage.merge(other.usage);
    wall_seconds += other.wall_seconds;
  }
};

/// Incremental builder used by all diagram scanners. Witnesses accumulate in
/// the scan order, which is canonical by construction.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { result_.name = std::move(name); }

  void count() { ++result_.instances; }

  void fail(std::string diagram, std::vector<std::string> at, std::string lhs, std::string rhs) {
    result_.status = Status::Fail;
    result_.witnesses.push_back(
        Witness{std::move(diagram), std::move(at), std::move(lhs), std::move(rhs)});
  }

  void note(std::string text) { result_.note = std::move(text); }

  void mark_sampled(std::uint64_t sample_size, std::uint64_t seed) {
    result_.exhaustive = false;
    result_.sample_size = sample_size;
    result_.seed = seed;
    if (result_.status == Status::Pass) result_.status = Status::SampledPass;
  }

  void mark_not_applicable(std::string why) {
    result_.status = Status::NotApplicable;
    result_.note = std::move(why);
  }

  CheckResult done() {
    if (result_.status == Status::SampledPass && !result_.witnesses.empty())
      result_.status = Status::Fail;
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

}  // namespace vcat
