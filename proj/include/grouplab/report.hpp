#pragma once

// Per-group invariant reports and the batch helpers behind the command-line
// tool. Reports are deterministic: timing is recorded only on request and
// JSON objects are written with sorted keys.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "grouplab/abelian.hpp"
#include "grouplab/catalog.hpp"
#include "grouplab/cohomology.hpp"
#include "grouplab/error.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/todd_coxeter.hpp"
#include "grouplab/wedge.hpp"

namespace grouplab {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct RunConfig {
  std::size_t max_group_order = kDefaultMaxGroupOrder;
  std::size_t curly_cap = kDefaultCurlyCap;
  std::size_t exterior_cap = kDefaultExteriorCap;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t oracle_cap = kDefaultOracleCap;
  bool oracle = false;
  bool timing = false;
  bool reduce_generators = false;
  unsigned jobs = 1;  ///< never affects output

  nlohmann::json to_json() const {
    return nlohmann::json{{"max_group_order", max_group_order}, {"curly_cap", curly_cap},
                          {"exterior_cap", exterior_cap},       {"max_cosets", max_cosets},
                          {"oracle_cap", oracle_cap},           {"oracle", oracle},
                          {"timing", timing},                   {"reduce_generators", reduce_generators}};
  }

  WedgeOptions wedge_options(WedgeVariant v) const {
    WedgeOptions o;
    o.group_cap = v == WedgeVariant::Curly ? curly_cap : exterior_cap;
    o.enumeration.max_cosets = max_cosets;
    o.reduce_generators = reduce_generators;
    return o;
  }
};

inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string config_hash(const RunConfig& c) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(c.to_json().dump())));
  return buf;
}

struct WedgeSummary {
  std::size_t order = 0;
  std::size_t kernel_order = 0;
  std::vector<std::uint64_t> kernel_invariants;
  std::size_t cosets_defined = 0;

  friend bool operator==(const WedgeSummary&, const WedgeSummary&) = default;
};

struct OracleSummary {
  std::uint64_t h2_order = 0;  ///< |H²(G, Z/|G|)|
  std::vector<std::uint64_t> h2_invariants;
  std::uint64_t multiplier_order = 0;
  std::uint64_t b0_lower_bound = 0;
  std::vector<std::uint64_t> b0_invariants;

  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct FamilyInfo {
  std::size_t id = 0;
  std::vector<std::string> members;  ///< the other groups of the family, witnessed isoclinic

  friend bool operator==(const FamilyInfo&, const FamilyInfo&) = default;
};

struct InvariantReport {
  std::string name;
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::vector<std::uint64_t> abelianization;
  WedgeSummary curly;
  std::optional<WedgeSummary> exterior;
  std::optional<std::string> exterior_skipped;
  std::optional<OracleSummary> oracle;
  std::optional<std::string> oracle_skipped;
  std::optional<FamilyInfo> family;
  std::optional<std::map<std::string, double>> timing;  ///< seconds per stage
  std::string tool_version = kToolVersion;
  std::string config_hash;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;

  /// Description of the first broken internal identity, or nullopt.
  std::optional<std::string> consistency_problem() const {
    auto product = [](const std::vector<std::uint64_t>& f) {
      std::uint64_t p = 1;
      for (auto x : f) p *= x;
      return p;
    };
    if (curly.order != curly.kernel_order * derived_order) return "|G⋏G| != |ker κ|·|G'|";
    if (product(curly.kernel_invariants) != curly.kernel_order) return "curly kernel invariants do not multiply out";
    if (exterior && exterior->order != exterior->kernel_order * derived_order) return "|G∧G| != |M(G)|·|G'|";
    if (product(abelianization) * derived_order != order) return "|G^ab|·|G'| != |G|";
    if (order % center_order != 0) return "|Z(G)| does not divide |G|";
    return std::nullopt;
  }
};

inline nlohmann::json to_json(const WedgeSummary& w) {
  return nlohmann::json{{"order", w.order},
                        {"kernel_order", w.kernel_order},
                        {"kernel_invariants", w.kernel_invariants},
                        {"cosets_defined", w.cosets_defined}};
}

inline WedgeSummary wedge_summary_from_json(const nlohmann::json& j) {
  return WedgeSummary{j.at("order").get<std::size_t>(), j.at("kernel_order").get<std::size_t>(),
                      j.at("kernel_invariants").get<std::vector<std::uint64_t>>(),
                      j.at("cosets_defined").get<std::size_t>()};
}

inline nlohmann::json to_json(const InvariantReport& r) {
  if (auto problem = r.consistency_problem()) {
    throw Error(ErrorKind::InconsistentOrders, r.name + ": " + *problem);
  }
  nlohmann::json j{{"schema_version", kReportSchemaVersion},
                   {"tool_version", r.tool_version},
                   {"config_hash", r.config_hash},
                   {"name", r.name},
                   {"order", r.order},
                   {"center_order", r.center_order},
                   {"derived_order", r.derived_order},
                   {"abelianization", r.abelianization},
                   {"curly_wedge", to_json(r.curly)}};
  if (r.exterior) {
    j["exterior_square"] = to_json(*r.exterior);
  } else if (r.exterior_skipped) {
    j["exterior_square"] = nlohmann::json{{"skipped", *r.exterior_skipped}};
  }
  if (r.oracle) {
    j["oracle"] = nlohmann::json{{"h2_order", r.oracle->h2_order},
                                 {"h2_invariants", r.oracle->h2_invariants},
                                 {"multiplier_order", r.oracle->multiplier_order},
                                 {"b0_lower_bound", r.oracle->b0_lower_bound},
                                 {"b0_invariants", r.oracle->b0_invariants}};
  } else if (r.oracle_skipped) {
    j["oracle"] = nlohmann::json{{"skipped", *r.oracle_skipped}};
  }
  if (r.family) j["family"] = nlohmann::json{{"id", r.family->id}, {"isoclinic_with", r.family->members}};
  if (r.timing) j["timing"] = *r.timing;
  return j;
}

inline InvariantReport report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw Error(ErrorKind::ParseError, "unsupported report schema version");
    }
    InvariantReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.config_hash = j.at("config_hash").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    r.center_order = j.at("center_order").get<std::size_t>();
    r.derived_order = j.at("derived_order").get<std::size_t>();
    r.abelianization = j.at("abelianization").get<std::vector<std::uint64_t>>();
    r.curly = wedge_summary_from_json(j.at("curly_wedge"));
    if (j.contains("exterior_square")) {
      const auto& e = j["exterior_square"];
      if (e.contains("skipped")) {
        r.exterior_skipped = e["skipped"].get<std::string>();
      } else {
        r.exterior = wedge_summary_from_json(e);
      }
    }
    if (j.contains("oracle")) {
      const auto& o = j["oracle"];
      if (o.contains("skipped")) {
        r.oracle_skipped = o["skipped"].get<std::string>();
      } else {
        r.oracle = OracleSummary{o.at("h2_order").get<std::uint64_t>(),
                                 o.at("h2_invariants").get<std::vector<std::uint64_t>>(),
                                 o.at("multiplier_order").get<std::uint64_t>(),
                                 o.at("b0_lower_bound").get<std::uint64_t>(),
                                 o.at("b0_invariants").get<std::vector<std::uint64_t>>()};
      }
    }
    if (j.contains("family")) {
      r.family = FamilyInfo{j["family"].at("id").get<std::size_t>(),
                            j["family"].at("isoclinic_with").get<std::vector<std::string>>()};
    }
    if (j.contains("timing")) r.timing = j["timing"].get<std::map<std::string, double>>();
    if (auto problem = r.consistency_problem()) throw Error(ErrorKind::ValidationError, r.name + ": " + *problem);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
}

inline WedgeSummary summarize(const WedgeRealization& w) {
  return WedgeSummary{w.order(), w.kernel.order(), kernel_invariants(w).factors, w.cosets_defined};
}

/// Everything computable for one group under `config`. The curly wedge is
/// mandatory (its cap errors propagate); the exterior square and the oracle
/// are skipped with a reason when the group is above their caps.
inline InvariantReport compute_report(const CatalogEntry& entry, const RunConfig& config) {
  using Clock = std::chrono::steady_clock;
  std::map<std::string, double> timing;
  auto timed = [&](const char* stage, auto&& f) {
    const auto start = Clock::now();
    auto result = f();
    timing[stage] = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  };
  const FiniteGroup& g = entry.group;
  InvariantReport r;
  r.name = entry.name;
  r.config_hash = config_hash(config);
  r.order = g.order();
  r.center_order = center(g).order();
  r.derived_order = derived_subgroup(g).order();
  r.abelianization = abelianization(g).factors;
  r.curly = timed("curly_wedge", [&] {
    return summarize(compute_wedge(g, WedgeVariant::Curly, config.wedge_options(WedgeVariant::Curly)));
  });
  if (g.order() <= config.exterior_cap) {
    r.exterior = timed("exterior_square", [&] {
      return summarize(compute_wedge(g, WedgeVariant::Exterior, config.wedge_options(WedgeVariant::Exterior)));
    });
  } else {
    r.exterior_skipped = "order " + std::to_string(g.order()) + " above exterior cap " +
                         std::to_string(config.exterior_cap);
  }
  if (config.oracle) {
    if (g.order() <= config.oracle_cap) {
      r.oracle = timed("oracle", [&] {
        const CocycleSpace space(g, static_cast<zmod::Int>(g.order()), config.oracle_cap);
        const auto b0 = b0_lower_bound(space, config.oracle_cap);
        return OracleSummary{space.h2_order(), space.h2_invariants().factors, multiplier_order_oracle(space),
                             b0.order, b0.invariants.factors};
      });
    } else {
      r.oracle_skipped = "order " + std::to_string(g.order()) + " above oracle cap " +
                         std::to_string(config.oracle_cap);
    }
  }
  if (config.timing) r.timing = std::move(timing);
  return r;
}

/// Runs f(0..n-1) on up to `jobs` threads. Results must be written to
/// per-index slots; the first exception by index is rethrown.
template <typename F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace grouplab
