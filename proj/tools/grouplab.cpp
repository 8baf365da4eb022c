// grouplab: curly-wedge groups, Bogomolov kernels, isoclinism families and the
// cohomology cross-check over catalogs of small groups.
//
// Exit codes: 0 success, 1 input error, 2 resource cap, 3 verification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grouplab/catalog.hpp"
#include "grouplab/cohomology.hpp"
#include "grouplab/isoclinism.hpp"
#include "grouplab/report.hpp"
#include "grouplab/serialization.hpp"
#include "grouplab/wedge.hpp"

namespace {

using grouplab::CatalogEntry;
using grouplab::Error;
using grouplab::ErrorKind;
using grouplab::RunConfig;
using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitVerification = 3;

struct Options {
  RunConfig config;
  std::string out;
  std::string format = "json";
};

/// Writes `j` to OUT/file when --out is set, otherwise to standard output.
void emit(const Options& o, const std::string& file, const Json& j) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  const auto path = std::filesystem::path(o.out) / file;
  std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  f << j.dump(2) << '\n';
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
}

std::vector<CatalogEntry> load_all(const std::vector<std::string>& specs, const RunConfig& c) {
  std::vector<CatalogEntry> out;
  for (const auto& s : specs) {
    auto more = grouplab::resolve_groups(s, c.max_group_order);
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return out;
}

std::vector<grouplab::CentralData> central_data_of(const std::vector<CatalogEntry>& entries) {
  std::vector<grouplab::CentralData> data;
  data.reserve(entries.size());
  for (const auto& e : entries) data.push_back(grouplab::central_data(e.group));
  return data;
}

Json families_json(const std::vector<CatalogEntry>& entries, const std::vector<std::vector<std::size_t>>& fams) {
  Json out = Json::array();
  for (const auto& f : fams) {
    Json names = Json::array();
    for (auto i : f) names.push_back(entries[i].name);
    out.push_back(names);
  }
  return out;
}

int cmd_compute(const Options& o, const std::vector<std::string>& specs) {
  const auto entries = load_all(specs, o.config);
  std::vector<grouplab::InvariantReport> reports(entries.size());
  grouplab::parallel_for(entries.size(), o.config.jobs,
                         [&](std::size_t i) { reports[i] = grouplab::compute_report(entries[i], o.config); });
  if (entries.size() > 1) {
    const auto fams = grouplab::partition_into_families(central_data_of(entries));
    for (std::size_t id = 0; id < fams.size(); ++id) {
      for (auto i : fams[id]) {
        grouplab::FamilyInfo info{id, {}};
        for (auto k : fams[id]) {
          if (k != i) info.members.push_back(entries[k].name);
        }
        reports[i].family = std::move(info);
      }
    }
  }
  if (o.out.empty()) {
    if (reports.size() == 1) {
      emit(o, "", grouplab::to_json(reports.front()));
    } else {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(grouplab::to_json(r));
      emit(o, "", all);
    }
    return kExitOk;
  }
  for (const auto& r : reports) {
    emit(o, r.name + ".json", grouplab::to_json(r));
    std::cout << r.name << ": |G|=" << r.order << " |G'|=" << r.derived_order << " |G⋏G|=" << r.curly.order
              << " B0~=" << Json(r.curly.kernel_invariants).dump();
    if (r.exterior) std::cout << " |M(G)|=" << r.exterior->kernel_order;
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_families(const Options& o, const std::vector<std::string>& specs) {
  const auto entries = load_all(specs, o.config);
  const auto fams = grouplab::partition_into_families(central_data_of(entries));
  emit(o, "families.json",
       Json{{"schema_version", grouplab::kReportSchemaVersion}, {"families", families_json(entries, fams)}});
  return kExitOk;
}

int cmd_verify_theorem(const Options& o, const std::vector<std::string>& specs, std::size_t trials,
                       std::uint64_t seed) {
  const auto entries = load_all(specs, o.config);
  const auto data = central_data_of(entries);
  const auto fams = grouplab::partition_into_families(data);

  std::vector<std::optional<grouplab::WedgeRealization>> wedges(entries.size());
  grouplab::parallel_for(entries.size(), o.config.jobs, [&](std::size_t i) {
    wedges[i] = grouplab::compute_wedge(entries[i].group, grouplab::WedgeVariant::Curly,
                                        o.config.wedge_options(grouplab::WedgeVariant::Curly));
  });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& f : fams) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) pairs.emplace_back(f[a], f[b]);
    }
  }
  std::vector<Json> results(pairs.size());
  std::vector<std::optional<Json>> witnesses(pairs.size());
  grouplab::parallel_for(pairs.size(), o.config.jobs, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    Json r{{"first", entries[i].name}, {"second", entries[j].name}};
    bool pass = false;
    try {
      auto w = grouplab::are_isoclinic(data[i], data[j]);
      r["witness"] = w.has_value();
      if (w) {
        const bool b0_equal = grouplab::kernel_invariants(*wedges[i]) == grouplab::kernel_invariants(*wedges[j]);
        const auto gamma = grouplab::build_gamma(*w, *wedges[i], *wedges[j]);
        const bool fuzz = grouplab::well_definedness_fuzz(*w, *wedges[i], *wedges[j], trials, seed);
        r["b0_invariants_equal"] = b0_equal;
        r["b0_invariants"] = grouplab::kernel_invariants(*wedges[i]).factors;
        r["wedge_order"] = wedges[i]->order();
        // build_gamma throws unless gamma and its kernel restriction are
        // bijective and the square with beta and the kappas commutes
        r["gamma_bijective"] = grouplab::is_bijective(gamma.gamma, wedges[j]->order());
        r["gamma_tilde_bijective"] = grouplab::is_bijective(gamma.gamma_tilde, gamma.kernel2.group.order());
        r["diagram_commutes"] = true;
        r["fuzz_trials"] = trials;
        r["fuzz_agree"] = fuzz;
        pass = b0_equal && fuzz && r["gamma_bijective"].get<bool>() && r["gamma_tilde_bijective"].get<bool>();
        witnesses[k] = grouplab::to_json(*w);
      }
    } catch (const Error& e) {
      if (grouplab::is_resource_cap(e.kind())) throw;
      r["error"] = e.what();
    }
    r["pass"] = pass;
    results[k] = std::move(r);
  });

  bool all_pass = true;
  Json pair_list = Json::array();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    all_pass = all_pass && results[k]["pass"].get<bool>();
    if (witnesses[k] && !o.out.empty()) {
      const std::string file = entries[pairs[k].first].name + "__" + entries[pairs[k].second].name + ".json";
      emit(o, "witnesses/" + file, *witnesses[k]);
      results[k]["witness_file"] = "witnesses/" + file;
    }
    pair_list.push_back(results[k]);
  }
  Json summary{{"schema_version", grouplab::kReportSchemaVersion},
               {"tool_version", grouplab::kToolVersion},
               {"config_hash", grouplab::config_hash(o.config)},
               {"families", families_json(entries, fams)},
               {"pairs", pair_list},
               {"all_pass", all_pass}};
  emit(o, "verify-theorem.json", summary);
  if (!o.out.empty()) {
    std::cout << (all_pass ? "PASS" : "FAIL") << ": " << pairs.size() << " isoclinic pairs in " << fams.size()
              << " families\n";
  }
  return all_pass ? kExitOk : kExitVerification;
}

int cmd_oracle(const Options& o, const std::vector<std::string>& specs) {
  const auto entries = load_all(specs, o.config);
  std::vector<Json> rows(entries.size());
  std::vector<char> ok(entries.size(), 1);
  grouplab::parallel_for(entries.size(), o.config.jobs, [&](std::size_t i) {
    const auto& g = entries[i].group;
    Json r{{"name", entries[i].name}, {"order", g.order()}};
    if (g.order() > o.config.oracle_cap) {
      r["skipped"] = "order above oracle cap " + std::to_string(o.config.oracle_cap);
      rows[i] = std::move(r);
      return;
    }
    try {
      const grouplab::CocycleSpace space(g, static_cast<grouplab::zmod::Int>(g.order()), o.config.oracle_cap);
      const auto oracle_m = grouplab::multiplier_order_oracle(space);
      const auto b0 = grouplab::b0_lower_bound(space, o.config.oracle_cap);
      const auto curly = grouplab::compute_wedge(g, grouplab::WedgeVariant::Curly,
                                                 o.config.wedge_options(grouplab::WedgeVariant::Curly));
      const std::size_t b0_tilde = curly.kernel.order();
      r["oracle_multiplier_order"] = oracle_m;
      r["b0_lower_bound"] = b0.order;
      r["b0_tilde_order"] = b0_tilde;
      r["bound_holds"] = b0.order <= b0_tilde;
      r["equality_observed"] = b0.order == b0_tilde;
      ok[i] = b0.order <= b0_tilde;
      if (g.order() <= o.config.exterior_cap) {
        const auto m = grouplab::compute_wedge(g, grouplab::WedgeVariant::Exterior,
                                               o.config.wedge_options(grouplab::WedgeVariant::Exterior))
                           .kernel.order();
        r["wedge_multiplier_order"] = m;
        r["multiplier_agree"] = m == oracle_m;
        ok[i] = ok[i] && m == oracle_m;
      } else {
        r["wedge_multiplier_skipped"] = "order above exterior cap " + std::to_string(o.config.exterior_cap);
      }
    } catch (const Error& e) {
      if (!grouplab::is_resource_cap(e.kind())) throw;
      r["skipped"] = e.what();
    }
    rows[i] = std::move(r);
  });
  bool all_ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].contains("skipped")) {
      std::cerr << "warning: " << entries[i].name << ": " << rows[i]["skipped"].get<std::string>() << '\n';
    }
    all_ok = all_ok && ok[i];
  }
  emit(o, "oracle.json",
       Json{{"schema_version", grouplab::kReportSchemaVersion},
            {"tool_version", grouplab::kToolVersion},
            {"config_hash", grouplab::config_hash(o.config)},
            {"groups", rows},
            {"all_agree", all_ok}});
  return all_ok ? kExitOk : kExitVerification;
}

int cmd_dump_presentation(const Options& o, const std::string& source, const std::string& variant_name) {
  const auto variant =
      variant_name == "exterior" ? grouplab::WedgeVariant::Exterior : grouplab::WedgeVariant::Curly;
  Json all = Json::array();
  for (const auto& e : grouplab::resolve_groups(source, o.config.max_group_order)) {
    const auto cap = variant == grouplab::WedgeVariant::Curly ? o.config.curly_cap : o.config.exterior_cap;
    const auto wp = grouplab::build_wedge_presentation(e.group, variant, cap);
    Json j = grouplab::to_json(wp.presentation);
    j["raw_relator_counts"] = {wp.raw_r1, wp.raw_r2, wp.raw_r3};
    emit(o, e.name + "." + std::string(grouplab::to_string(variant)) + ".presentation.json", j);
  }
  return kExitOk;
}

Json table_rows(const std::vector<grouplab::zmod::Int>& t, std::size_t n) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < n; ++a) rows.push_back(std::vector<grouplab::zmod::Int>(t.begin() + a * n, t.begin() + (a + 1) * n));
  return rows;
}

int cmd_dump_cocycles(const Options& o, const std::string& source, std::size_t modulus) {
  for (const auto& e : grouplab::resolve_groups(source, o.config.max_group_order)) {
    const auto& g = e.group;
    const auto m = static_cast<grouplab::zmod::Int>(modulus ? modulus : g.order());
    const grouplab::CocycleSpace space(g, m, o.config.oracle_cap);
    Json basis = Json::array();
    const auto cocycles = space.basis();
    for (std::size_t k = 0; k < cocycles.size(); ++k) {
      basis.push_back(Json{{"order", space.basis_orders()[k]}, {"cocycle", table_rows(cocycles[k], g.order())}});
    }
    Json subgroups = Json::array();
    std::vector<grouplab::SubgroupCohomology> subs;
    for (const auto& a : grouplab::abelian_subgroups(g, true)) {
      subs.push_back(grouplab::subgroup_cohomology(g, a, m, o.config.oracle_cap));
      subgroups.push_back(Json{{"members", a.members},
                               {"h2_basis_orders", subs.back().space.basis_orders()},
                               {"restriction_columns", grouplab::restriction_matrix(space, subs.back())}});
    }
    const auto b0 = grouplab::restriction_kernel(space, subs);
    emit(o, e.name + ".cocycles.json",
         Json{{"schema_version", grouplab::kReportSchemaVersion},
              {"name", e.name},
              {"modulus", m},
              {"h2_order", space.h2_order()},
              {"h2_invariants", space.h2_invariants().factors},
              {"z2_order", space.z2_order()},
              {"b2_order", space.b2_order()},
              {"basis", basis},
              {"maximal_abelian_subgroups", subgroups},
              {"b0_lower_bound", b0.order},
              {"b0_invariants", b0.invariants.factors}});
  }
  return kExitOk;
}

std::size_t default_max_cosets() {
  const char* env = std::getenv("GROUPLAB_MAX_COSETS");
  if (!env || !*env) return grouplab::kDefaultMaxCosets;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) {
    throw Error(ErrorKind::InvalidArgument, std::string("GROUPLAB_MAX_COSETS must be a positive integer, got '") +
                                                env + "'");
  }
  return static_cast<std::size_t>(v);
}

int exit_code_for(ErrorKind kind) {
  if (grouplab::is_resource_cap(kind)) return kExitCap;
  if (grouplab::is_internal(kind)) return kExitVerification;
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  try {
    o.config.max_cosets = default_max_cosets();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  CLI::App app{"grouplab: curly-wedge groups, Bogomolov kernels and isoclinism"};
  app.set_version_flag("--version", grouplab::kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "directory for output files (default: standard output)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));
  app.add_option("--max-group-order", o.config.max_group_order, "largest accepted input group")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-cosets", o.config.max_cosets, "coset enumeration limit (env GROUPLAB_MAX_COSETS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--curly-cap", o.config.curly_cap, "largest group for the curly wedge")->check(CLI::PositiveNumber);
  app.add_option("--exterior-cap", o.config.exterior_cap, "largest group for the exterior square")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-cap", o.config.oracle_cap, "largest group for the cohomology oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.config.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--oracle", o.config.oracle, "include the cohomology oracle in reports");
  app.add_flag("--timing", o.config.timing, "record per-stage timing in reports");
  app.add_flag("--reduce", o.config.reduce_generators, "eliminate trivial pair generators before enumerating");

  std::vector<std::string> specs;
  auto add_specs = [&](CLI::App* sub) {
    sub->add_option("groups", specs, "builtin:<family>[:params][*...], a GroupSpecFile, or a catalog directory")
        ->required();
  };
  auto* compute = app.add_subcommand("compute", "invariant report per group");
  add_specs(compute);
  auto* families = app.add_subcommand("families", "partition into isoclinism families");
  add_specs(families);
  auto* verify = app.add_subcommand("verify-theorem", "check B0~ invariance and gamma on every isoclinic pair");
  add_specs(verify);
  std::size_t trials = 100;
  std::uint64_t seed = 0x5eed;
  verify->add_option("--trials", trials, "representative perturbations per pair");
  verify->add_option("--seed", seed, "fuzz seed");
  auto* oracle = app.add_subcommand("oracle", "cross-check against the cohomology oracle");
  add_specs(oracle);
  std::string group_arg;
  std::string variant = "curly";
  auto* dump_p = app.add_subcommand("dump-presentation", "wedge presentation as JSON");
  dump_p->add_option("group", group_arg)->required();
  dump_p->add_option("--variant", variant)->check(CLI::IsMember({"curly", "exterior"}));
  std::size_t modulus = 0;
  auto* dump_c = app.add_subcommand("dump-cocycles", "cocycle basis and restriction matrices as JSON");
  dump_c->add_option("group", group_arg)->required();
  dump_c->add_option("--modulus", modulus, "coefficient modulus (default |G|)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute) return cmd_compute(o, specs);
    if (*families) return cmd_families(o, specs);
    if (*verify) return cmd_verify_theorem(o, specs, trials, seed);
    if (*oracle) return cmd_oracle(o, specs);
    if (*dump_p) return cmd_dump_presentation(o, group_arg, variant);
    if (*dump_c) return cmd_dump_cocycles(o, group_arg, modulus);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
