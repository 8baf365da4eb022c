#pragma once

// Group ingestion: GroupSpecFile JSON documents (kinds "cayley", "perm",
// "builtin"), compact builtin strings for the command line, and directory
// catalogs.
//
//   {"name": "S3", "kind": "cayley", "data": {"table": [[0,1,...],...], "identity": 0}}
//   {"name": "S3", "kind": "perm", "data": {"degree": 3, "generators": ["(1,2)", [2,3,1]]}}
//   {"name": "S3xC4", "kind": "builtin", "data": {"family": "direct_product",
//       "factors": [{"family": "symmetric", "n": 3}, {"family": "cyclic", "n": 4}]}}
//
// Permutation arrays list the 1-based images of points 1..degree.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "grouplab/builtin.hpp"
#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/permutation.hpp"

namespace grouplab {

inline constexpr std::size_t kDefaultMaxGroupOrder = 512;

struct CatalogEntry {
  std::string name;
  FiniteGroup group;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

namespace detail {

using Json = nlohmann::json;

inline std::size_t param(const Json& d, const char* key) {
  if (!d.contains(key)) throw Error(ErrorKind::ParamOutOfRange, std::string("missing parameter '") + key + "'");
  const Json& v = d.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(ErrorKind::ParamOutOfRange, std::string("parameter '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

inline builtin::Exponent exponent_of(const Json& d) {
  const std::string e = d.value("exponent", std::string("p"));
  if (e == "p") return builtin::Exponent::P;
  if (e == "p2" || e == "p^2") return builtin::Exponent::P2;
  throw Error(ErrorKind::ParamOutOfRange, "extraspecial exponent must be \"p\" or \"p2\", got \"" + e + "\"");
}

inline Permutation permutation_of(const Json& g, std::size_t degree) {
  if (g.is_string()) return Permutation::from_cycles(g.get<std::string>(), degree);
  if (!g.is_array()) throw Error(ErrorKind::ParseError, "permutation must be a cycle string or an image array");
  std::vector<Point> images;
  for (const auto& x : g) {
    const auto v = x.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > degree) {
      throw Error(ErrorKind::ValidationError, "permutation image " + std::to_string(v) + " outside 1.." +
                                                  std::to_string(degree));
    }
    images.push_back(static_cast<Point>(v - 1));
  }
  if (images.size() != degree) throw Error(ErrorKind::ValidationError, "permutation array length differs from degree");
  return Permutation(std::move(images));
}

}  // namespace detail

inline FiniteGroup builtin_group(const nlohmann::json& d) {
  using detail::param;
  if (!d.is_object() || !d.contains("family")) throw Error(ErrorKind::ParseError, "builtin descriptor needs a family");
  const std::string family = d.at("family").get<std::string>();
  if (family == "cyclic") return builtin::cyclic(param(d, "n"));
  if (family == "dihedral") return builtin::dihedral(param(d, "n"));
  if (family == "quaternion8") return builtin::quaternion8();
  if (family == "symmetric") return builtin::symmetric(param(d, "n"));
  if (family == "alternating") return builtin::alternating(param(d, "n"));
  if (family == "elementary") return builtin::elementary(param(d, "p"), param(d, "k"));
  if (family == "extraspecial") return builtin::extraspecial(param(d, "p"), detail::exponent_of(d));
  if (family == "direct_product") {
    const auto& factors = d.at("factors");
    if (!factors.is_array() || factors.empty()) {
      throw Error(ErrorKind::ParamOutOfRange, "direct_product needs a non-empty factor list");
    }
    FiniteGroup g = builtin_group(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) {
      const FiniteGroup h = builtin_group(factors[i]);
      if (g.order() * h.order() > kDefaultMaxGroupOrder * 8) {
        throw Error(ErrorKind::ParamOutOfRange, "direct product too large");
      }
      g = builtin::direct_product(g, h);
    }
    return g;
  }
  throw Error(ErrorKind::UnknownFamily, "unknown builtin family '" + family + "'");
}

/// Parses "cyclic:6", "dihedral:4", "quaternion8", "symmetric:3",
/// "elementary:2:3", "extraspecial:3:p2", and products joined with '*'.
inline nlohmann::json parse_builtin_string(const std::string& text) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string part; std::getline(in, part, sep);) out.push_back(part);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
  };
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw Error(ErrorKind::ParamOutOfRange, "'" + s + "' in '" + text + "' is not a number");
    }
    return std::stoul(s);
  };
  const auto factors = split(text, '*');
  std::vector<nlohmann::json> descriptors;
  for (const auto& factor : factors) {
    const auto parts = split(factor, ':');
    if (parts.empty() || parts[0].empty()) throw Error(ErrorKind::ParseError, "empty builtin family in '" + text + "'");
    const std::string& family = parts[0];
    nlohmann::json d{{"family", family}};
    auto expect = [&](std::size_t n) {
      if (parts.size() != n + 1) {
        throw Error(ErrorKind::ParamOutOfRange, family + " takes " + std::to_string(n) + " parameter(s)");
      }
    };
    if (family == "cyclic" || family == "dihedral" || family == "symmetric" || family == "alternating") {
      expect(1);
      d["n"] = number(parts[1]);
    } else if (family == "quaternion8") {
      expect(0);
    } else if (family == "elementary") {
      expect(2);
      d["p"] = number(parts[1]);
      d["k"] = number(parts[2]);
    } else if (family == "extraspecial") {
      expect(2);
      d["p"] = number(parts[1]);
      d["exponent"] = parts[2];
    } else {
      throw Error(ErrorKind::UnknownFamily, "unknown builtin family '" + family + "'");
    }
    descriptors.push_back(std::move(d));
  }
  if (descriptors.size() == 1) return descriptors.front();
  return nlohmann::json{{"family", "direct_product"}, {"factors", descriptors}};
}

/// Group from the "data" member of a GroupSpecFile of the given kind.
inline FiniteGroup group_from_spec(const std::string& kind, const nlohmann::json& data, const std::string& name,
                                   std::size_t max_order = kDefaultMaxGroupOrder) {
  FiniteGroup g;
  if (kind == "builtin") {
    g = builtin_group(data);
  } else if (kind == "perm") {
    const std::size_t degree = detail::param(data, "degree");
    std::vector<Permutation> gens;
    for (const auto& x : data.value("generators", nlohmann::json::array())) gens.push_back(detail::permutation_of(x, degree));
    g = build_from_permutations(gens, max_order, degree, name);
  } else if (kind == "cayley") {
    const auto rows = data.at("table").get<std::vector<std::vector<long long>>>();
    const std::size_t n = rows.size();
    if (n == 0) throw Error(ErrorKind::ValidationError, "empty Cayley table");
    if (n > max_order) {
      throw Error(ErrorKind::GroupTooLarge, "Cayley table of order " + std::to_string(n) + " exceeds the cap " +
                                                std::to_string(max_order));
    }
    for (const auto& r : rows) {
      if (r.size() != n) throw Error(ErrorKind::ValidationError, "Cayley table is not square");
      for (long long x : r) {
        if (x < 0 || static_cast<std::size_t>(x) >= n) {
          throw Error(ErrorKind::ValidationError, "table entry " + std::to_string(x) + " out of range");
        }
      }
    }
    // The identity moves to index 0 by swapping it with element 0.
    std::size_t e = n;
    if (data.contains("identity")) {
      e = detail::param(data, "identity");
    } else {
      for (std::size_t a = 0; a < n && e == n; ++a) {
        bool neutral = true;
        for (std::size_t b = 0; b < n && neutral; ++b) neutral = rows[a][b] == static_cast<long long>(b);
        if (neutral) e = a;
      }
    }
    if (e >= n) throw Error(ErrorKind::ValidationError, "no identity element in Cayley table");
    auto swap = [e](std::size_t x) { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<Element> mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        mul[swap(a) * n + swap(b)] = static_cast<Element>(swap(static_cast<std::size_t>(rows[a][b])));
      }
    }
    std::vector<std::string> names;
    if (data.contains("element_names")) {
      auto given = data.at("element_names").get<std::vector<std::string>>();
      if (given.size() != n) throw Error(ErrorKind::ValidationError, "element_names length differs from order");
      names.resize(n);
      for (std::size_t a = 0; a < n; ++a) names[swap(a)] = given[a];
    }
    g = FiniteGroup::from_table(n, std::move(mul), name, std::move(names));
  } else {
    throw Error(ErrorKind::ParseError, "unknown group kind '" + kind + "'");
  }
  if (g.order() > max_order) {
    throw Error(ErrorKind::GroupTooLarge, name + " has order " + std::to_string(g.order()) + " above the cap " +
                                              std::to_string(max_order));
  }
  if (auto problem = g.validate()) throw Error(ErrorKind::ValidationError, name + ": " + *problem);
  g.set_label(name);
  return g;
}

inline CatalogEntry entry_from_json(const nlohmann::json& j, std::size_t max_order = kDefaultMaxGroupOrder) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "group file must be a JSON object");
  try {
    const std::string name = j.at("name").get<std::string>();
    if (name.empty()) throw Error(ErrorKind::ValidationError, "group name must not be empty");
    return CatalogEntry{name, group_from_spec(j.at("kind").get<std::string>(), j.at("data"), name, max_order)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

/// Cayley form; element names are kept when present.
inline nlohmann::json entry_to_json(const CatalogEntry& e) {
  const std::size_t n = e.group.order();
  std::vector<std::vector<Element>> rows(n);
  for (Element a = 0; a < n; ++a) rows[a].assign(e.group.row(a).begin(), e.group.row(a).end());
  nlohmann::json data{{"table", rows}, {"identity", 0}};
  if (!e.group.element_names().empty()) data["element_names"] = e.group.element_names();
  return nlohmann::json{{"name", e.name}, {"kind", "cayley"}, {"data", data}};
}

inline nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path.string() + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline CatalogEntry load_group_file(const std::filesystem::path& path, std::size_t max_order = kDefaultMaxGroupOrder) {
  const auto j = read_json_file(path);
  try {
    return entry_from_json(j, max_order);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

/// Every *.json file of a directory, sorted by group name.
inline std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir,
                                              std::size_t max_order = kDefaultMaxGroupOrder) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorKind::ParseError, dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.is_regular_file() && f.path().extension() == ".json") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  for (const auto& f : files) {
    out.push_back(load_group_file(f, max_order));
    if (!names.insert(out.back().name).second) {
      throw Error(ErrorKind::ValidationError, f.string() + ": duplicate group name '" + out.back().name + "'");
    }
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return out;
}

/// Writes one Cayley-form file per entry, named after the group.
inline void save_catalog(const std::filesystem::path& dir, const std::vector<CatalogEntry>& entries) {
  std::filesystem::create_directories(dir);
  for (const auto& e : entries) {
    if (e.name.find_first_of("/\\") != std::string::npos || e.name.empty() || e.name[0] == '.') {
      throw Error(ErrorKind::InvalidArgument, "group name '" + e.name + "' is not usable as a file name");
    }
    std::ofstream out(dir / (e.name + ".json"));
    out << entry_to_json(e).dump(2) << '\n';
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + (dir / (e.name + ".json")).string());
  }
}

/// Resolves a command-line group argument: "builtin:<family>..." for a
/// builtin, a directory for a whole catalog, otherwise a GroupSpecFile path.
inline std::vector<CatalogEntry> resolve_groups(const std::string& source,
                                                std::size_t max_order = kDefaultMaxGroupOrder) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) {
    const std::string body = source.substr(prefix.size());
    FiniteGroup g = builtin_group(parse_builtin_string(body));
    if (g.order() > max_order) {
      throw Error(ErrorKind::GroupTooLarge, body + " has order " + std::to_string(g.order()) + " above the cap " +
                                                std::to_string(max_order));
    }
    g.set_label(body);
    return {CatalogEntry{body, std::move(g)}};
  }
  if (std::filesystem::is_directory(source)) return load_catalog(source, max_order);
  return {load_group_file(source, max_order)};
}

}  // namespace grouplab
