#pragma once

// JSON forms of presentations and isoclinism witnesses. Needs the
// single-header nlohmann/json (json.hpp) on the include path.

#include <string>
#include <vector>

#include "json.hpp"

#include "grouplab/abelian.hpp"
#include "grouplab/error.hpp"
#include "grouplab/isoclinism.hpp"
#include "grouplab/presentation.hpp"

namespace grouplab {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const Presentation& p) {
  return Json{{"schema_version", kSchemaVersion},
              {"label", p.label},
              {"num_generators", p.num_generators},
              {"relators", p.relators}};
}

inline Presentation presentation_from_json(const Json& j) {
  try {
    Presentation p;
    p.label = j.value("label", std::string{});
    p.num_generators = j.at("num_generators").get<std::size_t>();
    p.relators = j.at("relators").get<std::vector<Word>>();
    p.validate();
    return p;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("presentation: ") + e.what());
  }
}

inline Json to_json(const AbelianInvariants& a) { return Json(a.factors); }

/// alpha and beta as index maps on the central quotients and derived
/// subgroups, with the sections and embeddings that fix those indices.
inline Json to_json(const IsoclinismWitness& w) {
  auto side = [](const CentralData& d) {
    return Json{{"group", d.group.label()},
                {"center", d.center.members},
                {"section", d.quotient.section},
                {"derived", d.derived.embedding}};
  };
  return Json{{"schema_version", kSchemaVersion},
              {"first", side(w.first)},
              {"second", side(w.second)},
              {"alpha", w.alpha.images},
              {"beta", w.beta.images}};
}

/// Rebuilds a witness for (g1, g2) from its JSON form; the stored sections
/// and derived-subgroup embeddings must match the ones recomputed here.
inline IsoclinismWitness witness_from_json(const Json& j, const FiniteGroup& g1, const FiniteGroup& g2) {
  IsoclinismWitness w{central_data(g1), central_data(g2), {}, {}};
  try {
    for (const auto& [key, d] : {std::pair<const char*, const CentralData*>{"first", &w.first},
                                 std::pair<const char*, const CentralData*>{"second", &w.second}}) {
      const Json& s = j.at(key);
      if (s.at("section").get<std::vector<Element>>() != d->quotient.section ||
          s.at("derived").get<std::vector<Element>>() != d->derived.embedding) {
        throw Error(ErrorKind::WitnessInvalid, std::string("stored ") + key + " section does not match the group");
      }
    }
    w.alpha.images = j.at("alpha").get<std::vector<Element>>();
    w.beta.images = j.at("beta").get<std::vector<Element>>();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("witness: ") + e.what());
  }
  return w;
}

}  // namespace grouplab
