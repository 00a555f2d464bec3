#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "edsbound/constants.hpp"
#include "edsbound/verify.hpp"

namespace edsbound::io {

using json = nlohmann::json;

// Input schema:
//   { "a": ["a1","a2","a3","a4","a6"], "point": ["x","y"],
//     "conductor": int, "minimal": bool, "degree": 1 }
// with rationals as "p/q" strings.
AnalysisInput parse_input(const json& j);
AnalysisInput load_input(const std::filesystem::path& path);
json input_to_json(const AnalysisInput& in);

// reals serialize as decimal strings with an explicit precision tag
json real_to_json(const Real& r);
Real real_from_json(const json& j);

json term_to_json(const EdsTerm& t);
json enclosure_to_json(const HeightEnclosure& e);
json constants_to_json(const ConstantsReport& r);
json checks_to_json(const std::vector<CheckResult>& results);

std::string sequence_csv(const std::vector<EdsTerm>& terms);

// Append-only JSON-lines sequence cache, keyed by a content hash of the
// curve coefficients and the point.
class SequenceCache {
 public:
  explicit SequenceCache(std::filesystem::path path);

  static std::string key_of(const WeierstrassCurve& e, const CurvePoint& p);

  // Terms 1..n_max when fully cached, empty otherwise.
  std::vector<EdsTerm> load(const std::string& key, unsigned n_max) const;
  void store(const std::string& key, const std::vector<EdsTerm>& terms);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::filesystem::path cache_path(const std::optional<std::string>& flag);

}  // namespace edsbound::io
