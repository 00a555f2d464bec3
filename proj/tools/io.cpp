#include "io.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

namespace edsbound::io {

AnalysisInput parse_input(const json& j) {
  if (!j.contains("a") || !j["a"].is_array() || j["a"].size() != 5) {
    throw ParseError("input must carry \"a\": [a1,a2,a3,a4,a6]");
  }
  if (!j.contains("point") || !j["point"].is_array() || j["point"].size() != 2) {
    throw ParseError("input must carry \"point\": [x,y]");
  }
  std::vector<Rat> a;
  for (const auto& s : j["a"]) a.push_back(parse_rat(s.get<std::string>()));

  AnalysisInput in;
  in.curve = WeierstrassCurve::create(a[0], a[1], a[2], a[3], a[4]);
  in.point = CurvePoint::affine(parse_rat(j["point"][0].get<std::string>()),
                                parse_rat(j["point"][1].get<std::string>()));
  if (!on_curve(in.curve, in.point)) {
    throw PointNotOnCurve("input point does not lie on the curve");
  }
  if (j.contains("conductor")) {
    in.conductor = Int(j["conductor"].get<long>());
  }
  in.asserted_minimal = j.value("minimal", false);
  in.degree = j.value("degree", 1u);
  if (in.degree != 1) {
    throw ParseError("only degree 1 inputs are supported");
  }
  return in;
}

AnalysisInput load_input(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open input file " + path.string());
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed input JSON: ") + e.what());
  }
  return parse_input(j);
}

json input_to_json(const AnalysisInput& in) {
  json j;
  j["a"] = {rat_to_string(in.curve.a1), rat_to_string(in.curve.a2),
            rat_to_string(in.curve.a3), rat_to_string(in.curve.a4),
            rat_to_string(in.curve.a6)};
  j["point"] = {rat_to_string(in.point.x), rat_to_string(in.point.y)};
  j["conductor"] = in.conductor.get_si();
  j["minimal"] = in.asserted_minimal;
  j["degree"] = in.degree;
  return j;
}

json real_to_json(const Real& r) {
  json j;
  j["value"] = to_decimal(r);
  j["prec"] = static_cast<int>(r.prec());
  return j;
}

Real real_from_json(const json& j) {
  return Real::of_str(j["value"].get<std::string>(), j["prec"].get<int>());
}

json term_to_json(const EdsTerm& t) {
  json j;
  j["n"] = t.n;
  j["A"] = t.a_num.get_str();
  j["B"] = t.b_den.get_str();
  j["primitive_part"] = t.primitive_part.get_str();
  j["has_primitive_divisor"] = t.has_primitive_divisor;
  if (!t.known_factors.factors.empty() || !t.known_factors.complete) {
    json f = json::array();
    for (const auto& fe : t.known_factors.factors) {
      f.push_back({{"p", fe.prime.get_str()}, {"e", fe.exponent}});
    }
    j["factors"] = f;
    j["factors_complete"] = t.known_factors.complete;
  }
  return j;
}

json enclosure_to_json(const HeightEnclosure& e) {
  json j;
  j["lower"] = real_to_json(e.lower);
  j["upper"] = real_to_json(e.upper);
  j["doublings"] = e.doublings_used;
  j["c_e"] = real_to_json(e.c_e_used);
  return j;
}

json constants_to_json(const ConstantsReport& r) {
  json j;
  j["mode"] = r.mode == ConstantsMode::ClosedForm ? "closed-form" : "analytic";
  j["prec"] = static_cast<int>(r.prec);
  j["C_E"] = real_to_json(r.c_e);
  j["sigma"] = real_to_json(r.sigma);
  j["J_E"] = real_to_json(r.j_e);
  j["s"] = r.s;
  json sp = json::array();
  for (const auto& p : r.s_primes) sp.push_back(p.get_str());
  j["S_primes"] = sp;
  j["D_1"] = real_to_json(r.d_1);
  j["D_1_variant"] = real_to_json(r.d_1_variant);
  j["D_2"] = real_to_json(r.d_2);
  j["C"] = real_to_json(r.c_big);
  j["h"] = real_to_json(r.h_triple);
  j["log_V1"] = real_to_json(r.log_v1);
  j["log_V2_prime"] = real_to_json(r.log_v2_prime);
  j["log_B_prime"] = real_to_json(r.log_b_prime);
  j["C_2"] = real_to_json(r.c_2);
  j["C_3"] = real_to_json(r.c_3);
  j["C_4"] = real_to_json(r.c_4);
  j["x_T_bound"] = real_to_json(r.x_t_bound);
  j["C_5"] = real_to_json(r.c_5);
  j["K_bound"] = real_to_json(r.k_bound);
  j["hhat_lower"] = real_to_json(r.hhat_lower);
  j["hhat_upper"] = real_to_json(r.hhat_upper);
  return j;
}

json checks_to_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["checks"] = r.checks;
    if (!r.detail.empty()) j["detail"] = r.detail;
    arr.push_back(j);
  }
  return arr;
}

std::string sequence_csv(const std::vector<EdsTerm>& terms) {
  std::ostringstream out;
  out << "n,A,B,primitive_part,has_primitive_divisor\n";
  for (const auto& t : terms) {
    out << t.n << ',' << t.a_num.get_str() << ',' << t.b_den.get_str() << ','
        << t.primitive_part.get_str() << ','
        << (t.has_primitive_divisor ? 1 : 0) << '\n';
  }
  return out.str();
}

SequenceCache::SequenceCache(std::filesystem::path path)
    : path_(std::move(path)) {}

std::string SequenceCache::key_of(const WeierstrassCurve& e,
                                  const CurvePoint& p) {
  std::string canon = rat_to_string(e.a1) + "|" + rat_to_string(e.a2) + "|" +
                      rat_to_string(e.a3) + "|" + rat_to_string(e.a4) + "|" +
                      rat_to_string(e.a6) + "|" + rat_to_string(p.x) + "|" +
                      rat_to_string(p.y);
  // FNV-1a 64
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<EdsTerm> SequenceCache::load(const std::string& key,
                                         unsigned n_max) const {
  std::ifstream f(path_);
  if (!f) return {};
  std::map<unsigned, EdsTerm> found;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error&) {
      continue;  // tolerate a torn final line
    }
    if (j.value("key", "") != key) continue;
    EdsTerm t;
    t.n = j["n"].get<unsigned>();
    t.a_num = Int(j["A"].get<std::string>());
    t.b_den = Int(j["B"].get<std::string>());
    found[t.n] = std::move(t);
  }
  std::vector<EdsTerm> terms;
  for (unsigned n = 1; n <= n_max; ++n) {
    auto it = found.find(n);
    if (it == found.end()) return {};  // incomplete, regenerate
    terms.push_back(it->second);
  }
  annotate_primitive(terms);
  return terms;
}

void SequenceCache::store(const std::string& key,
                          const std::vector<EdsTerm>& terms) {
  auto existing = load(key, terms.size());
  if (!existing.empty()) return;  // already covered
  if (!path_.parent_path().empty()) {
    std::filesystem::create_directories(path_.parent_path());
  }
  std::ofstream f(path_, std::ios::app);
  for (const auto& t : terms) {
    json j;
    j["key"] = key;
    j["n"] = t.n;
    j["A"] = t.a_num.get_str();
    j["B"] = t.b_den.get_str();
    f << j.dump() << '\n';
  }
}

std::filesystem::path cache_path(const std::optional<std::string>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("EDS_CACHE_DIR")) {
    return std::filesystem::path(env) / "eds_cache.jsonl";
  }
  return "eds_cache.jsonl";
}

}  // namespace edsbound::io
