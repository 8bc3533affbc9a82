#include "commlie/report.hpp"

#include <json.hpp>
#include <sstream>

#include "commlie/error.hpp"

namespace commlie {

using nlohmann::json;

std::string to_string(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::u: return "u";
    case Family::sp: return "sp";
  }
  return "?";
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::pairs: return "pairs";
    case Kind::nilpotent_pairs: return "nilpotent_pairs";
    case Kind::class_size: return "class_size";
    case Kind::orbit_size: return "orbit_size";
    case Kind::group_order: return "group_order";
  }
  return "?";
}

std::string to_string(Backend b) {
  switch (b) {
    case Backend::class_sum: return "class_sum";
    case Backend::gen_fn: return "gen_fn";
    case Backend::oracle: return "oracle";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "gl") return Family::gl;
  if (s == "u") return Family::u;
  if (s == "sp") return Family::sp;
  throw UsageError("unknown family '" + s + "' (expected gl, u or sp)");
}

Kind parse_kind(const std::string& s) {
  if (s == "pairs") return Kind::pairs;
  if (s == "nilpotent_pairs" || s == "nilpairs") return Kind::nilpotent_pairs;
  if (s == "class_size") return Kind::class_size;
  if (s == "orbit_size") return Kind::orbit_size;
  if (s == "group_order") return Kind::group_order;
  throw UsageError("unknown kind '" + s + "'");
}

Backend parse_backend(const std::string& s) {
  if (s == "class_sum") return Backend::class_sum;
  if (s == "gen_fn") return Backend::gen_fn;
  if (s == "oracle") return Backend::oracle;
  throw UsageError("unknown backend '" + s + "' (expected class_sum, gen_fn or oracle)");
}

CountReport make_report(Family f, Kind k, int n, Backend b, const QCoeff& value) {
  require_integral(value, to_string(f) + " " + to_string(k) + " n=" + std::to_string(n));
  return CountReport{f, k, n, value.context().label(), b, value.to_string()};
}

namespace {

// ordered_json keeps "meta" ahead of "results" and the field order stable.
nlohmann::ordered_json to_json(const CountReport& r) {
  nlohmann::ordered_json row;
  row["family"] = to_string(r.family);
  row["kind"] = to_string(r.kind);
  row["n"] = r.n;
  row["q"] = r.q;
  row["backend"] = to_string(r.backend);
  row["value"] = r.value;
  return row;
}

CountReport from_json(const json& j) {
  return CountReport{parse_family(j.at("family").get<std::string>()), parse_kind(j.at("kind").get<std::string>()),
                     j.at("n").get<int>(),                            j.at("q").get<std::string>(),
                     parse_backend(j.at("backend").get<std::string>()), j.at("value").get<std::string>()};
}

}  // namespace

std::string reports_to_json(const std::vector<CountReport>& reports, const std::string& meta_json) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::parse(meta_json);
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) doc["results"].push_back(to_json(r));
  return doc.dump(2) + "\n";
}

std::vector<CountReport> reports_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed report JSON: ") + e.what());
  }
  std::vector<CountReport> out;
  for (const auto& j : doc.at("results")) out.push_back(from_json(j));
  return out;
}

std::string reports_to_csv(const std::vector<CountReport>& reports) {
  std::ostringstream os;
  os << "family,kind,n,q,backend,value\n";
  for (const auto& r : reports) {
    os << to_string(r.family) << ',' << to_string(r.kind) << ',' << r.n << ',' << r.q << ','
       << to_string(r.backend) << ',' << r.value << '\n';
  }
  return os.str();
}

std::vector<CountReport> reports_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<CountReport> out;
  if (!std::getline(is, line) || line != "family,kind,n,q,backend,value") {
    throw UsageError("CSV report header missing");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 6) throw UsageError("CSV row has " + std::to_string(f.size()) + " fields: " + line);
    out.push_back({parse_family(f[0]), parse_kind(f[1]), std::stoi(f[2]), f[3], parse_backend(f[4]), f[5]});
  }
  return out;
}

}  // namespace commlie
