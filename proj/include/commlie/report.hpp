#pragma once

#include <string>
#include <vector>

#include "commlie/qcoeff.hpp"

namespace commlie {

enum class Family { gl, u, sp };
enum class Kind { pairs, nilpotent_pairs, class_size, orbit_size, group_order };
enum class Backend { class_sum, gen_fn, oracle };

std::string to_string(Family f);
std::string to_string(Kind k);
std::string to_string(Backend b);
/// Parsers accept the canonical names; Kind also accepts "nilpairs". Throw UsageError.
Family parse_family(const std::string& s);
Kind parse_kind(const std::string& s);
Backend parse_backend(const std::string& s);

/// One computed count. q is a decimal integer or "symbolic"; value is a decimal integer
/// or a canonical q-polynomial.
struct CountReport {
  Family family = Family::gl;
  Kind kind = Kind::pairs;
  int n = 0;
  std::string q;
  Backend backend = Backend::gen_fn;
  std::string value;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Builds a report from an integral value (throws IntegralityError otherwise).
CountReport make_report(Family f, Kind k, int n, Backend b, const QCoeff& value);

/// {"meta": meta, "results": [...]} with two-space indentation and a trailing newline.
std::string reports_to_json(const std::vector<CountReport>& reports, const std::string& meta_json = "{}");
std::vector<CountReport> reports_from_json(const std::string& text);
/// Header family,kind,n,q,backend,value then one row per report.
std::string reports_to_csv(const std::vector<CountReport>& reports);
std::vector<CountReport> reports_from_csv(const std::string& text);

}  // namespace commlie
