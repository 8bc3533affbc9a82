#include "commlie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "commlie/asymptotics.hpp"
#include "commlie/bruteforce.hpp"
#include "commlie/counts_gl.hpp"
#include "commlie/counts_sp.hpp"
#include "commlie/counts_u.hpp"
#include "commlie/error.hpp"
#include "commlie/report.hpp"

namespace commlie {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kMaxSymbolicOrder = 12;
constexpr int kMaxNumericOrder = 20;

struct Settings {
  std::string family;
  std::string kind = "pairs";
  std::string backend = "gen_fn";
  std::string format = "text";
  int n = 0;
  std::optional<int> n_max;
  std::optional<long> q;
  bool symbolic = false;
  bool force = false;
  int threads = 0;
  int max_n = 3;
  std::optional<int> oracle_max_n;
  int order = 8;
  int digits = 12;
};

QContext context_for(const Settings& s) {
  if (s.symbolic) return QContext::symbolic();
  if (!s.q) throw UsageError("give --q or --symbolic");
  if (*s.q < 2) throw UsageError("q must be at least 2");
  return QContext::numeric(*s.q);
}

SpaceFamily space_for(Family f) {
  switch (f) {
    case Family::gl: return SpaceFamily::mat;
    case Family::u: return SpaceFamily::gu;
    case Family::sp: return SpaceFamily::sp;
  }
  throw UsageError("unknown family");
}

QCoeff group_order(Family f, int n, const QContext& ctx) {
  switch (f) {
    case Family::gl: return group_order_gl(n, ctx);
    case Family::u: return group_order_gu(n, ctx);
    case Family::sp: return group_order_sp(n, ctx);
  }
  throw UsageError("unknown family");
}

// Σ_n count_n/|G_n|·u^n (v^n for sp) up to the given order.
USeries count_series(Family f, Kind k, const QContext& ctx, int order, Backend b) {
  const bool nil = k == Kind::nilpotent_pairs;
  switch (f) {
    case Family::gl: return nil ? gl_nilpotent_series(ctx, order, b) : gl_pairs_series(ctx, order, b);
    case Family::u: return nil ? u_nilpotent_series(ctx, order, b) : u_pairs_series(ctx, order, b);
    case Family::sp: return nil ? sp_nilpotent_series(ctx, order, b) : sp_pairs_series(ctx, order, b);
  }
  throw UsageError("unknown family");
}

std::string stratum(Family f, Kind k, int n, const std::string& route) {
  return to_string(f) + " " + to_string(k) + " n=" + std::to_string(n) + " (" + route + ")";
}

QCoeff count_from_series(Family f, Kind k, int n, const USeries& s, const std::string& route) {
  QCoeff v = group_order(f, n, s.context()) * s[n];
  require_integral(v, stratum(f, k, n, route));
  return v;
}

mpz_class oracle_count(Family f, Kind k, int n, long q, const OracleOptions& opts) {
  if (n == 0) return 1;
  auto space = LieSpace::make(space_for(f), n, static_cast<int>(q));
  return k == Kind::nilpotent_pairs ? count_nilpotent_pairs(space, opts) : count_commuting_pairs(space, opts);
}

void require_pair_kind(Kind k) {
  if (k != Kind::pairs && k != Kind::nilpotent_pairs) {
    throw UsageError("only pairs and nilpotent_pairs are supported here");
  }
}

// ---- count ----

int cmd_count(const Settings& s, std::ostream& out) {
  const Family f = parse_family(s.family);
  const Kind k = parse_kind(s.kind);
  const Backend b = parse_backend(s.backend);
  if (k == Kind::class_size || k == Kind::orbit_size) {
    throw UsageError("per-class sizes are listed by the 'classes' command");
  }
  if (s.symbolic && b != Backend::gen_fn) throw UsageError("symbolic mode needs --backend gen_fn");
  if (k == Kind::group_order && b == Backend::oracle) throw UsageError("the oracle does not compute group orders");
  const QContext ctx = context_for(s);
  if (f == Family::sp) require_odd_q(ctx, "count --family sp");
  const int lo = s.n;
  const int hi = s.n_max.value_or(s.n);
  if (lo < 0 || hi < lo) throw UsageError("need 0 <= n <= n-max");

  std::vector<CountReport> reports;
  if (k == Kind::group_order) {
    for (int n = lo; n <= hi; ++n) reports.push_back(make_report(f, k, n, b, group_order(f, n, ctx)));
  } else if (b == Backend::oracle) {
    OracleOptions opts{s.force, s.threads};
    for (int n = lo; n <= hi; ++n) {
      reports.push_back(make_report(f, k, n, b, ctx.integer(oracle_count(f, k, n, *s.q, opts))));
    }
  } else {
    USeries series = count_series(f, k, ctx, hi, b);
    for (int n = lo; n <= hi; ++n) {
      reports.push_back(make_report(f, k, n, b, count_from_series(f, k, n, series, to_string(b))));
    }
  }

  if (s.format == "json") {
    ojson meta;
    meta["command"] = "count";
    meta["family"] = to_string(f);
    meta["kind"] = to_string(k);
    meta["q"] = ctx.label();
    meta["backend"] = to_string(b);
    out << reports_to_json(reports, meta.dump());
  } else if (s.format == "csv") {
    out << reports_to_csv(reports);
  } else if (reports.size() == 1) {
    out << reports[0].value << "\n";
  } else {
    for (const auto& r : reports) out << "n=" << r.n << "  " << r.value << "\n";
  }
  return 0;
}

// ---- classes ----

int cmd_classes(const Settings& s, std::ostream& out) {
  const Family f = parse_family(s.family);
  if (s.symbolic) throw UsageError("classes needs a numeric --q");
  const QContext ctx = context_for(s);
  if (f == Family::sp) require_odd_q(ctx, "classes --family sp");
  if (s.n < 1) throw UsageError("n must be at least 1");

  std::vector<std::pair<std::string, QCoeff>> rows;
  if (f == Family::sp) {
    for (const auto& d : enumerate_sp_data(s.n, ctx)) rows.emplace_back(d.to_string(), orbit_size_sp(d, s.n, ctx));
  } else {
    for (const auto& d : enumerate_canonical_data(s.n, ctx)) {
      rows.emplace_back(d.to_string(), f == Family::gl ? class_size(s.n, d, ctx) : orbit_size_u(s.n, d, ctx));
    }
  }
  QCoeff total = ctx.zero();
  for (const auto& r : rows) total += r.second;
  const long dim = f == Family::sp ? 2L * s.n * s.n + s.n : static_cast<long>(s.n) * s.n;
  const QCoeff expected = ctx.q_power(dim);
  const std::string what = f == Family::gl ? "class_size" : "orbit_size";

  if (s.format == "json") {
    ojson doc;
    doc["meta"] = {{"command", "classes"}, {"family", to_string(f)}, {"n", s.n}, {"q", ctx.label()}};
    doc["classes"] = ojson::array();
    for (const auto& [data, size] : rows) doc["classes"].push_back({{"data", data}, {what, size.to_string()}});
    doc["total"] = total.to_string();
    doc["space_size"] = expected.to_string();
    out << doc.dump(2) << "\n";
  } else {
    out << "data\t" << what << "\n";
    for (const auto& [data, size] : rows) out << data << "\t" << size.to_string() << "\n";
    out << "total\t" << total.to_string() << " (space size " << expected.to_string() << ")\n";
  }
  if (!(total == expected)) throw MismatchError("class sizes do not sum to the size of the Lie algebra");
  return 0;
}

// ---- verify ----

struct CheckLog {
  std::ostream& out;
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  void compare(const std::string& label, const std::string& left_name, const std::string& left,
               const std::string& right_name, const std::string& right) {
    const bool ok = left == right;
    (ok ? passed : failed)++;
    out << (ok ? "PASS  " : "FAIL  ") << label << "  " << left_name << "=" << left << "  " << right_name << "="
        << right << "\n";
  }
  void fail(const std::string& label, const std::string& why) {
    ++failed;
    out << "FAIL  " << label << "  " << why << "\n";
  }
  void skip(const std::string& label, const std::string& why) {
    ++skipped;
    out << "SKIP  " << label << "  " << why << "\n";
  }
};

int cmd_verify(const Settings& s, std::ostream& out) {
  const Family f = parse_family(s.family);
  if (s.symbolic || !s.q) throw UsageError("verify needs a numeric --q");
  const QContext ctx = context_for(s);
  if (f == Family::sp) require_odd_q(ctx, "verify --family sp");
  if (s.max_n < 0) throw UsageError("max-n must be non-negative");
  const int oracle_max = std::min(s.max_n, s.oracle_max_n.value_or(s.max_n));
  const int symbolic_max = std::min(s.max_n, 6);
  const OracleOptions opts{s.force, s.threads};

  out << "verify " << to_string(f) << " q=" << ctx.label() << " max-n=" << s.max_n << "\n";
  CheckLog log{out};
  for (Kind k : {Kind::pairs, Kind::nilpotent_pairs}) {
    const USeries gen = count_series(f, k, ctx, s.max_n, Backend::gen_fn);
    std::optional<USeries> cls;
    try {
      cls = count_series(f, k, ctx, s.max_n, Backend::class_sum);
    } catch (const Error& e) {
      log.fail(to_string(f) + " " + to_string(k) + " class_sum series", e.what());
    }
    const USeries sym = count_series(f, k, QContext::symbolic(), symbolic_max, Backend::gen_fn);

    for (int n = 0; n <= s.max_n; ++n) {
      const std::string label = to_string(f) + " " + to_string(k) + " n=" + std::to_string(n);
      std::string reference;
      try {
        reference = count_from_series(f, k, n, gen, "gen_fn").to_string();
      } catch (const IntegralityError& e) {
        log.fail(label, e.what());
        continue;
      }
      if (cls) {
        try {
          log.compare(label, "class_sum", count_from_series(f, k, n, *cls, "class_sum").to_string(), "gen_fn",
                      reference);
        } catch (const IntegralityError& e) {
          log.fail(label, e.what());
        }
      }
      if (n <= symbolic_max) {
        QCoeff at_q = (group_order(f, n, QContext::symbolic()) * sym[n]).at(ctx);
        log.compare(label, "symbolic@q", at_q.to_string(), "gen_fn", reference);
      }
      if (n >= 1 && n <= oracle_max) {
        try {
          log.compare(label, "oracle", oracle_count(f, k, n, *s.q, opts).get_str(), "gen_fn", reference);
        } catch (const GuardExceeded& e) {
          log.skip(label + " oracle", e.what());
        }
      }
    }
  }
  out << "summary: " << log.passed << " passed, " << log.failed << " failed, " << log.skipped << " skipped\n";
  return log.failed == 0 ? 0 : 3;
}

// ---- series ----

int cmd_series(const Settings& s, std::ostream& out) {
  const Family f = parse_family(s.family);
  const Kind k = parse_kind(s.kind);
  require_pair_kind(k);
  const QContext ctx = context_for(s);
  if (f == Family::sp) require_odd_q(ctx, "series --family sp");
  const int cap = s.symbolic ? kMaxSymbolicOrder : kMaxNumericOrder;
  if (s.order < 0 || s.order > cap) {
    throw UsageError("order must lie in 0.." + std::to_string(cap) + (s.symbolic ? " in symbolic mode" : ""));
  }
  const USeries lhs = count_series(f, k, ctx, s.order, Backend::class_sum);
  const USeries rhs = count_series(f, k, ctx, s.order, Backend::gen_fn);
  const std::string var = f == Family::sp ? "v" : "u";

  bool all_zero = true;
  ojson rows = ojson::array();
  std::ostringstream text;
  text << "# coefficient of " << var << "^k: class sum | product side | difference\n";
  for (int i = 0; i <= s.order; ++i) {
    QCoeff diff = lhs[i] - rhs[i];
    all_zero = all_zero && diff.is_zero();
    text << i << "\t" << lhs[i].to_string() << "\t" << rhs[i].to_string() << "\t" << diff.to_string() << "\n";
    rows.push_back({{"k", i}, {"class_sum", lhs[i].to_string()}, {"gen_fn", rhs[i].to_string()},
                    {"difference", diff.to_string()}});
  }
  if (s.format == "json") {
    ojson doc;
    doc["meta"] = {{"command", "series"}, {"family", to_string(f)}, {"kind", to_string(k)}, {"q", ctx.label()},
                   {"order", s.order}, {"variable", var}};
    doc["rows"] = rows;
    doc["identity_holds"] = all_zero;
    out << doc.dump(2) << "\n";
  } else {
    out << text.str() << (all_zero ? "difference identically zero\n" : "MISMATCH: nonzero difference\n");
  }
  return all_zero ? 0 : 3;
}

// ---- asym ----

int cmd_asym(const Settings& s, std::ostream& out) {
  const Family f = parse_family(s.family);
  if (s.symbolic || !s.q) throw UsageError("asym needs a numeric --q");
  if (*s.q < 2) throw UsageError("q must be at least 2");
  if (f == Family::sp && *s.q % 2 == 0) throw CharacteristicTwoError("asym --family sp");
  if (s.digits < 1 || s.digits > 60) throw UsageError("digits must lie in 1..60");
  if (s.n_max.value_or(8) < 1) throw UsageError("n-max must be at least 1");
  const long q = *s.q;
  const int n_max = s.n_max.value_or(8);
  const mpq_class eps = power_of_ten_inverse(s.digits);
  const int shown = s.digits + 3;

  const LimitConstant c = limit_constant(f, q, eps);
  const LimitConstant doubled = limit_constant(f, q, eps, 2 * c.terms);
  const mpq_class doubling_diff = abs(mpq_class(c.value - doubled.value));
  const bool doubling_ok = doubling_diff < 2 * eps;
  std::optional<mpq_class> two_form_diff;
  if (f == Family::u) two_form_diff = abs(mpq_class(c.value - limit_constant_u_unsimplified(q, eps).value));
  const bool two_form_ok = !two_form_diff || *two_form_diff < 2 * eps;

  const auto rows = convergence_report(f, q, n_max, c);
  mpz_class qz = q;
  auto guard = [&](int n) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n));
    return mpq_class(10, p);
  };

  if (s.format == "json") {
    ojson doc;
    doc["meta"] = {{"command", "asym"}, {"family", to_string(f)}, {"q", std::to_string(q)}, {"digits", s.digits},
                   {"n_max", n_max}};
    doc["constant"] = {{"value", to_decimal(c.value, shown)},
                       {"error_bound", to_decimal(c.error_bound, shown + 3)},
                       {"terms", c.terms},
                       {"doubling_difference", to_decimal(doubling_diff, shown + 3)},
                       {"doubling_within_2eps", doubling_ok}};
    if (two_form_diff) {
      doc["constant"]["two_formula_difference"] = to_decimal(*two_form_diff, shown + 3);
      doc["constant"]["two_formula_within_2eps"] = two_form_ok;
    }
    doc["rows"] = ojson::array();
    for (const auto& r : rows) {
      doc["rows"].push_back({{"n", r.n},
                             {"ratio", r.ratio.get_str()},
                             {"decimal", to_decimal(r.ratio, shown)},
                             {"distance", to_decimal(r.distance, shown)},
                             {"within_10_q^-n", r.distance < guard(r.n)}});
    }
    out << doc.dump(2) << "\n";
  } else if (s.format == "csv") {
    out << "n,ratio,decimal,distance,guard,within\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.ratio.get_str() << ',' << to_decimal(r.ratio, shown) << ','
          << to_decimal(r.distance, shown) << ',' << to_decimal(guard(r.n), shown) << ','
          << (r.distance < guard(r.n) ? "yes" : "no") << '\n';
    }
  } else {
    out << "family " << to_string(f) << ", q = " << q << ", eps = 1e-" << s.digits << "\n";
    out << "constant         " << to_decimal(c.value, shown) << "\n";
    out << "certified bound  " << to_decimal(c.error_bound, shown + 3) << "  (" << c.terms << " factors)\n";
    out << "doubling check   |C(" << c.terms << ") - C(" << 2 * c.terms << ")| = "
        << to_decimal(doubling_diff, shown + 3) << (doubling_ok ? "  ok" : "  EXCEEDS 2eps") << "\n";
    if (two_form_diff) {
      out << "two-formula      |simplified - unsimplified| = " << to_decimal(*two_form_diff, shown + 3)
          << (two_form_ok ? "  ok" : "  EXCEEDS 2eps") << "\n";
    }
    out << "n\tdecimal\tdistance\t10*q^-n\twithin\tratio\n";
    for (const auto& r : rows) {
      out << r.n << '\t' << to_decimal(r.ratio, shown) << '\t' << to_decimal(r.distance, shown) << '\t'
          << to_decimal(guard(r.n), shown) << '\t' << (r.distance < guard(r.n) ? "yes" : "no") << '\t'
          << r.ratio.get_str() << '\n';
    }
  }
  return doubling_ok && two_form_ok ? 0 : 3;
}

void add_family(CLI::App* cmd, Settings& s) {
  cmd->add_option("--family", s.family, "gl, u or sp")->required()->check(CLI::IsMember({"gl", "u", "sp"}));
}

void add_q(CLI::App* cmd, Settings& s, bool allow_symbolic) {
  auto* q = cmd->add_option("--q", s.q, "field size");
  if (allow_symbolic) {
    auto* sym = cmd->add_flag("--symbolic", s.symbolic, "treat q as an indeterminate");
    q->excludes(sym);
  }
}

void add_format(CLI::App* cmd, Settings& s, std::vector<std::string> allowed) {
  cmd->add_option("--format", s.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of commuting pairs in gl, u and sp over finite fields", "commlie"};
  app.require_subcommand(1);
  Settings s;

  auto* count = app.add_subcommand("count", "exact count of (nilpotent) commuting pairs or group orders");
  add_family(count, s);
  count->add_option("--kind", s.kind, "pairs, nilpairs or group_order");
  count->add_option("--n", s.n, "rank")->required();
  count->add_option("--n-max", s.n_max, "report every n up to this value");
  add_q(count, s, true);
  count->add_option("--backend", s.backend, "class_sum, gen_fn or oracle");
  add_format(count, s, {"json", "csv", "text"});
  count->add_flag("--force", s.force, "lift the oracle size guard");
  count->add_option("--threads", s.threads, "oracle worker threads (0 = all cores)");

  auto* classes = app.add_subcommand("classes", "list every class/orbit with its size");
  add_family(classes, s);
  classes->add_option("--n", s.n, "rank")->required();
  add_q(classes, s, false);
  add_format(classes, s, {"json", "text"});

  auto* verify = app.add_subcommand("verify", "cross-check both formula backends, symbolic values and the oracle");
  add_family(verify, s);
  verify->add_option("--max-n", s.max_n, "largest rank checked");
  verify->add_option("--oracle-max-n", s.oracle_max_n, "largest rank sent to the oracle");
  add_q(verify, s, false);
  verify->add_flag("--force", s.force, "lift the oracle size guard");
  verify->add_option("--threads", s.threads, "oracle worker threads");

  auto* series = app.add_subcommand("series", "class-sum side against product side of the generating function");
  add_family(series, s);
  series->add_option("--kind", s.kind, "pairs or nilpairs");
  series->add_option("--order", s.order, "truncation order");
  add_q(series, s, true);
  add_format(series, s, {"json", "text"});

  auto* asym = app.add_subcommand("asym", "limit constant and convergence table");
  add_family(asym, s);
  add_q(asym, s, false);
  asym->add_option("--digits", s.digits, "target accuracy 10^-digits");
  asym->add_option("--n-max", s.n_max, "last row of the convergence table");
  add_format(asym, s, {"json", "csv", "text"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (count->parsed()) return cmd_count(s, out);
    if (classes->parsed()) return cmd_classes(s, out);
    if (verify->parsed()) return cmd_verify(s, out);
    if (series->parsed()) return cmd_series(s, out);
    if (asym->parsed()) return cmd_asym(s, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace commlie
