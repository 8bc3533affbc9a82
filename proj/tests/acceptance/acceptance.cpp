// Acceptance runner: one PASS/FAIL line per criterion. ctest runs each criterion separately.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "census_support.hpp"
#include "commlie/asymptotics.hpp"
#include "commlie/bruteforce.hpp"
#include "commlie/cli.hpp"
#include "commlie/counts_gl.hpp"
#include "commlie/counts_sp.hpp"
#include "commlie/counts_u.hpp"
#include "commlie/polycount.hpp"

using namespace commlie;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

mpz_class power(long q, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return r;
}

std::string label(const char* family, int n, int q) {
  return std::string(family) + "(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")";
}

using CountFn = QCoeff (*)(int, const QContext&, Backend);

// Oracle against both formula backends.
void oracle_cases(Outcome& o, SpaceFamily space, CountFn formula, bool nilpotent,
                  std::initializer_list<std::pair<int, int>> cases) {
  for (auto [n, q] : cases) {
    auto ctx = QContext::numeric(q);
    auto sp = LieSpace::make(space, n, q);
    mpz_class oracle = nilpotent ? count_nilpotent_pairs(sp) : count_commuting_pairs(sp);
    mpz_class gen = formula(n, ctx, Backend::gen_fn).as_integer();
    mpz_class cls = formula(n, ctx, Backend::class_sum).as_integer();
    const std::string what = std::string(nilpotent ? "nilpotent " : "") + label(to_string(space).c_str(), n, q);
    o.check(oracle == gen && gen == cls,
            what + ": oracle " + oracle.get_str() + ", gen_fn " + gen.get_str() + ", class_sum " + cls.get_str());
  }
}

void expect_text(Outcome& o, const QCoeff& v, const std::string& want, const std::string& what) {
  o.check(v.to_string() == want, what + " = " + v.to_string() + ", expected " + want);
}

Outcome criterion1() {
  Outcome o;
  oracle_cases(o, SpaceFamily::mat, commuting_pairs_gl, false, {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}});
  expect_text(o, commuting_pairs_gl(2, QContext::symbolic()), "q^6 + q^5 - q^3", "G_2");
  expect_text(o, commuting_pairs_gl(2, QContext::numeric(2)), "88", "G_2(2)");
  expect_text(o, commuting_pairs_gl(2, QContext::numeric(3)), "945", "G_2(3)");
  o.note("7 (n,q) cases, oracle = gen_fn = class_sum");
  return o;
}

Outcome criterion2() {
  Outcome o;
  oracle_cases(o, SpaceFamily::mat, nilpotent_pairs_gl, true, {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}});
  expect_text(o, nilpotent_pairs_gl(2, QContext::symbolic()), "q^3 + q^2 - q", "NG_2");
  expect_text(o, nilpotent_pairs_gl(2, QContext::numeric(2)), "10", "NG_2(2)");
  o.note("7 (n,q) cases, oracle = gen_fn = class_sum");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto cases = {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
  oracle_cases(o, SpaceFamily::gu, commuting_pairs_u, false, cases);
  oracle_cases(o, SpaceFamily::gu, nilpotent_pairs_u, true, cases);
  auto s = QContext::symbolic();
  expect_text(o, commuting_pairs_u(1, s), "q^2", "U_1");
  expect_text(o, commuting_pairs_u(2, s), "q^6 + q^5 - q^3", "U_2");
  o.note("5 (n,q) cases for pairs and nilpotent pairs, skew-Hermitian oracle");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto cases = {std::pair{1, 3}, {1, 5}, {2, 3}};
  oracle_cases(o, SpaceFamily::sp, commuting_pairs_sp, false, cases);
  oracle_cases(o, SpaceFamily::sp, nilpotent_pairs_sp, true, cases);
  auto s = QContext::symbolic();
  expect_text(o, commuting_pairs_sp(1, s), "q^4 + q^3 - q", "S_1");
  expect_text(o, nilpotent_pairs_sp(1, s), "q^3 + q^2 - q", "NS_1");
  expect_text(o, commuting_pairs_sp(1, QContext::numeric(3)), "105", "S_1(3)");
  expect_text(o, nilpotent_pairs_sp(1, QContext::numeric(3)), "33", "NS_1(3)");
  o.note("3 (n,q) cases for pairs and nilpotent pairs");
  return o;
}

Outcome criterion5() {
  Outcome o;
  int compared = 0;
  using SeriesFn = USeries (*)(const QContext&, int, Backend);
  struct Row {
    const char* name;
    SeriesFn fn;
    int order;
    bool odd_only;
  };
  for (const auto& r : {Row{"gl pairs", gl_pairs_series, 8, false}, Row{"gl nilpairs", gl_nilpotent_series, 8, false},
                        Row{"u pairs", u_pairs_series, 8, false}, Row{"u nilpairs", u_nilpotent_series, 8, false},
                        Row{"sp pairs", sp_pairs_series, 6, true}, Row{"sp nilpairs", sp_nilpotent_series, 6, true}}) {
    for (long q : {2, 3, 4, 5}) {
      if (r.odd_only && q % 2 == 0) continue;
      auto ctx = QContext::numeric(q);
      o.check(r.fn(ctx, r.order, Backend::class_sum) == r.fn(ctx, r.order, Backend::gen_fn),
              std::string(r.name) + " q=" + std::to_string(q));
      compared += r.order + 1;
    }
  }
  o.note(std::to_string(compared) + " coefficients compared");
  return o;
}

Outcome criterion6() {
  Outcome o;
  int runs = 0;
  auto series = [&](const std::string& family, const std::string& kind, const std::string& q, int order) {
    std::vector<std::string> args = {"series", "--family", family, "--kind", kind, "--order", std::to_string(order)};
    if (q == "symbolic") {
      args.push_back("--symbolic");
    } else {
      args.insert(args.end(), {"--q", q});
    }
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    o.check(code == 0 && out.str().find("difference identically zero") != std::string::npos,
            "series " + family + " " + kind + " q=" + q + " exit " + std::to_string(code));
    ++runs;
  };
  for (const std::string kind : {"pairs", "nilpairs"}) {
    for (const std::string family : {"gl", "u"}) {
      for (const std::string q : {"2", "3"}) series(family, kind, q, 8);
      series(family, kind, "symbolic", 6);
    }
    for (const std::string q : {"3", "5"}) series("sp", kind, q, 8);
    series("sp", kind, "symbolic", 6);
  }
  o.note(std::to_string(runs) + " series runs, all differences zero");
  return o;
}

USeries one_plus_c_monomial(const QContext& ctx, long c, int d, int order) {
  return USeries::one(ctx, order) + USeries::monomial(ctx.integer(c), d, order);
}

Outcome criterion7() {
  Outcome o;
  const int N = 8;
  auto s = QContext::symbolic();
  USeries prod = USeries::one(s, N);
  for (int d = 1; d <= N; ++d) prod *= one_plus_c_monomial(s, -1, d, N).pow_general(count_irreducible(d, s));
  o.check(prod == USeries::one(s, N) - USeries::monomial(s.q(), 1, N), "irreducible product identity (symbolic)");

  for (long q : {3, 5}) {
    auto ctx = QContext::numeric(q);
    IrredCounts t = irred_counts(N, ctx);
    USeries first = USeries::one(ctx, N);
    USeries second = USeries::one(ctx, N);
    for (int d = 1; d <= N; ++d) {
      USeries minus_inv = one_plus_c_monomial(ctx, -1, d, N).recip();
      USeries plus_inv = one_plus_c_monomial(ctx, 1, d, N).recip();
      const unsigned long nb = t.nbar[d].as_integer().get_ui();
      const unsigned long mb = t.mbar[d].as_integer().get_ui();
      first *= minus_inv.pow(nb) * minus_inv.pow(mb);
      second *= plus_inv.pow(nb) * minus_inv.pow(mb);
    }
    USeries rhs = one_plus_c_monomial(ctx, -1, 1, N) *
                  (USeries::one(ctx, N) - USeries::monomial(ctx.q(), 1, N)).recip();
    o.check(first == rhs, "self-dual identity (first part) q=" + std::to_string(q));
    o.check(second == USeries::one(ctx, N), "self-dual identity (second part) q=" + std::to_string(q));
  }

  long minsum = 0;
  for (int k = 0; k <= 20; ++k) {
    for (const auto& lam : iterate_partitions(k)) {
      o.check(lam.min_sum() == lam.sum_sq_conjugate(), "min-sum identity at " + lam.to_string());
      ++minsum;
    }
  }
  long admissible = 0;
  for (int k = 0; k <= 16; ++k) {
    for (const auto& lam : iterate_sp_admissible(k)) {
      try {
        nilpotent_dim_formulas_agree(lam);
      } catch (const std::exception& e) {
        o.check(false, "sp nilpotent dimension at " + lam.to_string() + ": " + e.what());
      }
      ++admissible;
    }
  }
  o.note(std::to_string(minsum) + " partitions (min-sum), " + std::to_string(admissible) +
         " admissible partitions (sp dimension)");
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (long q : {2, 3}) {
    auto ctx = QContext::numeric(q);
    for (int n = 1; n <= 4; ++n) {
      mpz_class total = 0, nil = 0;
      for (const auto& d : enumerate_canonical_data(n, ctx)) total += class_size(n, d, ctx).as_integer();
      for (const auto& lam : iterate_partitions(n)) nil += class_size(n, CanonicalData::nilpotent(lam), ctx).as_integer();
      o.check(total == power(q, n * n), "gl mass " + label("gl", n, q));
      o.check(nil == power(q, n * n - n), "gl nilpotent mass " + label("gl", n, q));
    }
    for (int n = 1; n <= 3; ++n) {
      mpz_class total = 0, nil = 0;
      for (const auto& d : enumerate_canonical_data(n, ctx)) total += orbit_size_u(n, d, ctx).as_integer();
      for (const auto& lam : iterate_partitions(n)) nil += orbit_size_u(n, CanonicalData::nilpotent(lam), ctx).as_integer();
      o.check(total == power(q, n * n), "u mass " + label("u", n, q));
      o.check(nil == power(q, n * n - n), "u nilpotent mass " + label("u", n, q));
    }
  }
  for (long q : {3, 5}) {
    auto ctx = QContext::numeric(q);
    for (int n = 1; n <= 2; ++n) {
      mpz_class total = 0, nil = 0;
      for (const auto& d : enumerate_sp_data(n, ctx)) total += orbit_size_sp(d, n, ctx).as_integer();
      for (const auto& lam : iterate_sp_admissible(2 * n)) nil += nilpotent_count_sp(lam, n, ctx).as_integer();
      o.check(total == power(q, 2 * n * n + n), "sp mass " + label("sp", n, q));
      o.check(nil == power(q, 2 * n * n), "sp nilpotent mass " + label("sp", n, q));
    }
  }
  // The oracle census must reproduce each formula class size, not just the totals.
  for (auto [family, n, q] : {std::tuple{SpaceFamily::mat, 2, 3}, {SpaceFamily::mat, 3, 2}, {SpaceFamily::gu, 2, 3},
                              {SpaceFamily::gu, 3, 2}, {SpaceFamily::sp, 1, 5}, {SpaceFamily::sp, 2, 3}}) {
    auto check = testing::compare_census(LieSpace::make(family, n, q));
    o.check(check.all_match(), "census " + label(to_string(family).c_str(), n, q) + "\n" + check.describe_mismatches());
  }
  o.note("gl n<=4 and u n<=3 at q=2,3; sp n<=2 at q=3,5; oracle census per class");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const mpq_class eps = power_of_ten_inverse(12);
  struct Row {
    Family f;
    long q;
  };
  for (const auto& r : {Row{Family::gl, 2}, Row{Family::gl, 3}, Row{Family::u, 2}, Row{Family::u, 3},
                        Row{Family::sp, 3}, Row{Family::sp, 5}}) {
    const std::string name = to_string(r.f) + " q=" + std::to_string(r.q);
    LimitConstant c = limit_constant(r.f, r.q, eps);
    LimitConstant d = limit_constant(r.f, r.q, eps, 2 * c.terms);
    o.check(abs(mpq_class(c.value - d.value)) < 2 * eps, name + " doubling");
    if (r.f == Family::u) {
      o.check(abs(mpq_class(c.value - limit_constant_u_unsimplified(r.q, eps).value)) < 2 * eps,
              name + " two-formula agreement");
    }
    auto rows = convergence_report(r.f, r.q, 8, c);
    for (std::size_t i = 3; i < rows.size(); ++i) {
      const int n = rows[i].n;
      const mpq_class bound = mpq_class(10) / power(r.q, n);
      o.check(rows[i].distance < rows[i - 1].distance, name + " distance decreases at n=" + std::to_string(n));
      o.check(rows[i].distance < bound, name + " n=" + std::to_string(n) + ": distance " +
                                            to_decimal(rows[i].distance, 6) + " >= 10*q^-n = " +
                                            to_decimal(bound, 6));
    }
    o.note(name + ": constant " + to_decimal(c.value, 15) + ", n=8 distance " + to_decimal(rows.back().distance, 6));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"count", "--family", "gl", "--n", "1", "--n-max", "3", "--q", "2", "--backend", "oracle", "--format", "json"},
      {"count", "--family", "gl", "--kind", "nilpairs", "--n", "1", "--n-max", "3", "--q", "3", "--backend", "oracle",
       "--format", "json"},
      {"count", "--family", "gl", "--n", "2", "--q", "4", "--backend", "oracle", "--format", "csv"},
      {"count", "--family", "u", "--n", "1", "--n-max", "2", "--q", "3", "--backend", "oracle", "--format", "json"},
      {"count", "--family", "u", "--kind", "nilpairs", "--n", "3", "--q", "2", "--backend", "oracle", "--format",
       "json"},
      {"count", "--family", "sp", "--n", "1", "--n-max", "2", "--q", "3", "--backend", "oracle", "--format", "json"},
      {"count", "--family", "sp", "--kind", "nilpairs", "--n", "1", "--q", "5", "--backend", "oracle"},
      {"count", "--family", "gl", "--n", "0", "--n-max", "8", "--symbolic", "--format", "json"},
      {"count", "--family", "sp", "--n", "0", "--n-max", "6", "--q", "3", "--backend", "class_sum", "--format", "csv"},
      {"verify", "--family", "u", "--max-n", "2", "--q", "3"},
      {"verify", "--family", "sp", "--max-n", "2", "--q", "3"},
      {"series", "--family", "sp", "--kind", "nilpairs", "--symbolic", "--order", "6", "--format", "json"},
      {"asym", "--family", "u", "--q", "2", "--format", "json"},
  };
  auto once = [](std::vector<std::string> args, const char* threads) {
    if (args[0] == "count" || args[0] == "verify") args.insert(args.end(), {"--threads", threads});
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  for (const auto& cmd : commands) {
    std::string first = once(cmd, "1");
    std::string name;
    for (const auto& a : cmd) name += a + " ";
    o.check(first.rfind("0\n", 0) == 0, name + "exited nonzero");
    for (const char* t : {"1", "3", "8"}) o.check(once(cmd, t) == first, name + "differs with --threads " + t);
  }
  o.note(std::to_string(commands.size()) + " commands, 4 runs each at 1/1/3/8 threads, byte-identical");
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {"oracle equality, gl pairs (< 120 s)", criterion1},
    {"oracle equality, gl nilpotent pairs (< 120 s)", criterion2},
    {"oracle equality, u pairs and nilpotent pairs (< 180 s)", criterion3},
    {"oracle equality, sp pairs and nilpotent pairs (< 600 s)", criterion4},
    {"backend agreement class_sum = gen_fn", criterion5},
    {"generating-function identities via the series command", criterion6},
    {"structural identities", criterion7},
    {"mass checks", criterion8},
    {"asymptotics: doubling, two-formula, 10*q^-n proximity (< 60 s)", criterion9},
    {"determinism across repeated runs and thread counts", criterion10},
};

const double kLimitSeconds[] = {120, 120, 180, 600, 0, 0, 0, 0, 60, 0};

bool run_criterion(int c) {
  const auto& [title, fn] = kCriteria.at(static_cast<std::size_t>(c - 1));
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double limit = kLimitSeconds[c - 1];
  if (limit > 0) o.check(secs < limit, "runtime " + std::to_string(secs) + " s over the limit");
  std::ostringstream t;
  t.setf(std::ios::fixed);
  t.precision(2);
  t << secs;
  std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  [" << t.str() << " s]\n";
  for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "run one criterion (1-10); default all")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  bool ok = true;
  for (int c = 1; c <= 10; ++c) {
    if (criterion == 0 || criterion == c) ok = run_criterion(c) && ok;
  }
  return ok ? 0 : 1;
}
