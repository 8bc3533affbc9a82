#include "commlie/canonical_data.hpp"

#include <functional>
#include <sstream>

#include "commlie/error.hpp"

namespace commlie {

namespace {

long slot_count(const QCoeff& c) {
  mpz_class v = c.as_integer();
  if (!v.fits_slong_p() || v < 0) throw Error("slot count out of range: " + v.get_str());
  return v.get_si();
}

std::string list_to_string(const char* tag, const std::vector<Assignment>& as) {
  std::ostringstream os;
  for (const auto& a : as) os << ' ' << tag << a.degree << '#' << a.slot << '=' << a.lambda.to_string();
  return os.str();
}

// Fills slots (degree, slot) in order; `weight_of` gives the weight one unit of |λ| costs.
void fill_slots(const std::vector<std::pair<int, long>>& slots, std::size_t pos, int budget,
                const std::function<int(int)>& weight_of, std::vector<Assignment>& current,
                const std::function<void(int, const std::vector<Assignment>&)>& emit) {
  emit(budget, current);
  for (std::size_t s = pos; s < slots.size(); ++s) {
    auto [d, slot] = slots[s];
    const int w = weight_of(d);
    for (int k = 1; k * w <= budget; ++k) {
      for (const auto& lam : iterate_partitions(k)) {
        current.push_back({d, static_cast<int>(slot), lam});
        fill_slots(slots, s + 1, budget - k * w, weight_of, current, emit);
        current.pop_back();
      }
    }
  }
}

}  // namespace

int CanonicalData::weight() const {
  int w = 0;
  for (const auto& a : assignments) w += a.degree * a.lambda.size();
  return w;
}

std::string CanonicalData::to_string() const {
  std::string s = list_to_string("d", assignments);
  return s.empty() ? "{}" : "{" + s.substr(1) + "}";
}

CanonicalData CanonicalData::nilpotent(const Partition& lambda) {
  CanonicalData c;
  if (!lambda.empty()) c.assignments.push_back({1, 0, lambda});
  return c;
}

std::vector<CanonicalData> enumerate_canonical_data(int n, const QContext& ctx) {
  if (ctx.is_symbolic()) throw UsageError("canonical data enumeration needs a numeric q");
  if (n < 0) throw UsageError("n must be non-negative");
  std::vector<std::pair<int, long>> slots;
  for (int d = 1; d <= n; ++d) {
    long count = slot_count(count_irreducible(d, ctx));
    for (long s = 0; s < count; ++s) slots.emplace_back(d, s);
  }
  std::vector<CanonicalData> out;
  std::vector<Assignment> current;
  fill_slots(slots, 0, n, [](int d) { return d; }, current,
             [&](int budget, const std::vector<Assignment>& cur) {
               if (budget == 0) out.push_back(CanonicalData{cur});
             });
  return out;
}

int SpData::weight() const {
  int w = lambda_x.size();
  for (const auto& a : selfdual) w += 2 * a.degree * a.lambda.size();
  for (const auto& a : pairs) w += 2 * a.degree * a.lambda.size();
  return w;
}

std::string SpData::to_string() const {
  return "{x=" + lambda_x.to_string() + list_to_string("s", selfdual) + list_to_string("p", pairs) + "}";
}

std::vector<SpData> enumerate_sp_data(int n, const QContext& ctx) {
  if (ctx.is_symbolic()) throw UsageError("symplectic data enumeration needs a numeric q");
  if (n < 0) throw UsageError("n must be non-negative");
  IrredCounts t = irred_counts(std::max(n, 1), ctx);
  // Self-dual slots first (tagged with a negative degree), then pair slots.
  std::vector<std::pair<int, long>> slots;
  for (int d = 1; d <= n; ++d) {
    for (long s = 0; s < slot_count(t.nbar[d]); ++s) slots.emplace_back(-d, s);
  }
  for (int d = 1; d <= n; ++d) {
    for (long s = 0; s < slot_count(t.mbar[d]); ++s) slots.emplace_back(d, s);
  }
  std::vector<SpData> out;
  std::vector<Assignment> current;
  fill_slots(slots, 0, 2 * n, [](int d) { return 2 * (d < 0 ? -d : d); }, current,
             [&](int budget, const std::vector<Assignment>& cur) {
               for (const auto& lam : iterate_sp_admissible(budget)) {
                 SpData sd;
                 sd.lambda_x = lam;
                 for (const auto& a : cur) {
                   if (a.degree < 0) {
                     sd.selfdual.push_back({-a.degree, a.slot, a.lambda});
                   } else {
                     sd.pairs.push_back(a);
                   }
                 }
                 out.push_back(std::move(sd));
               }
             });
  return out;
}

}  // namespace commlie
