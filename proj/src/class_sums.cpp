#include "commlie/class_sums.hpp"

#include <optional>
#include <vector>

#include "commlie/error.hpp"

namespace commlie {

USeries partition_series(const QContext& ctx, int order, int w, const std::function<QCoeff(int)>& factor,
                         bool sp_admissible_only) {
  USeries out(ctx, order);
  std::vector<std::optional<QCoeff>> cache(static_cast<std::size_t>(order) + 1);
  auto f = [&](int m) -> const QCoeff& {
    if (!cache[m]) cache[m] = factor(m);
    return *cache[m];
  };
  for (int k = 0; w * k <= order; ++k) {
    for (const auto& lam : iterate_partitions(k)) {
      if (sp_admissible_only && !lam.sp_admissible()) continue;
      QCoeff term = ctx.one();
      for (auto [part, m] : lam.multiplicities()) term *= f(m);
      out[w * k] += term;
    }
  }
  return out;
}

USeries power_by_count(const USeries& s, const QCoeff& c) {
  if (c.is_symbolic()) return s.pow_general(c);
  mpz_class e = c.as_integer();
  if (e < 0 || !e.fits_ulong_p()) throw Error("polynomial count out of range: " + e.get_str());
  return s.pow(e.get_ui());
}

QCoeff scaled_coefficient(const QCoeff& group_order, const USeries& s, int n, const std::string& stratum) {
  QCoeff v = group_order * s[n];
  require_integral(v, stratum);
  return v;
}

}  // namespace commlie
