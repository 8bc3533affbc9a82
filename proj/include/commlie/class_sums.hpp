#pragma once

#include <functional>

#include "commlie/partitions.hpp"
#include "commlie/series.hpp"

namespace commlie {

/// Σ_λ u^{w·|λ|} ∏_{i : m_i(λ) > 0} factor(m_i(λ)) over partitions with w·|λ| <= order,
/// optionally restricted to sp-admissible λ. Terms are added in iterate_partitions order.
USeries partition_series(const QContext& ctx, int order, int w, const std::function<QCoeff(int)>& factor,
                         bool sp_admissible_only = false);

/// s^c where c counts polynomials: integer power for numeric q, binomial series for symbolic q.
USeries power_by_count(const USeries& s, const QCoeff& c);

/// |G|·[u^n] s, asserted integral under the given stratum label.
QCoeff scaled_coefficient(const QCoeff& group_order, const USeries& s, int n, const std::string& stratum);

}  // namespace commlie
