#pragma once

#include "commlie/canonical_data.hpp"
#include "commlie/report.hpp"
#include "commlie/series.hpp"

namespace commlie {

/// q^{n(n−1)/2} ∏_{i=1}^{n} (q^i − (−1)^i)
QCoeff group_order_gu(int n, const QContext& ctx);

/// Same exponent as for matrices: ∏_φ q^{d(φ)·Σ_i (λ′_{φ,i})²}.
QCoeff centralizer_size_u(const CanonicalData& data, const QContext& ctx);

/// |GU(n,q)| / ∏_φ [q^{dΣ(λ′)²} ∏_i (1/q^d)_{m_i}], with q ↦ −q in the Pochhammer for odd d.
QCoeff orbit_size_u(int n, const CanonicalData& data, const QContext& ctx);

/// Σ_n U_n/|GU(n,q)| u^n.
USeries u_pairs_series(const QContext& ctx, int order, Backend backend);
/// Σ_n NU_n/|GU(n,q)| u^n.
USeries u_nilpotent_series(const QContext& ctx, int order, Backend backend);

QCoeff commuting_pairs_u(int n, const QContext& ctx, Backend backend = Backend::gen_fn);
QCoeff nilpotent_pairs_u(int n, const QContext& ctx, Backend backend = Backend::gen_fn);

}  // namespace commlie
