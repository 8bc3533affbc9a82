#pragma once

#include "commlie/canonical_data.hpp"
#include "commlie/report.hpp"
#include "commlie/series.hpp"

namespace commlie {

/// Throws CharacteristicTwoError for a numeric even q.
void require_odd_q(const QContext& ctx, const std::string& where);

/// q^{n²} ∏_{i=1}^{n} (q^{2i} − 1)
QCoeff group_order_sp(int n, const QContext& ctx);

/// ∏_{r=1}^{⌊m/2⌋} (1 − q^{−2r})
QCoeff sp_nilpotent_pochhammer(const QContext& ctx, int m);

/// Σ(λ′_x)²/2 + o(λ_x)/2 + Σ_{self-dual} d(φ)Σ(λ′)²/2 + Σ_{pairs} d(φ)Σ(λ′)².
/// Throws IntegralityError on inadmissible λ_x.
long centralizer_dim_sp(const SpData& data);
QCoeff centralizer_size_sp(const SpData& data, const QContext& ctx);

/// Evaluates Σ_{j<i} λ_i + Σ_i ⌈λ_i/2⌉ and (Σ(λ′_i)² + o(λ))/2 and returns their common value.
/// Throws MismatchError if they differ, UsageError if λ is not sp-admissible.
long nilpotent_dim_formulas_agree(const Partition& lambda);

/// Number of nilpotent elements of sp(2n,q) with Jordan type λ (|λ| = 2n).
QCoeff nilpotent_count_sp(const Partition& lambda, int n, const QContext& ctx);

/// Size of the Sp(2n,q)-orbit on sp(2n,q) with the given data.
QCoeff orbit_size_sp(const SpData& data, int n, const QContext& ctx);

/// Σ_n S_n/|Sp(2n,q)| v^n, v tracking sp(2n).
/// class_sum: even part of A ∏_d B_d^{N̄(2d)} ∏_d C_d^{M̄(d)} in u, read in v = u²;
/// gen_fn: ∏_i (1+v^i) Σ_m (q v^i)^m/(1/q²)_m.
USeries sp_pairs_series(const QContext& ctx, int order, Backend backend);
/// Σ_n NS_n/|Sp(2n,q)| v^n.
USeries sp_nilpotent_series(const QContext& ctx, int order, Backend backend);

QCoeff commuting_pairs_sp(int n, const QContext& ctx, Backend backend = Backend::gen_fn);
QCoeff nilpotent_pairs_sp(int n, const QContext& ctx, Backend backend = Backend::gen_fn);

}  // namespace commlie
