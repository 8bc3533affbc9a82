#pragma once

#include "commlie/canonical_data.hpp"
#include "commlie/report.hpp"
#include "commlie/series.hpp"

namespace commlie {

/// q^{n(n−1)/2} ∏_{i=1}^{n} (q^i − 1)
QCoeff group_order_gl(int n, const QContext& ctx);

/// ∏_φ q^{d(φ)·Σ_i (λ′_{φ,i})²}
QCoeff centralizer_size_mat(const CanonicalData& data, const QContext& ctx);

/// |GL(n,q)| / ∏_φ [q^{d Σ(λ′)²} ∏_i (1/q^d)_{m_i}]. Throws UsageError if the weight is not n,
/// IntegralityError naming the data if the quotient is not a positive integer.
QCoeff class_size(int n, const CanonicalData& data, const QContext& ctx);

/// Σ_n G_n/|GL(n,q)| u^n up to the given order.
/// class_sum: ∏_d F_d^{N(d,q)} with F_d = Σ_λ u^{d|λ|}/∏_i (1/q^d)_{m_i(λ)};
/// gen_fn: ∏_{i≥1} Σ_m (q u^i)^m/(1/q)_m.
USeries gl_pairs_series(const QContext& ctx, int order, Backend backend);
/// Σ_n NG_n/|GL(n,q)| u^n.
/// class_sum: Σ_λ u^{|λ|} ∏_i 1/[(1/q)_{m_i} q^{m_i}]; gen_fn: ∏_i Σ_m (u^i/q)^m/(1/q)_m.
USeries gl_nilpotent_series(const QContext& ctx, int order, Backend backend);

/// G_n. backend must be class_sum or gen_fn.
QCoeff commuting_pairs_gl(int n, const QContext& ctx, Backend backend = Backend::gen_fn);
/// NG_n.
QCoeff nilpotent_pairs_gl(int n, const QContext& ctx, Backend backend = Backend::gen_fn);

}  // namespace commlie
