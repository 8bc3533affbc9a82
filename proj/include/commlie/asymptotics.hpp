#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "commlie/report.hpp"

namespace commlie {

struct LimitConstant {
  Family family = Family::gl;
  long q = 2;
  /// Exact partial product over indices 1..terms.
  mpq_class value;
  /// Certified bound on |value − true limit|.
  mpq_class error_bound;
  int terms = 0;
};

/// Limits of G_n/q^{n²+n}, U_n/q^{n²+n}, S_n/q^{2n²+2n}:
///  gl: ∏_j (1−q^{−j})^{−j}
///  u:  ∏_{i odd} (1−q^{−i})^{−1} ∏_{i even} (1−q^{−i})^{−⌊i/4⌋}
///  sp: ∏_i (1+q^{−i}) (1−q^{−i})^{−⌊(i+1)/2⌋}
/// With terms = 0 the smallest truncation whose certified bound is below eps is used.
LimitConstant limit_constant(Family family, long q, const mpq_class& eps, int terms = 0);

/// The unitary constant through the unsimplified product
///   ∏_k (1−q^{−k})^{−(⌊k/2⌋+1)+[k even]} (1+q^{−k})^{−⌈k/2⌉+[k odd]}.
LimitConstant limit_constant_u_unsimplified(long q, const mpq_class& eps, int terms = 0);

struct ConvergenceRow {
  int n = 0;
  mpq_class ratio;
  /// |ratio − constant.value|
  mpq_class distance;
};

/// Exact ratios count_n / q^{n²+n} (gl, u) or S_n / q^{2n²+2n} (sp) for n = 1..n_max.
std::vector<ConvergenceRow> convergence_report(Family family, long q, int n_max, const LimitConstant& constant);

/// Decimal rendering truncated toward zero to the given number of fractional digits.
std::string to_decimal(const mpq_class& v, int digits);
/// 10^{−k} as an exact rational.
mpq_class power_of_ten_inverse(int k);

}  // namespace commlie
