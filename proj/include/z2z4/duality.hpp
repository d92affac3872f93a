#pragma once

#include <cstddef>

#include "z2z4/code.hpp"

namespace z2z4 {

/* Default largest binary length the brute-force dual will scan (2^n ambient vectors). */
inline constexpr std::size_t kDefaultOracleMaxLength = 20;

/*
 * Generator matrix of the dual of the code spanned by a standard form, in
 * the standard form's coordinates:
 *
 *   ( T_b^t  I_{alpha-kappa} | 0   0                 2 S_b^t           )
 *   ( 0      0               | 0   2 I_{gamma-kappa} 2 R^t             )
 *   ( T_2^t  0               | I   T_1^t             -(S_q + R T_1)^t  )
 */
GeneratorMatrix parity_check_matrix(const StandardForm& form);

/* Dual through the standard form and its parity-check matrix, mapped back to the original coordinates. */
AdditiveCode dual(const AdditiveCode& code, std::size_t max_length = kDefaultMaxLength);

/* { v in ambient : <u, v> = 0 for every codeword u }, by scanning the whole ambient. */
AdditiveCode brute_force_dual(const AdditiveCode& code, std::size_t max_length = kDefaultOracleMaxLength);

/* (alpha, beta; alpha+gamma-2kappa, beta-gamma-delta+kappa; alpha-kappa).  Throws on negative components. */
TypeParams dual_type(const TypeParams& params);

/* C is contained in its dual; checked on every pair of generator rows. */
bool is_self_orthogonal(const AdditiveCode& code);

/* Self-orthogonal and |C|^2 = 2^alpha * 4^beta. */
bool is_self_dual(const AdditiveCode& code);

struct DualityReport {
  AdditiveCode dual;
  TypeParams dual_params;
  bool self_orthogonal = false;
  bool self_dual = false;
};

DualityReport duality_report(const AdditiveCode& code, std::size_t max_length = kDefaultMaxLength);

}  // namespace z2z4
