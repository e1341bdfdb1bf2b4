#pragma once

#include <vector>

#include "qherm/param.hpp"

namespace qherm {

/// Symmetric q-integer [n]_{q_i} = (q_i^n - q_i^{-n})/(q_i - q_i^{-1}) with
/// q_i = q^d, computed as the Laurent polynomial sum q_i^{n-1} + q_i^{n-3}
/// + ... + q_i^{1-n}.
RatFuncV qnum_symmetric(int n, int d);

/// Non-symmetric quantum integer (n)_p = 1 + p + ... + p^{n-1}; (0)_p = 0.
ParamScalar qnum_nonsym(int n, const ParamScalar& p);

/// [n]_{q_i}^! = [n][n-1]...[1].
RatFuncV qfactorial(int n, int d);

/// Symmetric q-binomial [n choose m]_{q_i}. Always a Laurent polynomial.
/// Rejects m < 0 or m > n.
RatFuncV qbinomial(int n, int m, int d);

/// Finite q-Pochhammer (a;base)_n = prod_{k=0}^{n-1} (1 - a*base^k).
ParamScalar qpochhammer_finite(const ParamScalar& a, const ParamScalar& base, int n);
/// (a;q)_n with the global base q.
ParamScalar qpochhammer_finite(const ParamScalar& a, int n);

/// RatFuncV-level finite Pochhammer, for coefficients that never leave Q(v).
RatFuncV qpoch_rf(const RatFuncV& a, const RatFuncV& base, int n);
/// (q;q)_n in Q(v).
RatFuncV qpoch_qq(int n);

/// Coefficients of a^0..a^{n_max} in the series expansion
/// (a;q)_inf = sum_n (-1)^n q^{binom(n,2)} / (q;q)_n * a^n.
std::vector<RatFuncV> qpochhammer_series(int n_max);

/// Checks sum_{n=0}^{l} (-1)^n [l choose n]_q q^{n(l+1)} = (q^2;q^2)_l
/// exactly in Q(v).
bool qbinom_alternating_sum(int ell);

} // namespace qherm
