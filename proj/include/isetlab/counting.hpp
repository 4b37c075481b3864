#pragma once

#include <array>

#include "isetlab/exact.hpp"

namespace isetlab {

/// Closed form for |I(A_t)|:
///   C(t+2,t) S(k-t-1) + C(t+2,t+1) S(k-t-2) + S(k-t-3),  S(m) = sum_{j<=m} C(n-t-2, j).
/// Valid (and exact) for t+1 <= k and n >= 2k-t; other inputs throw ParameterError.
ExactNat count_I_At(int n, int k, int t);

/// sum_{j=0}^{k-t-1} C(n-t, j), the size of I(S_X) for a complete t-core sunflower
/// once n >= 2k-t. Requires 1 <= t <= k <= n.
ExactNat count_I_sunflower(int n, int k, int t);

/// The four equal expressions for |I(S_X)|, evaluated independently with signed
/// intermediates:
///   [0] sum_{j<=k-t-1} C(n-t, j)
///   [1] 2 sum_{j<=k-t-1} C(n-t-1, j) - C(n-t-1, k-t-1)
///   [2] 4 sum_{j<=k-t-1} C(n-t-2, j) - 2 C(n-t-2, k-t-1) - C(n-t-1, k-t-1)
///   [3] 2 C(n-t-2, k-t-1) + 4 sum_{j<=k-t-2} C(n-t-2, j) - C(n-t-1, k-t-1)
/// Requires 1 <= t <= k <= n and n >= t+2.
std::array<BigInt, 4> sunflower_chain_forms(int n, int k, int t);

/// True iff all four forms agree and are non-negative. Returns false (never
/// throws) when the parameters are outside the valid range.
bool sunflower_chain_check(int n, int k, int t);

/// C(n-t, k-t), the Erdős–Ko–Rado bound. Requires 1 <= t <= k <= n.
ExactNat ekr_bound(int n, int k, int t);

}  // namespace isetlab
