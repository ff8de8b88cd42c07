#pragma once

#include <vector>

#include "bkp/affine.hpp"
#include "bkp/multilaurent.hpp"
#include "bkp/partitions.hpp"

namespace bkp {

// n-cycles on {1..n} normalized with sigma(1) = 1: each value is the visiting
// order (sigma(1), ..., sigma(n)); exactly (n-1)! of them.
std::vector<std::vector<int>> cycle_permutations(int n);

// Pair generating series of the coordinates (variables w = slot 0,
// z = slot 1), truncated to exponents in [-D, 0]:
//   A(w,z) = sum_{n,m>0} (-1)^{m+n+1} a(n,m) w^{-n} z^{-m}
//            - 1/2 sum_{n>0} (-1)^n a(n,0) (w^{-n} - z^{-n}).
// Callers wanting the boundary convention p = 1 substitute in the provider.
MultiLaurent series_A(const AffineProvider& ap, int D);

// A(w,z) - 1/4 - 1/2 sum_{i>=1} (-1)^i w^{-i} z^{i}, exponents in [-D, D].
MultiLaurent series_Ahat(const AffineProvider& ap, int D);

// A(-z, z) in one variable.
MultiLaurent series_A_diag(const AffineProvider& ap, int D);

enum class NPointVariant { full, simplified };

// Connected n-point generating series in variables z_1..z_n.
// n = 1: A(-z, z). n >= 2: the cyclic xi-product sum, either with the full
// sign sum over epsilon_2..epsilon_n in {+-1} or with all epsilon = 1 and the
// all-odd-degree restriction scaled by -2^{n-1}; both variants include the
// n = 2 correction -sum_{k odd} (k/2) z_1^{-k} z_2^{k}. Cycle enumeration and
// arithmetic are exact, so the result does not depend on summation order.
// n > 5 is refused unless allow_large is set ((n-1)! cycle terms).
MultiLaurent connected_npoint(const AffineProvider& ap, int n, int D,
                              NPointVariant variant, bool allow_large = false);

// Connected Hurwitz generating coefficient for ramification mu: the
// coefficient of prod_i z_i^{-mu_i} in the simplified connected l(mu)-point
// series at p = 1, divided by z_mu = prod_j m_j! j^{m_j}. Requires every part
// <= D; D >= |mu| makes the extraction exact.
Scalar hurwitz_connected(const AffineProvider& ap, const OddPartition& mu,
                         int D);

// Closed form for the one-part series: for odd n,
//   (1/n) sum_{k=0}^n (-1)^{k+1} (2k-n) e(k) e(n-k) / (4n k! (n-k)!)
// with e(k) the truncated exponential weight of completed (r+1)-cycles.
Scalar hurwitz_single(long n, int r, int B);

}  // namespace bkp
