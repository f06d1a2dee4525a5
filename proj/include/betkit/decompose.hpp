#pragma once

#include "betkit/martingale.hpp"

namespace betkit {

// Factorization of a capital table into a 0-sided and a 1-sided factor whose
// pointwise product reproduces the input exactly.
struct ProductDecomposition {
    MartingaleTable zero_sided;
    MartingaleTable one_sided;
};

// Splits a valid table M into factors N (0-sided) and T (1-sided) with
// N(sigma) * T(sigma) == M(sigma) at every node. The roots are fixed as
// N(root) = M(root), T(root) = 1, and at each internal sigma the factor
// wagers follow the case split on the sign of M's wager:
//   w_N(sigma) = w_M(sigma) / T(sigma)  when w_M(sigma) < 0 and T(sigma) > 0,
//   w_T(sigma) = w_M(sigma) / N(sigma)  when w_M(sigma) > 0 and N(sigma) > 0,
// and 0 otherwise. Once a factor reaches 0 the product is 0 on the whole
// subtree and both factors stop betting. Throws PreconditionViolated when the
// input fails validate_martingale.
ProductDecomposition product_decompose(const MartingaleTable& table);

}  // namespace betkit
