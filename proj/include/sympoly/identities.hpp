#pragma once

// Coefficient machinery for the universal odd-ratio relation. With
// a_j = g_j / g_1^j (g = f or T):
//
//   a_{2n-1} = sum_{k=1}^{2n-1} (-1)^{k+1} C(2n-1,k) a_{2n-1-k}            (*)
//
// Repeatedly eliminating the odd-index ratios on the right leaves
//
//   a_{2n-1} = sum_{r=1}^{n} (-1)^{r+1} C_{n,r} a_{2(n-r)}                  (**)
//
// with positive integers C_{n,r}.

#include "sympoly/rational.hpp"
#include "sympoly/report.hpp"
#include "sympoly/trec.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace sympoly {

struct CnrValue {
    BigInt value;
    /// Number of nonvanishing binomial products summed into value.
    std::uint64_t terms = 0;
};

/// C_{n,r} from the nested alternating sums: one signed product
///   C(2n-1, 2k_1) C(2(n-k_1)-1, 2k_2) ... C(2(n-k_1-...-k_{j-1})-1, 2k_j - 1)
/// per composition (k_1, ..., k_j) of r, sign (-1)^{j-1}, the whole sum
/// multiplied by (-1)^{r+1}. Throws std::domain_error unless 1 <= r <= n.
CnrValue cnr_recursive(unsigned n, unsigned r);

/// The printed binomial-product formulas for r = 1..4. Throws
/// std::domain_error for r outside 1..min(n, 4).
BigInt cnr_closed(unsigned n, unsigned r);

/// Signed coefficients c_r (r = 1..n) of a_{2(n-r)} obtained by applying (*)
/// and substituting (*) again for every odd-index ratio until only even
/// indices remain. Independent of the nested-sum enumeration above.
std::vector<BigInt> relation26_elimination(unsigned n);

/// Table of C_{n,r} for 1 <= r <= n <= max_n.
class CnrTable {
public:
    explicit CnrTable(unsigned max_n);

    unsigned max_n() const { return max_n_; }
    const CnrValue& at(unsigned n, unsigned r) const;
    /// Rows {"n", "r", "value", "terms"} in (n, r) order.
    Json to_json() const;

private:
    unsigned max_n_;
    std::map<std::pair<unsigned, unsigned>, CnrValue> entries_;
};

/// Checks the collapsed form against the elimination route for one n:
/// signed coefficients agree, every C_{n,r} > 0 and the term counts are
/// 2^{r-1}. The coefficients are recorded in the report parameters.
VerificationReport verify_eq28_equivalence(unsigned n);

/// cnr_recursive == cnr_closed for n <= max_n, r <= min(n, 4).
VerificationReport verify_cnr_closed(unsigned max_n);

enum class RatioFamily { T, F };

/// (*) at `trials` random positive rational points with m coordinates,
/// where g is eval_T_direct (T) or eval_f (F). n > m/2 still runs but is
/// flagged with params.range = "outside".
VerificationReport verify_relation26(RatioFamily family, unsigned n, unsigned m, std::uint64_t seed,
                                     unsigned trials);

}  // namespace sympoly
