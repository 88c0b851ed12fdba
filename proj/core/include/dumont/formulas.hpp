#pragma once

#include "dumont/permutation.hpp"
#include "dumont/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dumont {

// Identifies a closed-form generating function from the catalog. Some
// formulas are parameterized by a pattern length k (d-incr, d-213k, ...,
// triple-avoid, the statistic slices) or by an occurrence count r
// (explicit-123-r and friends); the unused parameter must stay empty.
struct FormulaId {
  std::string name;
  std::optional<int> k;
  std::optional<int> r;
};

// Names accepted by formula(), in catalog order.
const std::vector<std::string>& formula_names();
bool is_known_formula(const std::string& name);

// Expands the requested formula to `order`. Throws std::invalid_argument for
// unknown names or parameters outside the formula's valid range.
//
// Catalog (D = count series of the matching 132-avoiding Dumont family):
//   d-empty                (1+x) C(x^2)
//   d-incr k>=1            F_k + x F_{k-1}          avoid 1-2-...-k
//   d-213k k>=2            G_{k-1} + x G_{k-2}      avoid 2-1-3-...-k
//   d-gen-12-3k k>=1       F_k + x F_{k-1}          avoid 12-3-...-k
//   d-gen-21-3k k>=2       G_{k-1} + x G_{k-2}      avoid 21-3-...-k
//   d-23k1 k>=3            1 + x + x^2(1+x) / (1 - x^2 - x^2 F_{k-3})
//   contain-once-incr k>=2        A_k + x A_{k-1} over F, A_1=0, A_2=x^4
//   contain-once-213k k>=2        over G, A_1=A_2=x^2, A_3=x^4/(1-x^2)
//   contain-once-gen-12-3k k>=2   over F, A_1=x^2, A_2=2x^4
//   contain-once-gen-21-3k k>=2   over G, A_1=A_2=x^2, A_3=x^4/(1-x^2),
//                                 A_4=x^6(2-x^2)/(1-x^2)^3
//   explicit-123-r r=0..4         published expansions, encoded verbatim
//   explicit-12-3-r r=0..4        (including their suspected misprints;
//   explicit-21-3-r r=0..4         the verifier reports any oracle mismatch)
//   triple-avoid k>=2             G_{k-1} + x G_{k-2}
//   rlm-slice k, rises-slice k, descents-slice k   statistic_gf below
TruncatedSeries formula(const FormulaId& id, int order);

// Generating function of the 132-avoiding Dumont permutations whose
// statistic equals k (one slice of the bivariate refinement):
//   rlm:       1 (k=0), x C(x^2) (k=1), x^{2k-2} C(x^2)^{k-1} (k>=2)
//   rises:     1 + x + x^2 (k=0), C_k x^{2k+1} + C_{k+1} x^{2k+2} (k>=1)
//   descents:  C_k x^{2k} + C_k x^{2k+1}   [y^k slice of (1+x) C(x^2 y)]
TruncatedSeries statistic_gf(Statistic s, int k, int order);

} // namespace dumont
