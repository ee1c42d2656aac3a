// Nilpotency of elements of PIM_n relative to its zero (the empty
// transformation): the power-iteration test, the order-reversing
// characterization, exhaustive nilpotent enumeration and the non-closure
// witness search.

#ifndef CHAINMON_NILPOTENT_HPP_
#define CHAINMON_NILPOTENT_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chainmon/transformation.hpp"

namespace chainmon {

struct NilpotencyVerdict {
  bool nilpotent = false;
  /// Least k with t^k = zero, when nilpotent.
  std::optional<int> witness_power;
  /// Power at which a repeated non-zero value was seen, when not.
  std::optional<int> cycle_detected_at;
};

/// Power iteration with full memoization of seen powers: nilpotent iff the
/// zero appears before any repeat. No a-priori bound on the witness power
/// is assumed; termination is guaranteed because powers live in the finite
/// monoid PT_n.
NilpotencyVerdict is_nilpotent(const PartialTransformation& t);

/// Throws std::invalid_argument for families of full transformations,
/// which contain no zero and hence no nilpotents.
void require_zero_bearing_family(Family f);

/// True iff every order-reversing member of PIM_n is nilpotent exactly
/// when its image and domain are disjoint.
bool disjointness_characterizes_reversing_nilpotents(int n);

/// All nilpotent elements of PIM_n, canonically sorted.
std::vector<PartialTransformation> enumerate_nilpotents(int n);

struct DomainNilpotentCount {
  int j = 0;  // domain is [j, j+r-1]
  int r = 0;
  std::int64_t count = 0;
};

/// Non-null order-reversing nilpotents of PIM_n grouped by their (interval)
/// domain, ordered by (r, j). Domains with no such element are included
/// with count 0.
std::vector<DomainNilpotentCount> reversing_nilpotents_by_domain(int n);

/// For n >= 2, a pair of nilpotents of PIM_n whose product is not
/// nilpotent (the product stays in PIM_n, which is closed); nullopt for
/// n = 1, where the only nilpotent is the zero itself. The first pair in
/// canonical order is returned, so the result is deterministic.
std::optional<std::pair<PartialTransformation, PartialTransformation>>
nonclosure_witness(int n);

}  // namespace chainmon

#endif  // CHAINMON_NILPOTENT_HPP_
