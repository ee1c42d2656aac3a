// Two independent routes to the elements of a family: brute-force
// filtration of all of PT_n (the oracle route, guarded), and direct
// construction by (domain interval, image interval, monotone surjection)
// which scales far beyond the oracle.

#ifndef CHAINMON_ENUMERATE_HPP_
#define CHAINMON_ENUMERATE_HPP_

#include <vector>

#include "chainmon/transformation.hpp"

namespace chainmon {

/// Hard guard for the filter oracle: |PT_n| = (n+1)^n grows too fast past
/// this point to be useful as an oracle.
inline constexpr int kFilterMaxChainSize = 6;

/// All of PT_n passing in_family(., f), by exhaustive filtration of the
/// (n+1)^n partial maps. Returns a canonically sorted vector. Throws a
/// guard_error for n > kFilterMaxChainSize.
std::vector<PartialTransformation> enumerate_filter(int n, Family f);

/// Direct enumeration for the interval families PIO, IO, PIM, IM, PIM_r,
/// IM_r: choose a domain interval, an image interval no larger than it,
/// and a monotone surjection between them (order-preserving surjections
/// correspond to compositions of the domain length into image-length
/// parts; order-reversing ones are their reversals, with constants counted
/// once since they are both). Partial families include the zero. Returns a
/// canonically sorted vector; throws std::invalid_argument for other
/// families.
std::vector<PartialTransformation> enumerate_constructive(int n, Family f);

/// True iff constructive enumeration is available for f.
bool constructive_supported(Family f);

}  // namespace chainmon

#endif  // CHAINMON_ENUMERATE_HPP_
