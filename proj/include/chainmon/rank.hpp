// Minimal generating sets of IM_n and PIM_n, the factorization identities
// behind them, and two certification routes for the rank claims: an
// exhaustive subset search (every smaller subset fails to generate) and a
// structural check of the computable proof ingredients.

#ifndef CHAINMON_RANK_HPP_
#define CHAINMON_RANK_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainmon/transformation.hpp"

namespace chainmon {

/// Default cap on the number of closure runs an exhaustive certification
/// may attempt; C(|M|, rank-1) beyond this is refused with a guard_error.
inline constexpr std::uint64_t kDefaultSubsetSearchCap = 30'000'000;

/// The standard generating set of IM_n for n >= 3:
/// {c_1, ..., c_{floor(n/2)}, h}. Throws for n < 3 (use
/// small_case_generators there).
std::vector<PartialTransformation> im_standard_generators(int n);

/// The standard generating set of PIM_n for n >= 3:
/// {c_1, ..., c_{floor(n/2)}, e_{n-1}, h}. Throws for n < 3.
std::vector<PartialTransformation> pim_standard_generators(int n);

/// Hard-coded minimum generating sets for n in {1, 2}. IM_1 is trivial and
/// generated by the empty set. Throws for other n or families other than
/// IM / PIM.
std::vector<PartialTransformation> small_case_generators(Family f, int n);

/// Dispatches between the standard sets (n >= 3) and the small-case
/// tables (n <= 2) for IM / PIM.
std::vector<PartialTransformation> minimal_generators(Family f, int n);

/// Letter names matching minimal_generators, e.g. {"c1", "c2", "h"}.
std::vector<std::string> minimal_generator_names(Family f, int n);

/// The claimed rank: floor(n/2) + 1 for IM_n and floor(n/2) + 2 for PIM_n
/// when n >= 3, with the small cases rank(IM_1) = 0, rank(IM_2) = 2,
/// rank(PIM_1) = 1, rank(PIM_2) = 3.
int expected_rank(Family f, int n);

/// Verifies, for n >= 3, the identities that reduce the a/b generators to
/// the standard set: b_{n-1} = c_1 h, a_i = h c_i and a_{n-i} = c_i c_1
/// for 1 <= i <= floor(n/2), and f_2 = h e_{n-1} h. Returns the failing
/// identities (empty means all hold).
std::vector<std::string> check_generator_factorizations(int n);

struct RankCertificate {
  Family family = Family::IM;
  int n = 0;
  int claimed_rank = 0;
  std::string method;  // "exhaustive" or "structural"
  std::vector<PartialTransformation> upper_bound_set;
  bool upper_bound_generates = false;
  /// Exhaustive route: largest subset size proven insufficient
  /// (claimed_rank - 1; absent when the claimed rank is 0 and there is
  /// nothing to exhaust).
  std::optional<int> exhausted_size;
  std::uint64_t search_space = 0;    // subsets within the pruned space
  std::uint64_t subsets_tested = 0;  // closures actually run
  std::size_t monoid_size = 0;
  /// Structural route: named proof-ingredient checks with outcomes.
  std::vector<std::pair<std::string, bool>> clauses;
  /// A generating subset of size claimed_rank - 1, if one was found
  /// (which refutes the claim).
  std::optional<std::vector<PartialTransformation>> counterexample;
  bool valid = false;
  double wall_seconds = 0.0;
};

/// Certifies rank(f, n) exhaustively: the minimal generating set is
/// checked as an upper bound, and every subset of size claimed_rank - 1 is
/// shown not to generate. Subsets whose members all have image size below
/// n - 1 are skipped: composition cannot increase image size, so no such
/// subset reaches the elements of image size n - 1 (this premise is itself
/// covered by tests). Throws guard_error when the search space exceeds
/// `cap`. `threads` <= 0 picks the hardware concurrency.
RankCertificate certify_rank_exhaustive(
    Family f, int n, std::uint64_t cap = kDefaultSubsetSearchCap,
    int threads = 0);

/// Certifies the computable lower-bound ingredients used by the rank
/// arguments, for n >= 3:
///   (1) the elements of image size n are exactly {1_n, h}, which is <h>;
///   (2) the full elements of image size n-1 are exactly
///       {a_i, h a_i, a_i h, h a_i h : 1 <= i <= n-1};
///   (3) ker(a_i) = ker(a_i h) = pi_i and ker(h a_i) = ker(h a_i h) =
///       pi_{n-i};
///   (4) for every such element, kernel containment in some pi_i forces
///       kernel equality;
///   (5) every a_i and h a_i is a full transformation (and, for PIM, a
///       non-full element exists, so any generating set needs one).
/// This is a proof-ingredient check, not an independent lower-bound
/// search: the combinatorial argument threading the factorizations through
/// these ingredients is not mechanized. The upper bound is checked by
/// closure as in the exhaustive route.
RankCertificate certify_rank_structural(Family f, int n);

/// Certificate as a JSON document; wall-clock time is included only when
/// requested so that default output is reproducible byte for byte.
std::string rank_certificate_json(const RankCertificate& cert,
                                  bool include_timings = false);

}  // namespace chainmon

#endif  // CHAINMON_RANK_HPP_
