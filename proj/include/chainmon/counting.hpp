// Closed-form counting functions for the interval families, evaluated in
// exact integer arithmetic (128-bit internally, with an overflow check on
// the way out).

#ifndef CHAINMON_COUNTING_HPP_
#define CHAINMON_COUNTING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chainmon {

/// Exact binomial coefficient; 0 when b < 0 or b > a.
std::int64_t binomial(int a, int b);

std::int64_t card_pim(int n);    // (n+3)*2^(n+1) - (n^3+5n^2+12n+10)/2
std::int64_t card_im(int n);     // (n+1)*2^(n-1) - n
std::int64_t card_pio(int n);    // (n+3)*2^n - n^2 - 3n - 2
std::int64_t card_io(int n);     // (n+1)*2^(n-2); n = 1 is the special case 1
std::int64_t card_n_pio(int n);  // 2^(n+2) - n^2 - 3n - 3
std::int64_t card_n_pim(int n);  // card_n_pio(n) + 2 * nilpotent_triple_sum(n)

/// |PIM_n^r ∩ PIO_n| = n^2(n+1)/2 + 1 (the constant maps plus the zero).
std::int64_t reversing_intersection_card(int n);

/// Number of non-empty intervals of the chain: n(n+1)/2.
std::int64_t interval_count(int n);

/// Number of non-null order-reversing nilpotent elements of PIM_n whose
/// domain is exactly [j, j+r-1]: the image interval sits entirely below j
/// or entirely above j+r-1, giving
///   sum_{k=1}^{j-1} (j-k) C(r-1, k-1)
///     + sum_{k=1}^{n-j-r+1} (n-j-r-k+2) C(r-1, k-1).
/// Requires 1 <= r <= n-1 and 1 <= j <= n-r+1.
std::int64_t nilpotent_count_for_domain(int n, int j, int r);

/// The triple sum sum_{r=2}^{n-2} sum_{j=1}^{n-r+1} sum_{k=2}^{j-1}
/// (j-k) C(r-1, k-1); empty ranges contribute 0.
std::int64_t nilpotent_triple_sum(int n);

/// The mirrored triple sum with inner term (n-j-r-k+2) C(r-1, k-1) over
/// k = 2 .. n-j-r+1; equal to nilpotent_triple_sum by symmetry.
std::int64_t nilpotent_triple_sum_mirror(int n);

/// One row of a counting comparison: a closed-form value next to the
/// values obtained by constructive enumeration and by the filter oracle,
/// when those routes were run.
struct CountReport {
  int n = 0;
  std::string family;  // family tag or count kind, e.g. "IM" or "N_PIM"
  std::int64_t formula = 0;
  std::optional<std::int64_t> enumerated;
  std::optional<std::int64_t> oracle;

  /// True when all present values agree.
  bool agree() const;
};

std::string count_reports_csv(const std::vector<CountReport>& rows);
std::string count_reports_json(const std::vector<CountReport>& rows);

}  // namespace chainmon

#endif  // CHAINMON_COUNTING_HPP_
