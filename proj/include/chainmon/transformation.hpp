// Partial transformations of the finite chain {1 < 2 < ... < n}:
// composition, monotonicity predicates, interval tests, kernels and the
// standard generator families used throughout this library.

#ifndef CHAINMON_TRANSFORMATION_HPP_
#define CHAINMON_TRANSFORMATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainmon {

class PartialTransformation;

// Chain points are 1-based; 0 is reserved internally for "undefined".
using ChainPoint = int;

// Largest supported chain size for concrete transformations. Counting
// functions are not subject to this limit.
inline constexpr int kMaxChainSize = 255;

// Throws std::invalid_argument unless 1 <= n <= kMaxChainSize.
void validate_chain_size(int n);

/// The transformation families handled by this library. The *_R variants
/// are the order-reversing members of PIM / IM.
enum class Family {
  PT,     ///< all partial transformations
  T,      ///< all full transformations
  PO,     ///< order-preserving partial
  O,      ///< order-preserving full
  PM,     ///< monotone partial
  M,      ///< monotone full
  PIO,    ///< order-preserving partial, interval domain and image
  IO,     ///< order-preserving full, interval image
  PIM,    ///< monotone partial, interval domain and image
  IM,     ///< monotone full, interval image
  PIM_R,  ///< order-reversing members of PIM
  IM_R,   ///< order-reversing members of IM
};

inline constexpr Family kAllFamilies[] = {
    Family::PT,  Family::T,  Family::PO,  Family::O,
    Family::PM,  Family::M,  Family::PIO, Family::IO,
    Family::PIM, Family::IM, Family::PIM_R, Family::IM_R};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Families all of whose members are full transformations.
bool family_is_full(Family f);

/// A partial self-map of {1..n}, stored densely: entry i-1 holds the image
/// of i, or 0 when i is outside the domain. Products compose left to
/// right: x(s * t) = (x s) t. Values are immutable after construction.
class PartialTransformation {
 public:
  /// The empty transformation (zero) on a chain of size n.
  explicit PartialTransformation(int n);

  /// From a dense image list; images[i] is the image of point i+1 and 0
  /// means undefined. Throws if a defined image is outside {1..n}.
  PartialTransformation(int n, const std::vector<int>& images);

  static PartialTransformation identity(int n);
  static PartialTransformation zero(int n);
  /// The order-two permutation i |-> n + 1 - i.
  static PartialTransformation reversal(int n);

  int degree() const { return n_; }

  bool defined_at(ChainPoint x) const { return img_[x - 1] != 0; }

  /// Image of x, or nullopt when x is outside the domain. x must be in
  /// {1..n}.
  std::optional<ChainPoint> apply(ChainPoint x) const {
    auto y = img_[x - 1];
    if (y == 0) {
      return std::nullopt;
    }
    return static_cast<ChainPoint>(y);
  }

  std::vector<ChainPoint> domain() const;
  std::vector<ChainPoint> image() const;  // sorted, without duplicates
  std::size_t domain_size() const;
  std::size_t image_size() const;
  bool is_full() const { return domain_size() == static_cast<std::size_t>(n_); }
  bool is_zero() const { return domain_size() == 0; }
  bool is_identity() const;

  /// Left-to-right product: x(s * t) = (x s) t, defined exactly when x s
  /// is defined and lies in the domain of t. Throws on mismatched degree.
  PartialTransformation operator*(const PartialTransformation& rhs) const;

  bool operator==(const PartialTransformation& rhs) const {
    return n_ == rhs.n_ && img_ == rhs.img_;
  }
  bool operator!=(const PartialTransformation& rhs) const {
    return !(*this == rhs);
  }

  /// Total order used for canonical element ordering: lexicographic on the
  /// dense image list with undefined < 1 < ... < n. Degrees must match for
  /// the order to be meaningful; shorter degree compares first.
  bool operator<(const PartialTransformation& rhs) const {
    if (n_ != rhs.n_) {
      return n_ < rhs.n_;
    }
    return img_ < rhs.img_;
  }

  const std::vector<std::uint8_t>& raw() const { return img_; }

 private:
  int n_;
  std::vector<std::uint8_t> img_;
};

std::ostream& operator<<(std::ostream& os, const PartialTransformation& t);

/// Two-row notation, e.g. "[1 2 3 / 1 1 2]" with "-" for undefined.
std::string to_two_row(const PartialTransformation& t);

/// Inverse of to_two_row. The top row must be exactly 1..n. Throws
/// std::invalid_argument on malformed input.
PartialTransformation parse_two_row(const std::string& text);

/// True iff S (a sorted or unsorted subset of {1..n}) is an interval of the
/// chain. The empty set counts as an interval, so the zero transformation
/// has interval domain and image.
bool is_interval(const std::vector<ChainPoint>& points, int n);

// Monotonicity predicates quantify over pairs x < y in the domain, so any
// transformation with at most one domain point is both preserving and
// reversing.
bool is_order_preserving(const PartialTransformation& t);
bool is_order_reversing(const PartialTransformation& t);
bool is_monotone(const PartialTransformation& t);

bool in_family(const PartialTransformation& t, Family f);

/// A partition of the domain of some transformation into disjoint blocks.
/// Normalized: blocks sorted internally and ordered by least element.
struct Partition {
  std::vector<std::vector<ChainPoint>> blocks;

  bool operator==(const Partition& rhs) const { return blocks == rhs.blocks; }
  bool operator!=(const Partition& rhs) const { return !(*this == rhs); }
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// The kernel of t: domain points grouped by equal image. Throws
/// std::invalid_argument when the domain is empty (the zero transformation
/// has no kernel).
Partition kernel(const PartialTransformation& t);

/// The partition of {1..n} whose only non-singleton block is {i, i+1}.
Partition merged_pair_partition(int i, int n);

/// True iff every block of p is contained in a block of q (p refines q as
/// an equivalence). Ground sets need not match; points of p missing from q
/// make the refinement false.
bool refines(const Partition& p, const Partition& q);

/// The named generator families. Index ranges: a, b, e: 1 <= i <= n-1;
/// c: 1 <= i <= floor(n/2); f: 2 <= i <= n. The index is ignored for
/// h / id / zero. Out-of-range indices throw std::invalid_argument.
enum class Gen { a, b, c, e, f, h, id, zero };

PartialTransformation generator(Gen kind, int i, int n);

}  // namespace chainmon

namespace std {

template <>
struct hash<chainmon::PartialTransformation> {
  std::size_t operator()(const chainmon::PartialTransformation& t) const {
    const auto& v = t.raw();
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(v.data()), v.size()));
  }
};

}  // namespace std

#endif  // CHAINMON_TRANSFORMATION_HPP_
