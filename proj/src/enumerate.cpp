#include "chainmon/enumerate.hpp"

#include <algorithm>

#include "chainmon/errors.hpp"

namespace chainmon {

std::vector<PartialTransformation> enumerate_filter(int n, Family f) {
  validate_chain_size(n);
  if (n > kFilterMaxChainSize) {
    throw guard_error("filter enumeration is guarded at n <= " +
                      std::to_string(kFilterMaxChainSize) +
                      " (|PT_n| = (n+1)^n); got n = " + std::to_string(n));
  }
  std::vector<PartialTransformation> out;
  // Odometer over the (n+1)^n dense image lists, 0 = undefined.
  std::vector<int> images(n, 0);
  while (true) {
    PartialTransformation t(n, images);
    if (in_family(t, f)) {
      out.push_back(std::move(t));
    }
    int pos = n - 1;
    while (pos >= 0 && images[pos] == n) {
      images[pos] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++images[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool constructive_supported(Family f) {
  switch (f) {
    case Family::PIO:
    case Family::IO:
    case Family::PIM:
    case Family::IM:
    case Family::PIM_R:
    case Family::IM_R:
      return true;
    default:
      return false;
  }
}

namespace {

struct FamilyShape {
  bool preserving;    // include order-preserving surjections
  bool reversing;     // include order-reversing surjections
  bool full_only;     // domain restricted to the whole chain
  bool include_zero;  // adjoin the empty transformation
};

FamilyShape shape_of(Family f) {
  switch (f) {
    case Family::PIO:   return {true, false, false, true};
    case Family::IO:    return {true, false, true, false};
    case Family::PIM:   return {true, true, false, true};
    case Family::IM:    return {true, true, true, false};
    case Family::PIM_R: return {false, true, false, true};
    case Family::IM_R:  return {false, true, true, false};
    default:
      throw std::invalid_argument("constructive enumeration not available "
                                  "for family " + family_name(f));
  }
}

// Builds the monotone surjection of [dom_lo, dom_lo+r-1] onto
// [im_lo, im_lo+s-1] whose consecutive fibers have the given sizes; fibers
// take ascending image values when preserving, descending otherwise.
PartialTransformation from_fibers(int n, int dom_lo, int im_lo, int s,
                                  const std::vector<int>& fiber_sizes,
                                  bool preserving) {
  std::vector<int> img(n, 0);
  int x = dom_lo;
  for (int b = 0; b < s; ++b) {
    int value = preserving ? im_lo + b : im_lo + s - 1 - b;
    for (int k = 0; k < fiber_sizes[b]; ++k) {
      img[x - 1] = value;
      ++x;
    }
  }
  return PartialTransformation(n, img);
}

// Calls fn once per composition of r into s positive parts.
template <typename Fn>
void for_each_composition(int r, int s, Fn&& fn) {
  std::vector<int> parts(s);
  auto rec = [&](auto&& self, int b, int remaining) -> void {
    if (b == s - 1) {
      parts[b] = remaining;
      fn(parts);
      return;
    }
    for (int v = 1; remaining - v >= s - 1 - b; ++v) {
      parts[b] = v;
      self(self, b + 1, remaining - v);
    }
  };
  rec(rec, 0, r);
}

}  // namespace

std::vector<PartialTransformation> enumerate_constructive(int n, Family f) {
  validate_chain_size(n);
  const FamilyShape shape = shape_of(f);
  std::vector<PartialTransformation> out;

  const int r_lo = shape.full_only ? n : 1;
  for (int r = r_lo; r <= n; ++r) {
    for (int dom_lo = 1; dom_lo + r - 1 <= n; ++dom_lo) {
      for (int s = 1; s <= r; ++s) {
        for (int im_lo = 1; im_lo + s - 1 <= n; ++im_lo) {
          for_each_composition(r, s, [&](const std::vector<int>& parts) {
            if (s == 1) {
              // Constants are simultaneously preserving and reversing;
              // emit exactly once.
              out.push_back(from_fibers(n, dom_lo, im_lo, s, parts, true));
            } else {
              if (shape.preserving) {
                out.push_back(from_fibers(n, dom_lo, im_lo, s, parts, true));
              }
              if (shape.reversing) {
                out.push_back(from_fibers(n, dom_lo, im_lo, s, parts, false));
              }
            }
          });
        }
      }
    }
  }
  if (shape.include_zero) {
    out.push_back(PartialTransformation::zero(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chainmon
