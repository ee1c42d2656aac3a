#include "chainmon/nilpotent.hpp"

#include <algorithm>
#include <unordered_set>

#include "chainmon/enumerate.hpp"

namespace chainmon {

NilpotencyVerdict is_nilpotent(const PartialTransformation& t) {
  NilpotencyVerdict v;
  std::unordered_set<PartialTransformation> seen;
  PartialTransformation power = t;
  int k = 1;
  while (true) {
    if (power.is_zero()) {
      v.nilpotent = true;
      v.witness_power = k;
      return v;
    }
    if (!seen.insert(power).second) {
      v.nilpotent = false;
      v.cycle_detected_at = k;
      return v;
    }
    power = power * t;
    ++k;
  }
}

void require_zero_bearing_family(Family f) {
  if (family_is_full(f)) {
    throw std::invalid_argument(
        "family " + family_name(f) +
        " consists of full transformations and has no zero; nilpotency is "
        "only meaningful in the partial families");
  }
}

bool disjointness_characterizes_reversing_nilpotents(int n) {
  for (const auto& t : enumerate_constructive(n, Family::PIM_R)) {
    auto dom = t.domain();
    auto im = t.image();
    std::vector<ChainPoint> meet;
    std::set_intersection(im.begin(), im.end(), dom.begin(), dom.end(),
                          std::back_inserter(meet));
    if (is_nilpotent(t).nilpotent != meet.empty()) {
      return false;
    }
  }
  return true;
}

std::vector<PartialTransformation> enumerate_nilpotents(int n) {
  std::vector<PartialTransformation> out;
  for (const auto& t : enumerate_constructive(n, Family::PIM)) {
    if (is_nilpotent(t).nilpotent) {
      out.push_back(t);
    }
  }
  return out;  // already canonically sorted
}

std::vector<DomainNilpotentCount> reversing_nilpotents_by_domain(int n) {
  validate_chain_size(n);
  std::vector<DomainNilpotentCount> rows;
  if (n < 2) {
    return rows;  // no non-null nilpotents at n = 1
  }
  std::vector<std::vector<std::int64_t>> counts(
      n, std::vector<std::int64_t>(n + 2, 0));
  for (const auto& t : enumerate_constructive(n, Family::PIM_R)) {
    if (t.is_zero() || !is_nilpotent(t).nilpotent) {
      continue;
    }
    auto dom = t.domain();
    int j = dom.front();
    int r = static_cast<int>(dom.size());
    ++counts[r][j];
  }
  for (int r = 1; r <= n - 1; ++r) {
    for (int j = 1; j <= n - r + 1; ++j) {
      rows.push_back({j, r, counts[r][j]});
    }
  }
  return rows;
}

std::optional<std::pair<PartialTransformation, PartialTransformation>>
nonclosure_witness(int n) {
  auto nilpotents = enumerate_nilpotents(n);
  for (const auto& s : nilpotents) {
    for (const auto& t : nilpotents) {
      if (!is_nilpotent(s * t).nilpotent) {
        return std::make_pair(s, t);
      }
    }
  }
  return std::nullopt;
}

}  // namespace chainmon
