// Acceptance suite: every quantitative claim the library is expected to
// reproduce, one pass/fail line per criterion. Exits non-zero when any
// criterion fails.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chainmon/counting.hpp"
#include "chainmon/enumerate.hpp"
#include "chainmon/froidure_pin.hpp"
#include "chainmon/nilpotent.hpp"
#include "chainmon/presentation.hpp"
#include "chainmon/rank.hpp"
#include "chainmon/transformation.hpp"

namespace {

using namespace chainmon;

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what << std::endl;
  if (!ok) {
    ++failures;
  }
}

// -- criterion 1: the published table, closed forms vs construction --------

bool table_reproduction() {
  // The published reference table, asserted verbatim (36 equalities).
  constexpr std::int64_t kIm[] = {1,    4,    13,   36,    91,    218,
                                  505,  1144, 2551, 5622,  12277, 26612};
  constexpr std::int64_t kPim[] = {2,     9,     37,    123,   352,   913,
                                   2219,  5163,  11662, 25809, 56305,
                                   121579};
  constexpr std::int64_t kNPim[] = {1,    3,    11,   35,   95,   231,
                                    521,  1117, 2315, 4693, 9395, 18523};
  bool ok = true;
  auto check_entry = [&ok](const char* row, int n, std::int64_t published,
                           std::int64_t formula, std::int64_t enumerated) {
    if (formula != published || enumerated != published) {
      ok = false;
      std::cout << "  mismatch " << row << " at n = " << n << ": published "
                << published << ", closed form " << formula
                << ", enumerated " << enumerated << std::endl;
    }
  };
  for (int n = 1; n <= 12; ++n) {
    check_entry("|IM_n|", n, kIm[n - 1], card_im(n),
                static_cast<std::int64_t>(
                    enumerate_constructive(n, Family::IM).size()));
    check_entry("|PIM_n|", n, kPim[n - 1], card_pim(n),
                static_cast<std::int64_t>(
                    enumerate_constructive(n, Family::PIM).size()));
    check_entry("|N(PIM_n)|", n, kNPim[n - 1], card_n_pim(n),
                static_cast<std::int64_t>(enumerate_nilpotents(n).size()));
  }
  return ok;
}

// -- criterion 2: filter oracle vs constructive enumeration ----------------

bool oracle_equivalence() {
  const Family constructive[] = {Family::PIO, Family::IO,    Family::PIM,
                                 Family::IM,  Family::PIM_R, Family::IM_R};
  for (int n = 1; n <= 6; ++n) {
    for (Family f : constructive) {
      if (enumerate_filter(n, f) != enumerate_constructive(n, f)) {
        return false;
      }
    }
  }
  return true;
}

// -- criterion 3: the bijection and intersection identities ----------------

bool bijection_identities() {
  for (int n = 1; n <= 10; ++n) {
    auto reversing = enumerate_constructive(n, Family::PIM_R);
    auto preserving = enumerate_constructive(n, Family::PIO);
    if (reversing.size() != preserving.size()) {
      return false;
    }
    std::vector<PartialTransformation> meet;
    std::set_intersection(reversing.begin(), reversing.end(),
                          preserving.begin(), preserving.end(),
                          std::back_inserter(meet));
    if (static_cast<std::int64_t>(meet.size()) !=
        reversing_intersection_card(n)) {
      return false;
    }
    auto im_reversing = enumerate_constructive(n, Family::IM_R);
    auto io = enumerate_constructive(n, Family::IO);
    std::vector<PartialTransformation> full_meet;
    std::set_intersection(im_reversing.begin(), im_reversing.end(),
                          io.begin(), io.end(),
                          std::back_inserter(full_meet));
    if (full_meet.size() != static_cast<std::size_t>(n)) {
      return false;
    }
  }
  return true;
}

// -- criterion 4: nilpotency of reversing elements is disjointness ---------

bool reversing_nilpotency_characterization() {
  for (int n = 1; n <= 7; ++n) {
    if (!disjointness_characterizes_reversing_nilpotents(n)) {
      return false;
    }
  }
  return true;
}

// -- criterion 5: per-domain counts and the collapsed sums -----------------

bool nilpotent_fine_structure() {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& row : reversing_nilpotents_by_domain(n)) {
      if (row.count != nilpotent_count_for_domain(n, row.j, row.r)) {
        return false;
      }
    }
  }
  for (int n = 1; n <= 12; ++n) {
    if (nilpotent_triple_sum(n) != nilpotent_triple_sum_mirror(n)) {
      return false;
    }
  }
  return true;
}

// -- criterion 6: generating sets and factorizations -----------------------

bool generating_sets() {
  for (int n = 3; n <= 10; ++n) {
    if (!closure_equals(im_standard_generators(n), n, Family::IM) ||
        !closure_equals(pim_standard_generators(n), n, Family::PIM)) {
      return false;
    }
  }
  for (int n = 3; n <= 12; ++n) {
    if (!check_generator_factorizations(n).empty()) {
      return false;
    }
  }
  return true;
}

// -- criterion 7: rank certificates ----------------------------------------

bool rank_certificates() {
  const int small_im_ranks[] = {0, 2};
  const int small_pim_ranks[] = {1, 3};
  for (int n = 1; n <= 2; ++n) {
    auto im = certify_rank_exhaustive(Family::IM, n);
    auto pim = certify_rank_exhaustive(Family::PIM, n);
    if (!im.valid || im.claimed_rank != small_im_ranks[n - 1] ||
        !pim.valid || pim.claimed_rank != small_pim_ranks[n - 1]) {
      return false;
    }
  }
  for (int n = 3; n <= 6; ++n) {
    auto cert = certify_rank_exhaustive(Family::IM, n);
    if (!cert.valid || cert.claimed_rank != n / 2 + 1) {
      return false;
    }
  }
  for (int n = 3; n <= 5; ++n) {
    auto cert = certify_rank_exhaustive(Family::PIM, n);
    if (!cert.valid || cert.claimed_rank != n / 2 + 2) {
      return false;
    }
  }
  for (int n = 3; n <= 10; ++n) {
    for (Family f : {Family::IM, Family::PIM}) {
      auto cert = certify_rank_structural(f, n);
      if (!cert.valid || cert.clauses.size() != 5) {
        return false;
      }
    }
  }
  return true;
}

// -- criterion 8: presentations --------------------------------------------

bool presentations() {
  for (int n = 2; n <= 10; ++n) {
    Alphabet d = pim_alphabet(n);
    Presentation p{d, reversal_relations(d, n).all()};
    if (!check_relations_hold(p, standard_assignment(d, n)).empty()) {
      return false;
    }
    Alphabet c = im_alphabet(n);
    Presentation q{c, reversal_relations(c, n).all()};
    if (!check_relations_hold(q, standard_assignment(c, n)).empty()) {
      return false;
    }
    for (int i = 1; i <= n - 1; ++i) {
      if (!chain_is_valid(reversal_conjugation_chain(n, i, false))) {
        return false;
      }
    }
    for (int i = 2; i <= n; ++i) {
      if (!chain_is_valid(reversal_conjugation_chain(n, i, true))) {
        return false;
      }
    }
    if (extend_presentation(im_extension_input(n)).canonical_size() !=
            static_cast<std::size_t>(card_im(n)) ||
        extend_presentation(pim_extension_input(n)).canonical_size() !=
            static_cast<std::size_t>(card_pim(n))) {
      return false;
    }
  }
  for (int n = 2; n <= 4; ++n) {
    auto table = froidure_pin(minimal_generators(Family::IM, n), n);
    auto size = fp_enumerate(machine_presentation(table),
                             static_cast<std::uint64_t>(card_im(n)) + 1);
    if (!size || *size != static_cast<std::uint64_t>(card_im(n))) {
      return false;
    }
  }
  for (int n = 2; n <= 3; ++n) {
    auto table = froidure_pin(minimal_generators(Family::PIM, n), n);
    auto size = fp_enumerate(machine_presentation(table),
                             static_cast<std::uint64_t>(card_pim(n)) + 1);
    if (!size || *size != static_cast<std::uint64_t>(card_pim(n))) {
      return false;
    }
  }
  for (int n = 2; n <= 100; ++n) {
    if (!presentation_size_claims(n).bookkeeping_ok) {
      return false;
    }
  }
  return true;
}

// -- criterion 9: nilpotents are not closed under products -----------------

bool nilpotent_nonclosure() {
  if (nonclosure_witness(1)) {
    return false;
  }
  for (int n = 2; n <= 8; ++n) {
    auto pair = nonclosure_witness(n);
    if (!pair) {
      return false;
    }
    auto product = pair->first * pair->second;
    if (!is_nilpotent(pair->first).nilpotent ||
        !is_nilpotent(pair->second).nilpotent ||
        !in_family(product, Family::PIM) ||
        is_nilpotent(product).nilpotent) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  report(1, "table reproduction for n = 1..12 (36 exact equalities)",
         table_reproduction());
  report(2, "filter oracle equals constructive enumeration for n = 1..6",
         oracle_equivalence());
  report(3, "bijection and intersection identities for n = 1..10",
         bijection_identities());
  report(4, "reversing nilpotency iff image misses domain, n = 1..7",
         reversing_nilpotency_characterization());
  report(5, "per-domain nilpotent counts and collapsed-sum symmetry",
         nilpotent_fine_structure());
  report(6, "standard sets generate and factorizations hold",
         generating_sets());
  report(7, "exhaustive and structural rank certificates",
         rank_certificates());
  report(8, "reversal relations, chains, canonical counts, round-trips, "
            "bookkeeping",
         presentations());
  report(9, "nilpotent non-closure witnesses for n = 2..8",
         nilpotent_nonclosure());

  if (failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " acceptance criteria failed" << std::endl;
  return 1;
}
