#include "chainmon/rank.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "json.hpp"

#include "chainmon/enumerate.hpp"
#include "chainmon/errors.hpp"
#include "chainmon/froidure_pin.hpp"

namespace chainmon {

namespace {

void require_im_or_pim(Family f) {
  if (f != Family::IM && f != Family::PIM) {
    throw std::invalid_argument("rank certification covers IM and PIM only, "
                                "got " + family_name(f));
  }
}

std::uint64_t binom_capped(std::uint64_t m, int k, std::uint64_t cap) {
  // C(m, k), saturating just above cap to avoid overflow.
  if (k < 0 || static_cast<std::uint64_t>(k) > m) {
    return 0;
  }
  __uint128_t acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (m - static_cast<std::uint64_t>(k) + i) / i;
    if (acc > 4 * __uint128_t(cap) + 1) {
      return cap + 1;
    }
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::vector<PartialTransformation> im_standard_generators(int n) {
  if (n < 3) {
    throw std::invalid_argument(
        "the standard IM generating set needs n >= 3; use "
        "small_case_generators for n <= 2");
  }
  std::vector<PartialTransformation> gens;
  for (int i = 1; i <= n / 2; ++i) {
    gens.push_back(generator(Gen::c, i, n));
  }
  gens.push_back(generator(Gen::h, 0, n));
  return gens;
}

std::vector<PartialTransformation> pim_standard_generators(int n) {
  if (n < 3) {
    throw std::invalid_argument(
        "the standard PIM generating set needs n >= 3; use "
        "small_case_generators for n <= 2");
  }
  std::vector<PartialTransformation> gens;
  for (int i = 1; i <= n / 2; ++i) {
    gens.push_back(generator(Gen::c, i, n));
  }
  gens.push_back(generator(Gen::e, n - 1, n));
  gens.push_back(generator(Gen::h, 0, n));
  return gens;
}

std::vector<PartialTransformation> small_case_generators(Family f, int n) {
  require_im_or_pim(f);
  if (n == 1) {
    if (f == Family::IM) {
      return {};  // IM_1 = {1_1} is generated by the empty set
    }
    return {PartialTransformation::zero(1)};
  }
  if (n == 2) {
    if (f == Family::IM) {
      return {PartialTransformation(2, {1, 1}),
              PartialTransformation(2, {2, 1})};
    }
    return {PartialTransformation(2, {1, 0}),
            PartialTransformation(2, {1, 1}),
            PartialTransformation(2, {2, 1})};
  }
  throw std::invalid_argument("small-case generating sets exist for n in "
                              "{1, 2} only, got n = " + std::to_string(n));
}

std::vector<PartialTransformation> minimal_generators(Family f, int n) {
  require_im_or_pim(f);
  validate_chain_size(n);
  if (n <= 2) {
    return small_case_generators(f, n);
  }
  return f == Family::IM ? im_standard_generators(n)
                         : pim_standard_generators(n);
}

std::vector<std::string> minimal_generator_names(Family f, int n) {
  require_im_or_pim(f);
  validate_chain_size(n);
  std::vector<std::string> names;
  if (n <= 2) {
    for (std::size_t i = 0; i < small_case_generators(f, n).size(); ++i) {
      names.push_back("g" + std::to_string(i + 1));
    }
    return names;
  }
  for (int i = 1; i <= n / 2; ++i) {
    names.push_back("c" + std::to_string(i));
  }
  if (f == Family::PIM) {
    names.push_back("e" + std::to_string(n - 1));
  }
  names.push_back("h");
  return names;
}

int expected_rank(Family f, int n) {
  require_im_or_pim(f);
  validate_chain_size(n);
  if (f == Family::IM) {
    if (n == 1) {
      return 0;
    }
    if (n == 2) {
      return 2;
    }
    return n / 2 + 1;
  }
  if (n == 1) {
    return 1;
  }
  if (n == 2) {
    return 3;
  }
  return n / 2 + 2;
}

std::vector<std::string> check_generator_factorizations(int n) {
  if (n < 3) {
    throw std::invalid_argument("factorization identities need n >= 3");
  }
  std::vector<std::string> failures;
  const auto h = generator(Gen::h, 0, n);
  const auto c1 = generator(Gen::c, 1, n);

  if (generator(Gen::b, n - 1, n) != c1 * h) {
    failures.push_back("b" + std::to_string(n - 1) + " = c1 h");
  }
  for (int i = 1; i <= n / 2; ++i) {
    const auto ci = generator(Gen::c, i, n);
    if (generator(Gen::a, i, n) != h * ci) {
      failures.push_back("a" + std::to_string(i) + " = h c" +
                         std::to_string(i));
    }
    if (generator(Gen::a, n - i, n) != ci * c1) {
      failures.push_back("a" + std::to_string(n - i) + " = c" +
                         std::to_string(i) + " c1");
    }
  }
  if (generator(Gen::f, 2, n) != h * generator(Gen::e, n - 1, n) * h) {
    failures.push_back("f2 = h e" + std::to_string(n - 1) + " h");
  }
  return failures;
}

namespace {

// Index-level closure test over a precomputed multiplication table. The
// workspace is reused across calls; only cells touched last time are
// cleared.
struct ClosureWorkspace {
  std::vector<std::uint8_t> seen;
  std::vector<std::uint32_t> stack;
  std::vector<std::uint32_t> members;
};

bool subset_generates(const std::vector<std::uint32_t>& mult, std::size_t m,
                      std::uint32_t identity_index,
                      const std::uint32_t* subset, int k,
                      ClosureWorkspace& ws) {
  for (std::uint32_t e : ws.members) {
    ws.seen[e] = 0;
  }
  ws.members.clear();
  ws.stack.clear();
  auto push = [&](std::uint32_t e) {
    if (!ws.seen[e]) {
      ws.seen[e] = 1;
      ws.members.push_back(e);
      ws.stack.push_back(e);
    }
  };
  push(identity_index);
  for (int i = 0; i < k; ++i) {
    push(subset[i]);
  }
  while (!ws.stack.empty()) {
    std::uint32_t s = ws.stack.back();
    ws.stack.pop_back();
    const std::uint32_t* row = mult.data() + static_cast<std::size_t>(s) * m;
    for (int i = 0; i < k; ++i) {
      push(row[subset[i]]);
    }
    if (ws.members.size() == m) {
      return true;
    }
  }
  return ws.members.size() == m;
}

bool upper_bound_generates(const std::vector<PartialTransformation>& gens,
                           int n,
                           const std::vector<PartialTransformation>& universe) {
  if (gens.empty()) {
    // The empty set generates the trivial monoid.
    return universe.size() == 1 && universe[0].is_identity();
  }
  MonoidTable table = froidure_pin(gens, n);
  std::vector<PartialTransformation> closure = table.elements;
  std::sort(closure.begin(), closure.end());
  return closure == universe;
}

}  // namespace

RankCertificate certify_rank_exhaustive(Family f, int n, std::uint64_t cap,
                                        int threads) {
  require_im_or_pim(f);
  validate_chain_size(n);
  const auto t0 = std::chrono::steady_clock::now();

  RankCertificate cert;
  cert.family = f;
  cert.n = n;
  cert.method = "exhaustive";
  cert.claimed_rank = expected_rank(f, n);
  cert.upper_bound_set = minimal_generators(f, n);

  std::vector<PartialTransformation> universe = enumerate_constructive(n, f);
  cert.monoid_size = universe.size();
  cert.upper_bound_generates =
      upper_bound_generates(cert.upper_bound_set, n, universe);

  const int k = cert.claimed_rank - 1;
  const std::size_t m = universe.size();

  if (k < 0) {
    // Rank 0: there are no smaller subsets; the lower bound is vacuous.
    cert.valid = cert.upper_bound_generates;
    cert.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return cert;
  }

  const std::uint64_t full_space = binom_capped(m, k, cap);
  if (full_space > cap) {
    throw guard_error(
        "exhaustive rank certification for " + family_name(f) + "_" +
        std::to_string(n) + " needs C(" + std::to_string(m) + ", " +
        std::to_string(k) + ") closure runs, above the cap of " +
        std::to_string(cap) + "; use the structural method instead");
  }

  // Reorder the universe so the elements of image size >= n-1 come first;
  // a generating subset must contain one of them, so only combinations
  // whose least index falls in that prefix are enumerated.
  std::vector<std::uint32_t> order;
  order.reserve(m);
  std::size_t high_count = 0;
  for (std::uint32_t e = 0; e < m; ++e) {
    if (universe[e].image_size() + 1 >= static_cast<std::size_t>(n)) {
      order.push_back(e);
      ++high_count;
    }
  }
  for (std::uint32_t e = 0; e < m; ++e) {
    if (universe[e].image_size() + 1 < static_cast<std::size_t>(n)) {
      order.push_back(e);
    }
  }
  // The empty subset is always evaluated (its closure is the trivial
  // monoid); for k >= 1 only combinations meeting the high-image prefix
  // are enumerated.
  cert.search_space =
      k == 0 ? 1 : full_space - binom_capped(m - high_count, k, cap);

  // Index-level multiplication table over the reordered universe.
  std::vector<std::uint32_t> mult(m * m);
  {
    std::unordered_map<PartialTransformation, std::uint32_t> pos;
    pos.reserve(m * 2);
    for (std::uint32_t e = 0; e < m; ++e) {
      pos.emplace(universe[order[e]], e);
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        mult[a * m + b] =
            pos.at(universe[order[a]] * universe[order[b]]);
      }
    }
  }
  std::uint32_t identity_index = 0;
  for (std::uint32_t e = 0; e < m; ++e) {
    if (universe[order[e]].is_identity()) {
      identity_index = e;
      break;
    }
  }

  std::atomic<std::uint64_t> tested{0};
  std::atomic<bool> refuted{false};
  std::atomic<std::uint32_t> next_first{0};
  std::mutex counterexample_mutex;
  std::optional<std::vector<std::uint32_t>> counterexample;

  const std::uint32_t first_limit =
      k == 0 ? 1 : static_cast<std::uint32_t>(high_count);

  auto worker = [&]() {
    ClosureWorkspace ws;
    ws.seen.assign(m, 0);
    std::vector<std::uint32_t> subset(static_cast<std::size_t>(k) + 1);
    std::uint64_t local_tested = 0;
    while (!refuted.load(std::memory_order_relaxed)) {
      std::uint32_t first = next_first.fetch_add(1);
      if (first >= first_limit) {
        break;
      }
      if (k == 0) {
        // Only the empty subset; its closure is the trivial monoid.
        ++local_tested;
        if (subset_generates(mult, m, identity_index, subset.data(), 0, ws)) {
          std::lock_guard<std::mutex> lock(counterexample_mutex);
          counterexample = std::vector<std::uint32_t>{};
          refuted = true;
        }
        continue;
      }
      subset[0] = first;
      auto rec = [&](auto&& self, int depth, std::uint32_t lo) -> void {
        if (refuted.load(std::memory_order_relaxed)) {
          return;
        }
        if (depth == k) {
          ++local_tested;
          if (subset_generates(mult, m, identity_index, subset.data(), k,
                               ws)) {
            std::lock_guard<std::mutex> lock(counterexample_mutex);
            std::vector<std::uint32_t> found(subset.begin(),
                                             subset.begin() + k);
            if (!counterexample || found < *counterexample) {
              counterexample = std::move(found);
            }
            refuted = true;
          }
          return;
        }
        for (std::uint32_t e = lo; e < m; ++e) {
          subset[depth] = e;
          self(self, depth + 1, e + 1);
        }
      };
      rec(rec, 1, first + 1);
    }
    tested.fetch_add(local_tested);
  };

  int thread_count = threads > 0
                         ? threads
                         : static_cast<int>(std::max(
                               1u, std::thread::hardware_concurrency()));
  thread_count = std::min<int>(thread_count, std::max<int>(1, first_limit));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (int t = 0; t < thread_count; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  cert.subsets_tested = tested.load();
  if (counterexample) {
    std::vector<PartialTransformation> refuting;
    for (std::uint32_t e : *counterexample) {
      refuting.push_back(universe[order[e]]);
    }
    cert.counterexample = std::move(refuting);
  }
  if (cert.claimed_rank >= 1) {
    cert.exhausted_size = k;
  }
  cert.valid = cert.upper_bound_generates && !cert.counterexample;
  cert.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return cert;
}

RankCertificate certify_rank_structural(Family f, int n) {
  require_im_or_pim(f);
  if (n < 3) {
    throw std::invalid_argument(
        "structural certification needs n >= 3; the small cases are "
        "certified exhaustively");
  }
  const auto t0 = std::chrono::steady_clock::now();

  RankCertificate cert;
  cert.family = f;
  cert.n = n;
  cert.method = "structural";
  cert.claimed_rank = expected_rank(f, n);
  cert.upper_bound_set = minimal_generators(f, n);

  std::vector<PartialTransformation> universe = enumerate_constructive(n, f);
  cert.monoid_size = universe.size();
  cert.upper_bound_generates =
      upper_bound_generates(cert.upper_bound_set, n, universe);

  const auto id = PartialTransformation::identity(n);
  const auto h = generator(Gen::h, 0, n);

  // (1) Elements of image size n are exactly {1_n, h} = <h>.
  {
    std::set<PartialTransformation> top;
    for (const auto& t : universe) {
      if (t.is_full() && t.image_size() == static_cast<std::size_t>(n)) {
        top.insert(t);
      }
    }
    bool ok = top == std::set<PartialTransformation>{id, h};
    MonoidTable h_closure = froidure_pin({h}, n);
    std::set<PartialTransformation> h_set(h_closure.elements.begin(),
                                          h_closure.elements.end());
    ok = ok && h_set == std::set<PartialTransformation>{id, h};
    cert.clauses.emplace_back("image-size-n elements are {1, h} = <h>", ok);
  }

  // (2) Full elements of image size n-1 are {a_i, h a_i, a_i h, h a_i h}.
  std::set<PartialTransformation> d_top_minus;
  // 1-based, a[i] = a_i; slot 0 is an unused placeholder.
  std::vector<PartialTransformation> a(static_cast<std::size_t>(n),
                                       PartialTransformation(n));
  {
    for (const auto& t : universe) {
      if (t.is_full() && t.image_size() == static_cast<std::size_t>(n - 1)) {
        d_top_minus.insert(t);
      }
    }
    std::set<PartialTransformation> constructed;
    for (int i = 1; i <= n - 1; ++i) {
      a[i] = generator(Gen::a, i, n);
      constructed.insert(a[i]);
      constructed.insert(h * a[i]);
      constructed.insert(a[i] * h);
      constructed.insert(h * a[i] * h);
    }
    bool ok = d_top_minus == constructed &&
              constructed.size() == static_cast<std::size_t>(4 * (n - 1));
    cert.clauses.emplace_back(
        "image-size-(n-1) full elements are {a_i, h a_i, a_i h, h a_i h}",
        ok);
  }

  // (3) Kernel identities for the four h-translates of each a_i.
  // Post-composition with the bijection h never changes a kernel, so the
  // translates pair up as a_i, a_i h (kernel pi_i) and h a_i, h a_i h
  // (kernel pi_{n-i}).
  {
    bool ok = true;
    for (int i = 1; i <= n - 1 && ok; ++i) {
      Partition pi = merged_pair_partition(i, n);
      Partition pi_mirror = merged_pair_partition(n - i, n);
      ok = kernel(a[i]) == pi && kernel(a[i] * h) == pi &&
           kernel(h * a[i]) == pi_mirror && kernel(h * a[i] * h) == pi_mirror;
    }
    cert.clauses.emplace_back(
        "ker(a_i) = ker(a_i h) = pi_i and ker(h a_i) = ker(h a_i h) = "
        "pi_{n-i}",
        ok);
  }

  // (4) Kernel containment forces equality on these elements.
  {
    bool ok = true;
    for (const auto& beta : d_top_minus) {
      Partition kb = kernel(beta);
      for (int i = 1; i <= n - 1; ++i) {
        Partition pi = merged_pair_partition(i, n);
        if (refines(kb, pi) && kb != pi) {
          ok = false;
        }
      }
    }
    cert.clauses.emplace_back(
        "kernel containment in pi_i forces kernel equality", ok);
  }

  // (5) Fullness of the words' leading factors; for PIM also the
  // existence of a non-full element.
  {
    bool ok = true;
    for (int i = 1; i <= n - 1; ++i) {
      ok = ok && a[i].is_full() && (h * a[i]).is_full();
    }
    if (f == Family::PIM) {
      bool has_non_full = false;
      for (const auto& t : universe) {
        if (!t.is_full()) {
          has_non_full = true;
          break;
        }
      }
      ok = ok && has_non_full;
    }
    cert.clauses.emplace_back(
        "a_i and h a_i are full" +
            std::string(f == Family::PIM ? "; a non-full element exists"
                                         : ""),
        ok);
  }

  bool all_clauses = true;
  for (const auto& [name, ok] : cert.clauses) {
    all_clauses = all_clauses && ok;
  }
  cert.valid = all_clauses && cert.upper_bound_generates;
  cert.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return cert;
}

std::string rank_certificate_json(const RankCertificate& cert,
                                  bool include_timings) {
  nlohmann::ordered_json obj;
  obj["family"] = family_name(cert.family);
  obj["n"] = cert.n;
  obj["claimed_rank"] = cert.claimed_rank;
  obj["method"] = cert.method;
  obj["monoid_size"] = cert.monoid_size;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : cert.upper_bound_set) {
    gens.push_back(to_two_row(g));
  }
  obj["upper_bound_set"] = std::move(gens);
  obj["upper_bound_generates"] = cert.upper_bound_generates;
  if (cert.method == "exhaustive") {
    if (cert.exhausted_size) {
      obj["exhausted_size"] = *cert.exhausted_size;
    } else {
      obj["exhausted_size"] = nullptr;
    }
    obj["search_space"] = cert.search_space;
    obj["subsets_tested"] = cert.subsets_tested;
    if (cert.counterexample) {
      nlohmann::ordered_json ce = nlohmann::ordered_json::array();
      for (const auto& t : *cert.counterexample) {
        ce.push_back(to_two_row(t));
      }
      obj["counterexample"] = std::move(ce);
    }
  } else {
    nlohmann::ordered_json clauses = nlohmann::ordered_json::array();
    for (const auto& [name, ok] : cert.clauses) {
      clauses.push_back({{"check", name}, {"ok", ok}});
    }
    obj["clauses"] = std::move(clauses);
  }
  obj["valid"] = cert.valid;
  if (include_timings) {
    obj["wall_seconds"] = cert.wall_seconds;
  }
  return obj.dump(2) + "\n";
}

}  // namespace chainmon
