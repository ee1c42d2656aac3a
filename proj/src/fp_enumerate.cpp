// Bounded enumeration of a finitely presented monoid: a coset-style
// congruence enumeration over the free monoid. Classes of the congruence
// generated by the relations are table rows; tracing every relation from
// every live class and merging the resulting coincidences drives the table
// to closure. When the table closes the live row count is exactly
// |A* / ~R|; relation tracing from a class enforces u ~ v in every left
// context reaching it, and determinism of the table handles right
// contexts, so the enumeration is sound. For a finite quotient the
// strategy terminates; the node budget turns pathological intermediate
// growth into an explicit "bound exceeded" answer instead of a stall.

#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "chainmon/presentation.hpp"

namespace chainmon {

namespace {

constexpr std::int32_t kUndefined = -1;

class CongruenceTable {
 public:
  CongruenceTable(std::size_t letters, std::uint64_t max_nodes)
      : letters_(letters), max_nodes_(max_nodes) {
    new_node();
  }

  // False when the node budget is exhausted.
  bool closed_under(const std::vector<Relation>& relations) {
    for (std::size_t idx = 0; idx < parent_.size(); ++idx) {
      if (find(static_cast<std::int32_t>(idx)) !=
              static_cast<std::int32_t>(idx) ||
          processed_[idx]) {
        continue;
      }
      std::int32_t cur = static_cast<std::int32_t>(idx);
      for (const auto& [lhs, rhs] : relations) {
        cur = find(cur);
        std::int32_t p = trace_define(cur, lhs);
        if (p == kUndefined) {
          return false;
        }
        std::int32_t q = trace_define(find(cur), rhs);
        if (q == kUndefined) {
          return false;
        }
        merge(p, q);
        settle_coincidences();
      }
      cur = find(cur);
      for (std::size_t x = 0; x < letters_; ++x) {
        if (cell(cur, x) == kUndefined) {
          std::int32_t fresh = new_node();
          if (fresh == kUndefined) {
            return false;
          }
          cell(cur, x) = fresh;
        }
      }
      processed_[static_cast<std::size_t>(find(cur))] = true;
    }
    return true;
  }

  std::uint64_t live_count() const { return live_; }

 private:
  std::int32_t new_node() {
    if (parent_.size() >= max_nodes_) {
      return kUndefined;
    }
    parent_.push_back(static_cast<std::int32_t>(parent_.size()));
    processed_.push_back(false);
    table_.resize(table_.size() + letters_, kUndefined);
    ++live_;
    return parent_.back();
  }

  std::int32_t& cell(std::int32_t node, std::size_t letter) {
    return table_[static_cast<std::size_t>(node) * letters_ + letter];
  }

  std::int32_t find(std::int32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::int32_t trace_define(std::int32_t start, const Word& w) {
    std::int32_t cur = find(start);
    for (Letter l : w) {
      std::int32_t next = cell(cur, l);
      if (next == kUndefined) {
        // new_node() may reallocate the table; write through a fresh
        // reference afterwards.
        std::int32_t fresh = new_node();
        if (fresh == kUndefined) {
          return kUndefined;
        }
        cell(cur, l) = fresh;
        next = fresh;
      }
      cur = find(next);
    }
    return cur;
  }

  void merge(std::int32_t p, std::int32_t q) {
    p = find(p);
    q = find(q);
    if (p == q) {
      return;
    }
    coincidences_.emplace_back(p, q);
  }

  void settle_coincidences() {
    while (!coincidences_.empty()) {
      auto [p, q] = coincidences_.front();
      coincidences_.pop_front();
      p = find(p);
      q = find(q);
      if (p == q) {
        continue;
      }
      // The smaller id survives, so node 0 (the identity class) is stable.
      if (q < p) {
        std::swap(p, q);
      }
      parent_[q] = p;
      --live_;
      processed_[static_cast<std::size_t>(p)] =
          processed_[static_cast<std::size_t>(p)] ||
          processed_[static_cast<std::size_t>(q)];
      for (std::size_t x = 0; x < letters_; ++x) {
        std::int32_t from_q = cell(q, x);
        if (from_q == kUndefined) {
          continue;
        }
        std::int32_t& into_p = cell(p, x);
        if (into_p == kUndefined) {
          into_p = from_q;
        } else {
          merge(into_p, from_q);
        }
      }
    }
  }

  std::size_t letters_;
  std::uint64_t max_nodes_;
  std::uint64_t live_ = 0;
  std::vector<std::int32_t> parent_;
  std::vector<bool> processed_;
  std::vector<std::int32_t> table_;
  std::deque<std::pair<std::int32_t, std::int32_t>> coincidences_;
};

}  // namespace

std::optional<std::uint64_t> fp_enumerate(const Presentation& p,
                                          std::uint64_t size_bound,
                                          std::uint64_t max_nodes) {
  if (size_bound < 1) {
    throw std::invalid_argument("size_bound must be >= 1");
  }
  p.validate();
  if (max_nodes == 0) {
    max_nodes = std::max<std::uint64_t>(4096, 64 * size_bound);
    max_nodes = std::min<std::uint64_t>(max_nodes, std::uint64_t(1) << 22);
  }
  if (max_nodes > static_cast<std::uint64_t>(
                      std::numeric_limits<std::int32_t>::max())) {
    throw std::invalid_argument("node budget too large for 32-bit indices");
  }

  CongruenceTable table(p.alphabet.size(), max_nodes);
  if (!table.closed_under(p.relations)) {
    return std::nullopt;  // budget exhausted before closure
  }
  std::uint64_t size = table.live_count();
  if (size > size_bound) {
    return std::nullopt;
  }
  return size;
}

}  // namespace chainmon
