#ifndef CHAINMON_WORD_HPP_
#define CHAINMON_WORD_HPP_

#include <cstdint>
#include <vector>

namespace chainmon {

/// A word over some alphabet, stored as letter indices. The empty word is
/// the monoid identity.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Shortlex order: first by length, ties broken lexicographically by
/// letter index.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

}  // namespace chainmon

#endif  // CHAINMON_WORD_HPP_
