// Breadth-first closure of a generated transformation monoid: elements in
// shortlex word order, shortlex-least normal forms, and both Cayley graphs.

#ifndef CHAINMON_FROIDURE_PIN_HPP_
#define CHAINMON_FROIDURE_PIN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chainmon/transformation.hpp"
#include "chainmon/word.hpp"

namespace chainmon {

/// The result of closure enumeration. Element 0 is always the identity;
/// normal forms are the shortlex-least words over the generator alphabet
/// (in the order the generators were given) evaluating to each element.
struct MonoidTable {
  int n = 0;
  std::vector<PartialTransformation> elements;
  std::vector<PartialTransformation> generators;
  std::vector<std::string> generator_names;
  /// right_cayley[e][g] = index of elements[e] * generators[g].
  std::vector<std::vector<std::uint32_t>> right_cayley;
  /// left_cayley[e][g] = index of generators[g] * elements[e].
  std::vector<std::vector<std::uint32_t>> left_cayley;
  std::vector<Word> normal_forms;
  /// True when the identity was adjoined, i.e. it is not a product of one
  /// or more generators.
  bool identity_adjoined = false;

  std::size_t size() const { return elements.size(); }

  std::optional<std::uint32_t> index_of(const PartialTransformation& t) const;

  /// Evaluates a word over the generator alphabet; the empty word gives
  /// the identity.
  PartialTransformation evaluate(const Word& w) const;

  /// Renders a normal-form word with letter names, "1" for the empty word.
  std::string word_name(const Word& w) const;

 private:
  friend MonoidTable froidure_pin(const std::vector<PartialTransformation>&,
                                  int, std::vector<std::string>);
  std::unordered_map<PartialTransformation, std::uint32_t> index_;
};

/// Enumerates the monoid generated by `generators` (the identity is
/// adjoined when absent). Generators must be non-empty and of degree n;
/// duplicate generators are kept as distinct alphabet letters. `names`
/// optionally labels the letters (defaults to g1, g2, ...).
MonoidTable froidure_pin(const std::vector<PartialTransformation>& generators,
                         int n, std::vector<std::string> names = {});

/// True iff the closure of `generators` equals the constructive
/// enumeration of family f at size n, as sets.
bool closure_equals(const std::vector<PartialTransformation>& generators,
                    int n, Family f);

/// Right Cayley graph in DOT format: one node per element labeled by its
/// normal form, one edge per (element, generator), colored per generator.
std::string cayley_dot(const MonoidTable& table);

}  // namespace chainmon

#endif  // CHAINMON_FROIDURE_PIN_HPP_
