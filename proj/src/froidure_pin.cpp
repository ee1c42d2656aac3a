#include "chainmon/froidure_pin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chainmon/enumerate.hpp"

namespace chainmon {

std::optional<std::uint32_t> MonoidTable::index_of(
    const PartialTransformation& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

PartialTransformation MonoidTable::evaluate(const Word& w) const {
  PartialTransformation acc = PartialTransformation::identity(n);
  for (Letter g : w) {
    if (g >= generators.size()) {
      throw std::invalid_argument("letter index " + std::to_string(g) +
                                  " outside the generator alphabet");
    }
    acc = acc * generators[g];
  }
  return acc;
}

std::string MonoidTable::word_name(const Word& w) const {
  if (w.empty()) {
    return "1";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      os << ' ';
    }
    os << generator_names[w[i]];
  }
  return os.str();
}

MonoidTable froidure_pin(const std::vector<PartialTransformation>& generators,
                         int n, std::vector<std::string> names) {
  validate_chain_size(n);
  if (generators.empty()) {
    throw std::invalid_argument("froidure_pin needs at least one generator");
  }
  for (const auto& g : generators) {
    if (g.degree() != n) {
      throw std::invalid_argument("generator degree " +
                                  std::to_string(g.degree()) +
                                  " does not match n = " + std::to_string(n));
    }
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      names.push_back("g" + std::to_string(i + 1));
    }
  }
  if (names.size() != generators.size()) {
    throw std::invalid_argument("generator name list has wrong length");
  }

  MonoidTable table;
  table.n = n;
  table.generators = generators;
  table.generator_names = std::move(names);

  const std::size_t k = generators.size();

  // Breadth-first over products nf(u) * g. Elements are discovered in
  // shortlex order of their least word, because the queue is processed in
  // discovery order and prefixes of shortlex-least words are themselves
  // shortlex-least. The first word reaching an element is therefore its
  // normal form.
  table.elements.push_back(PartialTransformation::identity(n));
  table.normal_forms.push_back({});
  table.index_.emplace(table.elements[0], 0);

  bool identity_is_product = false;
  for (std::size_t pos = 0; pos < table.elements.size(); ++pos) {
    table.right_cayley.emplace_back(k, 0);
    for (std::size_t g = 0; g < k; ++g) {
      PartialTransformation prod = table.elements[pos] * generators[g];
      auto [it, inserted] =
          table.index_.emplace(prod, static_cast<std::uint32_t>(
                                         table.elements.size()));
      if (inserted) {
        Word w = table.normal_forms[pos];
        w.push_back(static_cast<Letter>(g));
        table.normal_forms.push_back(std::move(w));
        table.elements.push_back(std::move(prod));
      }
      table.right_cayley[pos][g] = it->second;
      if (it->second == 0) {
        identity_is_product = true;
      }
    }
  }
  table.identity_adjoined = !identity_is_product;

  table.left_cayley.resize(table.elements.size());
  for (std::size_t e = 0; e < table.elements.size(); ++e) {
    table.left_cayley[e].resize(k);
    for (std::size_t g = 0; g < k; ++g) {
      PartialTransformation prod = generators[g] * table.elements[e];
      auto it = table.index_.find(prod);
      // The monoid is closed, so the product is always present.
      table.left_cayley[e][g] = it->second;
    }
  }
  return table;
}

bool closure_equals(const std::vector<PartialTransformation>& generators,
                    int n, Family f) {
  MonoidTable table = froidure_pin(generators, n);
  std::vector<PartialTransformation> closure = table.elements;
  std::sort(closure.begin(), closure.end());
  return closure == enumerate_constructive(n, f);
}

std::string cayley_dot(const MonoidTable& table) {
  static const char* kPalette[] = {
      "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
      "#46f0f0", "#f032e6", "#808000", "#008080", "#9a6324",
  };
  constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
  std::ostringstream os;
  os << "digraph cayley {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (std::size_t e = 0; e < table.size(); ++e) {
    os << "  " << e << " [label=\"" << table.word_name(table.normal_forms[e])
       << "\"];\n";
  }
  for (std::size_t e = 0; e < table.size(); ++e) {
    for (std::size_t g = 0; g < table.generators.size(); ++g) {
      os << "  " << e << " -> " << table.right_cayley[e][g] << " [color=\""
         << kPalette[g % kPaletteSize] << "\", label=\""
         << table.generator_names[g] << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace chainmon
