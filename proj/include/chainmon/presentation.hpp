// Monoid presentations over named alphabets: the reversal relation sets,
// relation checking against concrete transformation monoids, single-step
// rewriting chains, the generic order-two extension constructor, a bounded
// enumerator for finitely presented monoids, and presentations extracted
// from closure tables.

#ifndef CHAINMON_PRESENTATION_HPP_
#define CHAINMON_PRESENTATION_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chainmon/froidure_pin.hpp"
#include "chainmon/transformation.hpp"
#include "chainmon/word.hpp"

namespace chainmon {

/// An ordered alphabet of named letters. The declaration order is the
/// total order used by shortlex.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
};

using Relation = std::pair<Word, Word>;

struct Presentation {
  Alphabet alphabet;
  std::vector<Relation> relations;

  /// Throws std::invalid_argument when a relation uses a letter outside
  /// the alphabet.
  void validate() const;
};

/// Renders a word with letter names separated by spaces, "1" when empty.
std::string word_to_string(const Word& w, const Alphabet& alphabet);

/// "u = v" lines, one per relation.
std::string render_relations(const std::vector<Relation>& relations,
                             const Alphabet& alphabet);

/// Parses the relation file format: one "u = v" per line, letters
/// whitespace-separated, "1" for the empty word, "#" starting a comment
/// line. Throws std::invalid_argument with a line number on malformed
/// input or unknown letters.
std::vector<Relation> parse_relations(std::istream& in,
                                      const Alphabet& alphabet);

// The standard alphabets, in the fixed order
// a_1 < ... < a_{n-1} < b_1 < ... < b_{n-1} [< e_1 < ... < e_{n-1}
// < f_2 < ... < f_n] < h.
Alphabet io_alphabet(int n);
Alphabet pio_alphabet(int n);
Alphabet im_alphabet(int n);   // io_alphabet plus h
Alphabet pim_alphabet(int n);  // pio_alphabet plus h

/// Maps every letter of one of the standard alphabets to the
/// transformation of the same name.
std::vector<PartialTransformation> standard_assignment(
    const Alphabet& alphabet, int n);

/// The relations ruling how the reversal h moves past the other
/// generators:
///   (N0)  h h = 1
///   (N1)  h a_i = b_{n-i} h          for 1 <= i <= n-1
///   (N1') h e_i = f_{n-i+1} h        for 1 <= i <= n-1
///   (N2)  a_1^{n-1} h = b_{n-1}^{n-1}
/// N1' is produced only when the alphabet carries the e/f letters.
struct ReversalRelations {
  std::vector<Relation> n0, n1, n1_prime, n2;

  std::vector<Relation> all() const;
};

ReversalRelations reversal_relations(const Alphabet& alphabet, int n);

struct RelationViolation {
  std::size_t index = 0;
  std::string rendered;
};

/// Evaluates both sides of every relation under the assignment (letter i
/// maps to assignment[i]); returns the relations whose sides disagree.
std::vector<RelationViolation> check_relations_hold(
    const Presentation& p,
    const std::vector<PartialTransformation>& assignment);

/// One rewriting step: apply relations[relation_index] at `position`,
/// replacing the left side by the right side when forward, and the right
/// by the left otherwise.
struct RewriteStep {
  std::size_t relation_index = 0;
  bool forward = true;
  std::size_t position = 0;
};

struct RewriteChain {
  Alphabet alphabet;
  std::vector<Relation> relations;
  std::vector<Word> words;
  std::vector<RewriteStep> steps;  // steps[i] turns words[i] into words[i+1]
};

/// True iff every step replaces exactly one occurrence of one side of its
/// relation at the recorded position.
bool chain_is_valid(const RewriteChain& chain);

/// The explicit chain rewriting h b_i into a_{n-i} h using one relation of
/// N0 or N1 per step; with `partial_letters`, the analogous chain from
/// h f_i to e_{n-i+1} h over N0 and N1' (then 2 <= i <= n).
RewriteChain reversal_conjugation_chain(int n, int i, bool partial_letters);

/// Input to the order-two extension: a presentation of the submonoid M
/// over X, canonical forms W = U ∪ V with the distinguished factor u0
/// occurring in every U-word, a fresh letter y with y^2 = 1, one
/// conjugation word per base letter (y x = v_x y) and the word v0 with
/// u0 y = v0.
struct ExtensionInput {
  Presentation base;
  std::vector<Word> u_words;
  std::vector<Word> v_words;
  Word u0;
  std::string y_name;
  std::vector<Word> conjugation_words;
  Word v0;
};

struct ExtensionResult {
  Presentation extended;  // over the base alphabet plus y
  std::vector<Word> canonical;  // U ∪ V ∪ {w y : w in V}
  std::size_t u_size = 0;
  std::size_t v_size = 0;

  std::size_t canonical_size() const { return canonical.size(); }
};

/// Builds the extended presentation with relations
/// base ∪ {y y = 1} ∪ {y x = v_x y : x in X} ∪ {u0 y = v0} and the
/// canonical set U ∪ V ∪ {w y : w in V} (of size |U| + 2|V|). Throws when
/// the empty word is missing from W = U ∪ V, when some U-word lacks the
/// factor u0, or when the conjugation words do not line up with the base
/// alphabet.
ExtensionResult extend_presentation(const ExtensionInput& input);

/// Extension input turning a presentation of IO_n (over the a/b letters)
/// into one of IM_n via h: canonical forms are the shortlex normal forms
/// of the closure table (one concrete transversal; the counting
/// identities hold for any choice), V the words of image size >= 2, U the
/// u0-prefixed constants with u0 = a_1^{n-1}. `base_relations` is empty by
/// default (the cardinality identities do not depend on it); pass a real
/// presentation of IO_n to build a defining presentation of IM_n.
ExtensionInput im_extension_input(int n,
                                  std::vector<Relation> base_relations = {});

/// The analogue for PIO_n -> PIM_n over the a/b/e/f letters. U collects
/// the words w_{i,j,1} u0 w_{1,0,k} (constants with domain [i, i+j] and
/// value k) together with u0 w0 for the zero.
ExtensionInput pim_extension_input(int n,
                                   std::vector<Relation> base_relations = {});

/// Exact size of the monoid presented by p, when it has at most
/// size_bound elements; nullopt otherwise ("bound exceeded"). Runs a
/// coset-style congruence enumeration over words with a pair-merging
/// table; when the enumeration closes, the reported size is exact.
/// max_nodes limits the internal table (0 picks a generous default); an
/// enumeration that exhausts the internal budget also reports nullopt.
std::optional<std::uint64_t> fp_enumerate(const Presentation& p,
                                          std::uint64_t size_bound,
                                          std::uint64_t max_nodes = 0);

/// A presentation of the monoid of a closure table over its generator
/// alphabet: one relation nf(s) x = nf(s x) for every product whose
/// shortlex reduction differs. fp_enumerate on the result recovers the
/// table size.
Presentation machine_presentation(const MonoidTable& table);

/// Claimed presentation sizes for IM_n and PIM_n together with the cited
/// base presentation sizes and the additive ledger connecting them. The
/// extension adds one generator and |N| relations to the base; for IM the
/// base lives on the doubled a/b alphabet, which carries 3(n-1) more
/// relations than the minimal count cited for IO_n.
struct PresentationSizeClaims {
  int n = 0;
  std::int64_t im_generators = 0;       // 2n - 1
  std::int64_t im_relations = 0;        // (3n^2 + n) / 2
  std::int64_t pim_generators = 0;      // 4n - 3
  std::int64_t pim_relations = 0;       // 5n^2 + 5n - 10
  std::int64_t io_base_generators = 0;  // n - 1 (minimal, as cited)
  std::int64_t io_base_relations = 0;   // (3n^2 - 7n + 4) / 2
  std::int64_t io_ab_generators = 0;    // 2n - 2 (the a/b alphabet)
  std::int64_t io_ab_relations = 0;     // io_base_relations + 3(n-1)
  std::int64_t pio_base_generators = 0;  // 4n - 4
  std::int64_t pio_base_relations = 0;   // 5n^2 + 3n - 10
  std::int64_t n_relations_im = 0;       // |N0| + |N1| + |N2| = n + 1
  std::int64_t n_relations_pim = 0;      // + |N1'| = 2n
  bool bookkeeping_ok = false;
};

PresentationSizeClaims presentation_size_claims(int n);  // n >= 2

}  // namespace chainmon

#endif  // CHAINMON_PRESENTATION_HPP_
