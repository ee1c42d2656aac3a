#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"

#include "chainmon/counting.hpp"
#include "chainmon/enumerate.hpp"
#include "chainmon/froidure_pin.hpp"
#include "chainmon/presentation.hpp"
#include "chainmon/rank.hpp"

namespace {

using namespace chainmon;

Presentation two_letter_presentation(
    const std::string& a, const std::string& b,
    std::vector<Relation> relations) {
  Presentation p;
  p.alphabet = Alphabet({a, b});
  p.relations = std::move(relations);
  return p;
}

}  // namespace

TEST_CASE("alphabets and words") {
  Alphabet c = im_alphabet(4);
  CHECK(c.size() == 7);  // a1 a2 a3 b1 b2 b3 h
  CHECK(c.name(0) == "a1");
  CHECK(c.name(6) == "h");
  CHECK(c.find("b2") == Letter{4});
  CHECK_FALSE(c.find("x9").has_value());

  Alphabet d = pim_alphabet(4);
  CHECK(d.size() == 13);  // + e1 e2 e3 f2 f3 f4

  CHECK(word_to_string({}, c) == "1");
  CHECK(word_to_string({6, 0}, c) == "h a1");
  CHECK(shortlex_less({6}, {0, 0}));       // length first
  CHECK(shortlex_less({0, 6}, {6, 0}));    // then letter order
  CHECK_FALSE(shortlex_less({6, 0}, {0, 6}));

  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"1"}), std::invalid_argument);
}

TEST_CASE("relation file parsing") {
  Alphabet c = im_alphabet(4);
  std::istringstream in(
      "# conjugation sample\n"
      "h a1 = b3 h\n"
      "\n"
      "h h = 1   # the reversal squares away\n");
  auto rels = parse_relations(in, c);
  REQUIRE(rels.size() == 2);
  CHECK(rels[0].first == Word{6, 0});
  CHECK(rels[0].second == Word{5, 6});
  CHECK(rels[1].second.empty());

  std::istringstream bad("h a1 b3 h\n");
  CHECK_THROWS_AS(parse_relations(bad, c), std::invalid_argument);
  std::istringstream unknown("h x1 = h\n");
  CHECK_THROWS_AS(parse_relations(unknown, c), std::invalid_argument);

  // Rendering and reparsing is the identity.
  std::istringstream again(render_relations(rels, c));
  CHECK(parse_relations(again, c) == rels);
}

TEST_CASE("reversal relations have the stated shape and hold concretely") {
  for (int n = 2; n <= 10; ++n) {
    Alphabet d = pim_alphabet(n);
    ReversalRelations rels = reversal_relations(d, n);
    CHECK(rels.n0.size() == 1);
    CHECK(rels.n1.size() == static_cast<std::size_t>(n - 1));
    CHECK(rels.n1_prime.size() == static_cast<std::size_t>(n - 1));
    CHECK(rels.n2.size() == 1);

    Presentation p{d, rels.all()};
    CHECK(check_relations_hold(p, standard_assignment(d, n)).empty());

    Alphabet c = im_alphabet(n);
    ReversalRelations im_rels = reversal_relations(c, n);
    CHECK(im_rels.n1_prime.empty());
    Presentation q{c, im_rels.all()};
    CHECK(check_relations_hold(q, standard_assignment(c, n)).empty());
  }
}

TEST_CASE("N1 at n = 4 spells out as expected") {
  Alphabet c = im_alphabet(4);
  ReversalRelations rels = reversal_relations(c, 4);
  CHECK(render_relations(rels.n1, c) ==
        "h a1 = b3 h\n"
        "h a2 = b2 h\n"
        "h a3 = b1 h\n");
  CHECK(render_relations(rels.n2, c) == "a1 a1 a1 h = b3 b3 b3\n");
}

TEST_CASE("a corrupted relation is flagged") {
  Alphabet c = im_alphabet(4);
  Presentation p{c, {{Word{6, 0}, Word{3, 6}}}};  // h a1 = b1 h (wrong)
  auto violations = check_relations_hold(p, standard_assignment(c, 4));
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rendered == "h a1 = b1 h");
}

TEST_CASE("rewriting chains") {
  for (int n = 2; n <= 8; ++n) {
    Alphabet c = im_alphabet(n);
    auto assignment = standard_assignment(c, n);
    auto evaluate = [&](const Word& w) {
      PartialTransformation acc = PartialTransformation::identity(n);
      for (Letter l : w) {
        acc = acc * assignment[l];
      }
      return acc;
    };
    for (int i = 1; i <= n - 1; ++i) {
      RewriteChain chain = reversal_conjugation_chain(n, i, false);
      CHECK(chain.words.size() == 4);
      CHECK(chain_is_valid(chain));
      // Every intermediate word evaluates to the same transformation.
      auto value = evaluate(chain.words.front());
      for (const Word& w : chain.words) {
        CHECK(evaluate(w) == value);
      }
      // Endpoints: h b_i and a_{n-i} h.
      CHECK(chain.words.front() ==
            Word{*c.find("h"), *c.find("b" + std::to_string(i))});
      CHECK(chain.words.back() ==
            Word{*c.find("a" + std::to_string(n - i)), *c.find("h")});
    }

    Alphabet d = pim_alphabet(n);
    auto passignment = standard_assignment(d, n);
    auto pevaluate = [&](const Word& w) {
      PartialTransformation acc = PartialTransformation::identity(n);
      for (Letter l : w) {
        acc = acc * passignment[l];
      }
      return acc;
    };
    for (int i = 2; i <= n; ++i) {
      RewriteChain chain = reversal_conjugation_chain(n, i, true);
      CHECK(chain_is_valid(chain));
      auto value = pevaluate(chain.words.front());
      for (const Word& w : chain.words) {
        CHECK(pevaluate(w) == value);
      }
      CHECK(chain.words.back() ==
            Word{*d.find("e" + std::to_string(n - i + 1)), *d.find("h")});
    }
  }

  // A tampered chain fails validation.
  RewriteChain chain = reversal_conjugation_chain(4, 1, false);
  chain.words[2].push_back(0);
  CHECK_FALSE(chain_is_valid(chain));
}

TEST_CASE("extension canonical-form counts hit the monoid sizes") {
  for (int n = 2; n <= 10; ++n) {
    ExtensionResult im = extend_presentation(im_extension_input(n));
    CHECK(im.u_size == static_cast<std::size_t>(n));
    CHECK(im.canonical_size() == im.u_size + 2 * im.v_size);
    CHECK(im.canonical_size() == static_cast<std::size_t>(card_im(n)));
    CHECK(im.v_size == static_cast<std::size_t>(card_io(n) - n));

    ExtensionResult pim = extend_presentation(pim_extension_input(n));
    CHECK(pim.u_size ==
          static_cast<std::size_t>(reversing_intersection_card(n)));
    CHECK(pim.canonical_size() == static_cast<std::size_t>(card_pim(n)));
  }
}

TEST_CASE("extension validates its input") {
  ExtensionInput input = im_extension_input(3);
  auto good = extend_presentation(input);
  // |R| relations: base (none here) + N0 + one per base letter + N2.
  CHECK(good.extended.relations.size() ==
        input.base.alphabet.size() + 2);
  CHECK(good.extended.alphabet.size() == input.base.alphabet.size() + 1);

  ExtensionInput no_empty = input;
  no_empty.v_words.erase(
      std::remove_if(no_empty.v_words.begin(), no_empty.v_words.end(),
                     [](const Word& w) { return w.empty(); }),
      no_empty.v_words.end());
  CHECK_THROWS_AS(extend_presentation(no_empty), std::invalid_argument);

  ExtensionInput bad_u = input;
  bad_u.u_words.push_back(Word{0});  // "a1" does not contain u0 = a1 a1
  CHECK_THROWS_AS(extend_presentation(bad_u), std::invalid_argument);

  ExtensionInput bad_conj = input;
  bad_conj.conjugation_words.pop_back();
  CHECK_THROWS_AS(extend_presentation(bad_conj), std::invalid_argument);
}

TEST_CASE("extension conjugation data holds in the concrete monoid") {
  for (int n = 2; n <= 6; ++n) {
    ExtensionInput input = im_extension_input(n);
    ExtensionResult ext = extend_presentation(input);
    auto assignment = standard_assignment(ext.extended.alphabet, n);
    CHECK(check_relations_hold(ext.extended, assignment).empty());

    ExtensionInput pinput = pim_extension_input(n);
    ExtensionResult pext = extend_presentation(pinput);
    auto passignment = standard_assignment(pext.extended.alphabet, n);
    CHECK(check_relations_hold(pext.extended, passignment).empty());
  }
}

TEST_CASE("fp enumeration of tiny presentations") {
  Presentation involution;
  involution.alphabet = Alphabet({"h"});
  involution.relations = {{Word{0, 0}, Word{}}};
  CHECK(fp_enumerate(involution, 10) == 2);

  Presentation aperiodic;
  aperiodic.alphabet = Alphabet({"a"});
  aperiodic.relations = {{Word{0, 0, 0}, Word{0, 0}}};
  CHECK(fp_enumerate(aperiodic, 10) == 3);

  // Free monoid on one letter: infinite, so any bound is exceeded.
  Presentation free_monoid;
  free_monoid.alphabet = Alphabet({"a"});
  CHECK_FALSE(fp_enumerate(free_monoid, 100).has_value());

  // Bound below the size: exceeded, never a wrong value.
  CHECK_FALSE(fp_enumerate(aperiodic, 2).has_value());

  // Bicyclic-style collapse: a b = 1 with b a = 1 gives the trivial group
  // extended... a b = 1 and b a = b forces everything to collapse to 1.
  Presentation collapse = two_letter_presentation(
      "a", "b", {{Word{0, 1}, Word{}}, {Word{1, 0}, Word{1}}});
  CHECK(fp_enumerate(collapse, 10) == 1);

  // The empty alphabet presents the trivial monoid.
  Presentation trivial;
  CHECK(fp_enumerate(trivial, 1) == 1);
}

TEST_CASE("machine presentations round-trip through fp enumeration") {
  for (int n = 2; n <= 8; ++n) {
    auto h_table = froidure_pin({PartialTransformation::reversal(n)}, n,
                                {"h"});
    auto p = machine_presentation(h_table);
    CHECK(fp_enumerate(p, 4) == 2);
  }

  auto im3 = froidure_pin(im_standard_generators(3), 3,
                          minimal_generator_names(Family::IM, 3));
  CHECK(fp_enumerate(machine_presentation(im3), 20) == 13);

  auto pim3 = froidure_pin(pim_standard_generators(3), 3,
                           minimal_generator_names(Family::PIM, 3));
  CHECK(fp_enumerate(machine_presentation(pim3), 40) == 37);

  auto im4 = froidure_pin(im_standard_generators(4), 4,
                          minimal_generator_names(Family::IM, 4));
  CHECK(fp_enumerate(machine_presentation(im4), 100) == 36);
}

TEST_CASE("reversal extension of a concrete base presentation defines IM_3") {
  // A machine presentation of IO_3 over the a/b letters plays the role of
  // the external base; adding the reversal relations must present IM_3.
  const int n = 3;
  Alphabet base_alphabet = io_alphabet(n);
  auto base_assignment = standard_assignment(base_alphabet, n);
  MonoidTable io_table =
      froidure_pin(base_assignment, n, base_alphabet.names());
  CHECK(io_table.size() == static_cast<std::size_t>(card_io(n)));
  Presentation base = machine_presentation(io_table);

  // Route 1: the generic constructor with full conjugation data.
  ExtensionInput input = im_extension_input(n, base.relations);
  ExtensionResult ext = extend_presentation(input);
  CHECK(fp_enumerate(ext.extended, 20) == 13);

  // Route 2: the minimal relation set N0 ∪ N1 ∪ N2 only; the b-letter
  // conjugations are consequences via the rewriting chains.
  Alphabet c = im_alphabet(n);
  Presentation minimal{c, base.relations};
  auto nrels = reversal_relations(c, n).all();
  minimal.relations.insert(minimal.relations.end(), nrels.begin(),
                           nrels.end());
  CHECK(fp_enumerate(minimal, 20) == 13);

  // Route 3: the same base relations shipped through the text file
  // format, as an external relation file would be.
  std::istringstream file(render_relations(base.relations, base_alphabet));
  Presentation from_file{c, parse_relations(file, base_alphabet)};
  from_file.relations.insert(from_file.relations.end(), nrels.begin(),
                             nrels.end());
  CHECK(fp_enumerate(from_file, 20) == 13);
}

TEST_CASE("reversal extension of a concrete base presentation defines PIM_3") {
  const int n = 3;
  Alphabet base_alphabet = pio_alphabet(n);
  auto base_assignment = standard_assignment(base_alphabet, n);
  MonoidTable pio_table =
      froidure_pin(base_assignment, n, base_alphabet.names());
  CHECK(pio_table.size() == static_cast<std::size_t>(card_pio(n)));
  Presentation base = machine_presentation(pio_table);

  Alphabet d = pim_alphabet(n);
  Presentation with_reversal{d, base.relations};
  auto nrels = reversal_relations(d, n).all();
  with_reversal.relations.insert(with_reversal.relations.end(), nrels.begin(),
                                 nrels.end());
  CHECK(fp_enumerate(with_reversal, 40) == 37);
}

TEST_CASE("fp enumeration agrees with closure tables on random submonoids") {
  // Machine presentations of randomly generated submonoids of PIM_4 and
  // PIM_5: the quotient enumeration must reproduce the closure size
  // exactly, never a different value.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + trial % 2;
    auto pool = enumerate_constructive(n, Family::PIM);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<PartialTransformation> gens;
    for (int g = 0; g < 2 + trial % 2; ++g) {
      gens.push_back(pool[pick(rng)]);
    }
    MonoidTable table = froidure_pin(gens, n);
    auto size = fp_enumerate(machine_presentation(table), table.size());
    REQUIRE(size.has_value());
    CHECK(*size == table.size());
    // A bound one below the true size must be reported as exceeded.
    if (table.size() > 1) {
      CHECK_FALSE(
          fp_enumerate(machine_presentation(table), table.size() - 1)
              .has_value());
    }
  }

  // A larger round-trip: the whole of PIM_4.
  auto pim4 = froidure_pin(pim_standard_generators(4), 4,
                           minimal_generator_names(Family::PIM, 4));
  CHECK(fp_enumerate(machine_presentation(pim4), 123) == 123);
}

TEST_CASE("presentation size claims and their ledger") {
  auto c2 = presentation_size_claims(2);
  CHECK(c2.im_generators == 3);
  CHECK(c2.im_relations == 7);

  auto c4 = presentation_size_claims(4);
  CHECK(c4.im_generators == 7);
  CHECK(c4.im_relations == 26);

  auto c5 = presentation_size_claims(5);
  CHECK(c5.pim_generators == 17);
  CHECK(c5.pim_relations == 140);

  for (int n = 2; n <= 100; ++n) {
    CHECK(presentation_size_claims(n).bookkeeping_ok);
  }
  CHECK_THROWS_AS(presentation_size_claims(1), std::invalid_argument);
}
