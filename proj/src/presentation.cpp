#include "chainmon/presentation.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace chainmon {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == "1") {
      throw std::invalid_argument(
          "\"1\" denotes the empty word and cannot name a letter");
    }
    auto [it, inserted] = index_.emplace(names_[i], static_cast<Letter>(i));
    if (!inserted) {
      throw std::invalid_argument("duplicate letter name \"" + names_[i] +
                                  "\"");
    }
  }
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void Presentation::validate() const {
  for (const auto& [lhs, rhs] : relations) {
    for (const Word* side : {&lhs, &rhs}) {
      for (Letter l : *side) {
        if (l >= alphabet.size()) {
          throw std::invalid_argument("relation uses letter index " +
                                      std::to_string(l) +
                                      " outside the alphabet");
        }
      }
    }
  }
}

std::string word_to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) {
    return "1";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      os << ' ';
    }
    os << alphabet.name(w[i]);
  }
  return os.str();
}

std::string render_relations(const std::vector<Relation>& relations,
                             const Alphabet& alphabet) {
  std::ostringstream os;
  for (const auto& [lhs, rhs] : relations) {
    os << word_to_string(lhs, alphabet) << " = " << word_to_string(rhs, alphabet)
       << '\n';
  }
  return os.str();
}

std::vector<Relation> parse_relations(std::istream& in,
                                      const Alphabet& alphabet) {
  std::vector<Relation> out;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("relation file line " +
                                std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) {
      tokens.push_back(tok);
    }
    if (tokens.empty()) {
      continue;
    }
    auto eq = std::find(tokens.begin(), tokens.end(), "=");
    if (eq == tokens.end()) {
      fail("missing \"=\"");
    }
    auto to_word = [&](auto first, auto last) {
      Word w;
      for (auto it = first; it != last; ++it) {
        if (*it == "1") {
          if (std::distance(first, last) != 1) {
            fail("\"1\" (the empty word) cannot be mixed with letters");
          }
          return w;
        }
        auto l = alphabet.find(*it);
        if (!l) {
          fail("unknown letter \"" + *it + "\"");
        }
        w.push_back(*l);
      }
      if (w.empty()) {
        fail("empty side; write \"1\" for the empty word");
      }
      return w;
    };
    Word lhs = to_word(tokens.begin(), eq);
    Word rhs = to_word(eq + 1, tokens.end());
    out.emplace_back(std::move(lhs), std::move(rhs));
  }
  return out;
}

namespace {

void require_n_at_least(int n, int lo, const char* what) {
  if (n < lo) {
    throw std::invalid_argument(std::string(what) + " needs n >= " +
                                std::to_string(lo) + ", got " +
                                std::to_string(n));
  }
}

std::vector<std::string> ab_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n - 1; ++i) {
    names.push_back("a" + std::to_string(i));
  }
  for (int i = 1; i <= n - 1; ++i) {
    names.push_back("b" + std::to_string(i));
  }
  return names;
}

}  // namespace

Alphabet io_alphabet(int n) {
  require_n_at_least(n, 2, "the a/b alphabet");
  return Alphabet(ab_names(n));
}

Alphabet pio_alphabet(int n) {
  require_n_at_least(n, 2, "the a/b/e/f alphabet");
  auto names = ab_names(n);
  for (int i = 1; i <= n - 1; ++i) {
    names.push_back("e" + std::to_string(i));
  }
  for (int i = 2; i <= n; ++i) {
    names.push_back("f" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

Alphabet im_alphabet(int n) {
  auto names = ab_names(n);
  names.push_back("h");
  return Alphabet(std::move(names));
}

Alphabet pim_alphabet(int n) {
  Alphabet base = pio_alphabet(n);
  auto names = base.names();
  names.push_back("h");
  return Alphabet(std::move(names));
}

std::vector<PartialTransformation> standard_assignment(
    const Alphabet& alphabet, int n) {
  validate_chain_size(n);
  std::vector<PartialTransformation> out;
  out.reserve(alphabet.size());
  for (const auto& name : alphabet.names()) {
    if (name == "h") {
      out.push_back(generator(Gen::h, 0, n));
      continue;
    }
    if (name.size() < 2) {
      throw std::invalid_argument("no standard transformation for letter \"" +
                                  name + "\"");
    }
    int index = 0;
    try {
      index = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("no standard transformation for letter \"" +
                                  name + "\"");
    }
    switch (name[0]) {
      case 'a': out.push_back(generator(Gen::a, index, n)); break;
      case 'b': out.push_back(generator(Gen::b, index, n)); break;
      case 'e': out.push_back(generator(Gen::e, index, n)); break;
      case 'f': out.push_back(generator(Gen::f, index, n)); break;
      default:
        throw std::invalid_argument(
            "no standard transformation for letter \"" + name + "\"");
    }
  }
  return out;
}

std::vector<Relation> ReversalRelations::all() const {
  std::vector<Relation> out = n0;
  out.insert(out.end(), n1.begin(), n1.end());
  out.insert(out.end(), n1_prime.begin(), n1_prime.end());
  out.insert(out.end(), n2.begin(), n2.end());
  return out;
}

ReversalRelations reversal_relations(const Alphabet& alphabet, int n) {
  require_n_at_least(n, 2, "the reversal relations");
  auto letter = [&](const std::string& name) {
    auto l = alphabet.find(name);
    if (!l) {
      throw std::invalid_argument("alphabet lacks letter \"" + name + "\"");
    }
    return *l;
  };
  const Letter h = letter("h");

  ReversalRelations rels;
  rels.n0.push_back({Word{h, h}, Word{}});
  for (int i = 1; i <= n - 1; ++i) {
    rels.n1.push_back({Word{h, letter("a" + std::to_string(i))},
                       Word{letter("b" + std::to_string(n - i)), h}});
  }
  if (alphabet.find("e1")) {
    for (int i = 1; i <= n - 1; ++i) {
      rels.n1_prime.push_back(
          {Word{h, letter("e" + std::to_string(i))},
           Word{letter("f" + std::to_string(n - i + 1)), h}});
    }
  }
  Word lhs(static_cast<std::size_t>(n - 1), letter("a1"));
  lhs.push_back(h);
  Word rhs(static_cast<std::size_t>(n - 1),
           letter("b" + std::to_string(n - 1)));
  rels.n2.push_back({std::move(lhs), std::move(rhs)});
  return rels;
}

std::vector<RelationViolation> check_relations_hold(
    const Presentation& p,
    const std::vector<PartialTransformation>& assignment) {
  if (assignment.size() != p.alphabet.size()) {
    throw std::invalid_argument("assignment covers " +
                                std::to_string(assignment.size()) +
                                " letters, alphabet has " +
                                std::to_string(p.alphabet.size()));
  }
  p.validate();
  int n = assignment.empty() ? 1 : assignment.front().degree();
  auto evaluate = [&](const Word& w) {
    PartialTransformation acc = PartialTransformation::identity(n);
    for (Letter l : w) {
      acc = acc * assignment[l];
    }
    return acc;
  };
  std::vector<RelationViolation> violations;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& [lhs, rhs] = p.relations[i];
    if (evaluate(lhs) != evaluate(rhs)) {
      violations.push_back(
          {i, word_to_string(lhs, p.alphabet) + " = " +
                  word_to_string(rhs, p.alphabet)});
    }
  }
  return violations;
}

bool chain_is_valid(const RewriteChain& chain) {
  if (chain.words.size() != chain.steps.size() + 1) {
    return false;
  }
  for (std::size_t s = 0; s < chain.steps.size(); ++s) {
    const RewriteStep& step = chain.steps[s];
    if (step.relation_index >= chain.relations.size()) {
      return false;
    }
    const auto& [lhs, rhs] = chain.relations[step.relation_index];
    const Word& from = step.forward ? lhs : rhs;
    const Word& to = step.forward ? rhs : lhs;
    const Word& before = chain.words[s];
    const Word& after = chain.words[s + 1];
    if (step.position + from.size() > before.size() ||
        !std::equal(from.begin(), from.end(),
                    before.begin() + step.position)) {
      return false;
    }
    Word expected(before.begin(), before.begin() + step.position);
    expected.insert(expected.end(), to.begin(), to.end());
    expected.insert(expected.end(),
                    before.begin() + step.position + from.size(),
                    before.end());
    if (expected != after) {
      return false;
    }
  }
  return true;
}

RewriteChain reversal_conjugation_chain(int n, int i, bool partial_letters) {
  require_n_at_least(n, 2, "the conjugation chain");
  RewriteChain chain;
  chain.alphabet = partial_letters ? pim_alphabet(n) : im_alphabet(n);
  ReversalRelations rels = reversal_relations(chain.alphabet, n);

  auto letter = [&](const std::string& name) {
    return *chain.alphabet.find(name);
  };
  const Letter h = letter("h");

  if (!partial_letters) {
    // h b_i -> h b_i h h -> h (h a_{n-i}) h -> a_{n-i} h
    if (i < 1 || i > n - 1) {
      throw std::invalid_argument("b index outside [1, n-1]");
    }
    chain.relations = rels.n0;
    chain.relations.insert(chain.relations.end(), rels.n1.begin(),
                           rels.n1.end());
    const std::size_t n0_index = 0;
    // n1 relation h a_{n-i} = b_i h sits at offset (n-i-1) within N1.
    const std::size_t n1_index = 1 + static_cast<std::size_t>(n - i - 1);
    const Letter b_i = letter("b" + std::to_string(i));
    const Letter a_ni = letter("a" + std::to_string(n - i));

    chain.words.push_back({h, b_i});
    chain.steps.push_back({n0_index, false, 2});
    chain.words.push_back({h, b_i, h, h});
    chain.steps.push_back({n1_index, false, 1});
    chain.words.push_back({h, h, a_ni, h});
    chain.steps.push_back({n0_index, true, 0});
    chain.words.push_back({a_ni, h});
    return chain;
  }

  // h f_i -> h f_i h h -> h (h e_{n-i+1}) h -> e_{n-i+1} h
  if (i < 2 || i > n) {
    throw std::invalid_argument("f index outside [2, n]");
  }
  chain.relations = rels.n0;
  chain.relations.insert(chain.relations.end(), rels.n1_prime.begin(),
                         rels.n1_prime.end());
  const std::size_t n0_index = 0;
  // n1' relation h e_{n-i+1} = f_i h sits at offset (n-i) within N1'.
  const std::size_t n1p_index = 1 + static_cast<std::size_t>(n - i);
  const Letter f_i = letter("f" + std::to_string(i));
  const Letter e_mirror = letter("e" + std::to_string(n - i + 1));

  chain.words.push_back({h, f_i});
  chain.steps.push_back({n0_index, false, 2});
  chain.words.push_back({h, f_i, h, h});
  chain.steps.push_back({n1p_index, false, 1});
  chain.words.push_back({h, h, e_mirror, h});
  chain.steps.push_back({n0_index, true, 0});
  chain.words.push_back({e_mirror, h});
  return chain;
}

namespace {

bool contains_factor(const Word& w, const Word& factor) {
  return std::search(w.begin(), w.end(), factor.begin(), factor.end()) !=
         w.end();
}

}  // namespace

ExtensionResult extend_presentation(const ExtensionInput& input) {
  const std::size_t k = input.base.alphabet.size();
  if (input.conjugation_words.size() != k) {
    throw std::invalid_argument(
        "need exactly one conjugation word per base letter");
  }
  input.base.validate();

  bool has_empty = false;
  for (const Word& w : input.v_words) {
    has_empty = has_empty || w.empty();
  }
  for (const Word& w : input.u_words) {
    has_empty = has_empty || w.empty();
    if (!contains_factor(w, input.u0)) {
      throw std::invalid_argument(
          "a U-word does not contain the distinguished factor u0");
    }
  }
  if (!has_empty) {
    throw std::invalid_argument(
        "the canonical set W must contain the empty word");
  }

  ExtensionResult result;
  auto names = input.base.alphabet.names();
  names.push_back(input.y_name);
  result.extended.alphabet = Alphabet(std::move(names));
  const Letter y = static_cast<Letter>(k);

  result.extended.relations = input.base.relations;
  result.extended.relations.push_back({Word{y, y}, Word{}});
  for (Letter x = 0; x < k; ++x) {
    Word rhs = input.conjugation_words[x];
    rhs.push_back(y);
    result.extended.relations.push_back({Word{y, x}, std::move(rhs)});
  }
  Word u0y = input.u0;
  u0y.push_back(y);
  result.extended.relations.push_back({std::move(u0y), input.v0});
  result.extended.validate();

  result.u_size = input.u_words.size();
  result.v_size = input.v_words.size();
  result.canonical = input.u_words;
  result.canonical.insert(result.canonical.end(), input.v_words.begin(),
                          input.v_words.end());
  for (const Word& w : input.v_words) {
    Word wy = w;
    wy.push_back(y);
    result.canonical.push_back(std::move(wy));
  }
  return result;
}

namespace {

// Splits a closure table's normal forms into the image-size >= 2 words and
// the rest, preserving table order.
void split_by_image_size(const MonoidTable& table, std::vector<Word>& small,
                         std::vector<Word>& large) {
  for (std::size_t e = 0; e < table.size(); ++e) {
    if (table.elements[e].image_size() >= 2) {
      large.push_back(table.normal_forms[e]);
    } else {
      small.push_back(table.normal_forms[e]);
    }
  }
}

}  // namespace

ExtensionInput im_extension_input(int n, std::vector<Relation> base_relations) {
  require_n_at_least(n, 2, "the IM extension");
  ExtensionInput input;
  input.base.alphabet = io_alphabet(n);
  input.base.relations = std::move(base_relations);
  input.y_name = "h";

  auto assignment = standard_assignment(input.base.alphabet, n);
  MonoidTable table = froidure_pin(assignment, n, input.base.alphabet.names());

  std::vector<Word> constants;
  std::vector<Word> v_words;
  split_by_image_size(table, constants, v_words);

  const Letter a1 = *input.base.alphabet.find("a1");
  input.u0 = Word(static_cast<std::size_t>(n - 1), a1);
  for (const Word& w : constants) {
    Word uw = input.u0;
    uw.insert(uw.end(), w.begin(), w.end());
    input.u_words.push_back(std::move(uw));
  }
  input.v_words = std::move(v_words);

  for (int i = 1; i <= n - 1; ++i) {
    input.conjugation_words.push_back(
        {*input.base.alphabet.find("b" + std::to_string(n - i))});
  }
  for (int i = 1; i <= n - 1; ++i) {
    input.conjugation_words.push_back(
        {*input.base.alphabet.find("a" + std::to_string(n - i))});
  }
  input.v0 = Word(static_cast<std::size_t>(n - 1),
                  *input.base.alphabet.find("b" + std::to_string(n - 1)));
  return input;
}

ExtensionInput pim_extension_input(int n,
                                   std::vector<Relation> base_relations) {
  require_n_at_least(n, 2, "the PIM extension");
  ExtensionInput input;
  input.base.alphabet = pio_alphabet(n);
  input.base.relations = std::move(base_relations);
  input.y_name = "h";

  auto assignment = standard_assignment(input.base.alphabet, n);
  MonoidTable table = froidure_pin(assignment, n, input.base.alphabet.names());

  std::vector<Word> small_words;  // unused beyond sanity checking
  std::vector<Word> v_words;
  split_by_image_size(table, small_words, v_words);
  input.v_words = std::move(v_words);

  const Letter a1 = *input.base.alphabet.find("a1");
  input.u0 = Word(static_cast<std::size_t>(n - 1), a1);

  // Canonical word of the constant map with domain [lo, hi] and value k;
  // domain size 0 encodes the zero.
  auto constant_word = [&](int lo, int hi, int value) {
    std::vector<int> img(n, 0);
    for (int x = lo; x <= hi; ++x) {
      img[x - 1] = value;
    }
    auto idx = table.index_of(PartialTransformation(n, img));
    if (!idx) {
      throw std::logic_error("constant map missing from the closure table");
    }
    return table.normal_forms[*idx];
  };

  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      const Word prefix = constant_word(i, i + j, 1);
      for (int k = 1; k <= n; ++k) {
        Word w = prefix;
        w.insert(w.end(), input.u0.begin(), input.u0.end());
        const Word point = constant_word(1, 1, k);
        w.insert(w.end(), point.begin(), point.end());
        input.u_words.push_back(std::move(w));
      }
    }
  }
  {
    Word w = input.u0;
    const Word zero_word = constant_word(1, 0, 0);
    w.insert(w.end(), zero_word.begin(), zero_word.end());
    input.u_words.push_back(std::move(w));
  }

  for (int i = 1; i <= n - 1; ++i) {
    input.conjugation_words.push_back(
        {*input.base.alphabet.find("b" + std::to_string(n - i))});
  }
  for (int i = 1; i <= n - 1; ++i) {
    input.conjugation_words.push_back(
        {*input.base.alphabet.find("a" + std::to_string(n - i))});
  }
  for (int i = 1; i <= n - 1; ++i) {
    input.conjugation_words.push_back(
        {*input.base.alphabet.find("f" + std::to_string(n - i + 1))});
  }
  for (int i = 2; i <= n; ++i) {
    input.conjugation_words.push_back(
        {*input.base.alphabet.find("e" + std::to_string(n - i + 1))});
  }
  input.v0 = Word(static_cast<std::size_t>(n - 1),
                  *input.base.alphabet.find("b" + std::to_string(n - 1)));
  return input;
}

Presentation machine_presentation(const MonoidTable& table) {
  Presentation p;
  p.alphabet = Alphabet(table.generator_names);
  for (std::size_t e = 0; e < table.size(); ++e) {
    for (std::size_t g = 0; g < table.generators.size(); ++g) {
      Word lhs = table.normal_forms[e];
      lhs.push_back(static_cast<Letter>(g));
      const Word& rhs = table.normal_forms[table.right_cayley[e][g]];
      if (lhs != rhs) {
        p.relations.emplace_back(std::move(lhs), rhs);
      }
    }
  }
  return p;
}

PresentationSizeClaims presentation_size_claims(int n) {
  require_n_at_least(n, 2, "the presentation size claims");
  PresentationSizeClaims c;
  const std::int64_t nn = n;
  c.n = n;
  c.im_generators = 2 * nn - 1;
  c.im_relations = (3 * nn * nn + nn) / 2;
  c.pim_generators = 4 * nn - 3;
  c.pim_relations = 5 * nn * nn + 5 * nn - 10;
  c.io_base_generators = nn - 1;
  c.io_base_relations = (3 * nn * nn - 7 * nn + 4) / 2;
  c.io_ab_generators = 2 * nn - 2;
  c.io_ab_relations = c.io_base_relations + 3 * (nn - 1);
  c.pio_base_generators = 4 * nn - 4;
  c.pio_base_relations = 5 * nn * nn + 3 * nn - 10;
  c.n_relations_im = nn + 1;
  c.n_relations_pim = 2 * nn;
  c.bookkeeping_ok =
      c.im_generators == c.io_ab_generators + 1 &&
      c.im_relations == c.io_ab_relations + c.n_relations_im &&
      c.pim_generators == c.pio_base_generators + 1 &&
      c.pim_relations == c.pio_base_relations + c.n_relations_pim;
  return c;
}

}  // namespace chainmon
