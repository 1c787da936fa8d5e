#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace aspherix;

namespace {

std::vector<std::string> const ab{"a", "b"};

Word w(std::string_view text, std::vector<std::string> const& names = ab) { return parse_word(text, names); }

}  // namespace

TEST(FreeReduce, CancelsAdjacentInversePairs) {
  EXPECT_TRUE(free_reduce(std::vector<Letter>{{0, 1}, {0, -1}}).empty());
  EXPECT_TRUE(free_reduce(std::vector<Letter>{{0, 1}, {1, 1}, {1, -1}, {0, -1}}).empty());
  Word aab = free_reduce(std::vector<Letter>{{0, 1}, {0, 1}, {1, 1}});
  EXPECT_EQ(aab.size(), 3u);
  EXPECT_EQ(render_word(aab, ab), "a a b");
}

TEST(FreeReduce, IdempotentAndAgreesWithNaiveReduction) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto raw = oracle::random_letters(rng, 3, 16);
    Word once = free_reduce(raw);
    EXPECT_EQ(Word(once.letters()), once);
    EXPECT_LE(once.size(), raw.size());
    EXPECT_EQ(once.letters(), oracle::naive_reduce(raw));
    EXPECT_TRUE((once * once.inverse()).empty());
    EXPECT_TRUE((once.inverse() * once).empty());
  }
}

TEST(Word, ReductionIsNotCyclic) {
  EXPECT_EQ(render_word(w("a b a A B"), ab), "a");
  Word x = w("b a a B");
  EXPECT_EQ(x.size(), 4u);
  EXPECT_EQ(render_word(x.cyclically_reduced(), ab), "a a");
  EXPECT_EQ(x.exponent_sum(0), 2);
  EXPECT_EQ(x.exponent_sum(1), 0);
}

TEST(Word, ParsesCompactAndVerboseSyntax) {
  EXPECT_EQ(w("abAB"), w("a b A B"));
  EXPECT_EQ(w("a^3"), w("aaa"));
  EXPECT_EQ(w("b^-2"), w("BB"));
  EXPECT_TRUE(w("1").empty());
  std::vector<std::string> long_names{"x1", "y"};
  Word v = parse_word("x1 y^-1 * x1^2", long_names);
  EXPECT_EQ(render_word(v, long_names), "x1 y^-1 x1 x1");
  EXPECT_EQ(parse_word(render_word(v, long_names), long_names), v);
}

TEST(Word, UnknownGeneratorIsAParseError) {
  EXPECT_THROW(w("abc"), ParseError);
  EXPECT_THROW(w("a^"), ParseError);
  EXPECT_THROW(w("a+b"), ParseError);
}

TEST(Presentation, ParsesTheTextFormat) {
  Presentation p = parse_presentation("gens: a b\nrel: a b A B");
  EXPECT_EQ(p.generator_names(), ab);
  ASSERT_EQ(p.relator_count(), 1u);
  EXPECT_EQ(p.relator(0), w("abAB"));
}

TEST(Presentation, EmptyRelatorLine) {
  Presentation p = parse_presentation("gens: a\nrel:");
  ASSERT_EQ(p.relator_count(), 1u);
  EXPECT_TRUE(p.relator(0).empty());
}

TEST(Presentation, RelatorsAreFreelyReducedButNotCyclically) {
  Presentation p = parse_presentation("gens: a\nrel: a A a");
  EXPECT_EQ(p.relator(0), Word::generator(0));

  Presentation q = parse_presentation("gens: a b\nrel: b a B");
  EXPECT_EQ(q.relator(0).size(), 3u);
  EXPECT_EQ(q.cyclically_reduced().relator(0), Word::generator(0));
}

TEST(Presentation, CommentsDuplicatesAndBlankLines) {
  Presentation p = parse_presentation("# header\n\ngens: a b  # two\nrel: a\nrel: a\nrel: # empty\n");
  EXPECT_EQ(p.relator_count(), 3u);
  EXPECT_EQ(p.relator(0), p.relator(1));
  EXPECT_TRUE(p.relator(2).empty());
}

TEST(Presentation, ParseErrorsReportPositions) {
  try {
    parse_presentation("gens: a b\nrel: a c");
    FAIL() << "expected ParseError";
  } catch (ParseError const& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 8u);
  }
  EXPECT_THROW(parse_presentation("gens: a a"), ParseError);
  EXPECT_THROW(parse_presentation("rel: a"), ParseError);
  EXPECT_THROW(parse_presentation("gens: a\nfoo: a"), ParseError);
  EXPECT_THROW(parse_presentation(""), ParseError);
  EXPECT_THROW(parse_presentation("gens: a\ngens: b"), ParseError);
}

TEST(Presentation, RenderRoundTripsOnRandomPresentations) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t g = 1 + rng() % 3;
    std::vector<std::string> names = (trial % 2) ? default_generator_names(g)
                                                 : std::vector<std::string>{"x1", "yy", "z_3"};
    names.resize(g);
    std::vector<Word> rels;
    for (std::size_t r = rng() % 4; r > 0; --r) rels.push_back(oracle::random_word(rng, g, 8));
    Presentation p(names, rels);
    std::string text = render_presentation(p);
    EXPECT_EQ(parse_presentation(text), p) << text;
    EXPECT_EQ(render_presentation(parse_presentation(text)), text);
  }
}

TEST(Tietze, StabilizeAddsGeneratorWithSingleLetterRelator) {
  Presentation p = parse_presentation("gens: a\n");
  Presentation s = tietze_stabilize(p, 1);
  EXPECT_EQ(s.generator_names(), (std::vector<std::string>{"a", "g1"}));
  ASSERT_EQ(s.relator_count(), 1u);
  EXPECT_EQ(s.relator(0), Word::generator(1));
  EXPECT_EQ(render_presentation(s), "gens: a g1\nrel: g1\n");
  EXPECT_EQ(tietze_stabilize(p, 0), p);
}

TEST(Tietze, StabilizeAvoidsNameClashes) {
  Presentation p = parse_presentation("gens: g1 g3\n");
  Presentation s = tietze_stabilize(p, 2);
  EXPECT_EQ(s.generator_names(), (std::vector<std::string>{"g1", "g3", "g2", "g4"}));
}

TEST(Tietze, EulerCharacteristicBookkeeping) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Word> rels;
    for (std::size_t r = rng() % 4; r > 0; --r) rels.push_back(oracle::random_word(rng, 2, 6));
    Presentation p(ab, rels);
    std::size_t k = rng() % 4;
    Presentation s = tietze_stabilize(p, k);
    EXPECT_EQ(s.generator_count(), p.generator_count() + k);
    EXPECT_EQ(s.relator_count(), p.relator_count() + k);
    EXPECT_EQ(s.euler_characteristic(), p.euler_characteristic());
    EXPECT_EQ(add_trivial_relator(p, k).euler_characteristic(), p.euler_characteristic() + static_cast<long>(k));
  }
}

TEST(Tietze, TransvectionCancelsDuplicateRelator) {
  Presentation p = parse_presentation("gens: a\nrel: a\nrel: a\n");
  Presentation q = tietze_transvect(p, 1, 0, Word{}, -1);
  EXPECT_EQ(q.relator(0), Word::generator(0));
  EXPECT_TRUE(q.relator(1).empty());
}

TEST(Tietze, TransvectionWithInverseSignIsUndone) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Presentation p(ab, {oracle::random_word(rng, 2, 6), oracle::random_word(rng, 2, 6)});
    Word conj = oracle::random_word(rng, 2, 4);
    Presentation there = tietze_transvect(p, 0, 1, conj, 1);
    EXPECT_EQ(tietze_transvect(there, 0, 1, conj, -1), p);
  }
}

TEST(Tietze, TransvectionErrors) {
  Presentation p = parse_presentation("gens: a\nrel: a\nrel: a\n");
  EXPECT_THROW(tietze_transvect(p, 0, 0, Word{}, 1), std::invalid_argument);
  EXPECT_THROW(tietze_transvect(p, 0, 2, Word{}, 1), std::out_of_range);
  EXPECT_THROW(tietze_transvect(p, 0, 1, Word::generator(3), 1), std::out_of_range);
}

TEST(Tietze, AddTrivialRelator) {
  Presentation p = parse_presentation("gens: a b\nrel: abAB\n");
  EXPECT_EQ(add_trivial_relator(p, 0), p);
  Presentation q = add_trivial_relator(p, 2);
  EXPECT_EQ(q.relator_count(), 3u);
  EXPECT_TRUE(q.relator(2).empty());
}

TEST(Tietze, ConsequenceRelatorNeedsACertificate) {
  Presentation p = parse_presentation("gens: a b\nrel: a b A B\n");
  Word conj = w("b");
  Word claimed = conj * p.relator(0).inverse() * conj.inverse();
  Presentation q = add_consequence_relator(p, claimed, {{conj, 0, -1}});
  EXPECT_EQ(q.relator(1), claimed);
  EXPECT_NO_THROW(add_consequence_relator(p, Word{}, {}));
  EXPECT_THROW(add_consequence_relator(p, w("a"), {}), Error);
  EXPECT_THROW(add_consequence_relator(p, claimed, {{Word{}, 0, 1}}), Error);
}
