#include <gtest/gtest.h>

#include <chrono>

#include "aim8/sexpr.hpp"
#include "support/generators.hpp"

using namespace aim8;

namespace {

ParseError parse_error(std::string_view text, Dialect d) {
  try {
    read_sexpr(text, d);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "'" << text << "' parsed";
  return ParseError(ParseErrorKind::EmptyInput, {}, "");
}

}  // namespace

TEST(ReadAim8, Lists) {
  EXPECT_EQ(read_aim8("(A, B, C)"), ListValue::list({ListValue::atom("A"), ListValue::atom("B"), ListValue::atom("C")}));
  EXPECT_EQ(read_aim8("()"), ListValue());
  EXPECT_EQ(read_aim8("(A)"), ListValue::list({ListValue::atom("A")}));
  EXPECT_EQ(read_aim8("  ( A ,( ), B2 )  # trailing comment"), read_aim8("(A, (), B2)"));
  // Whitespace separators are accepted on input.
  EXPECT_EQ(read_aim8("(A B\n C)"), read_aim8("(A, B, C)"));
  EXPECT_EQ(read_aim8("NIL"), ListValue::atom("NIL"));
}

TEST(ReadAim8, Errors) {
  EXPECT_EQ(parse_error("(A . B)", Dialect::aim8).kind(), ParseErrorKind::DotMisuse);
  EXPECT_EQ(parse_error("(A, .B)", Dialect::aim8).kind(), ParseErrorKind::DotMisuse);
  EXPECT_EQ(parse_error(".", Dialect::aim8).kind(), ParseErrorKind::DotMisuse);
  EXPECT_EQ(parse_error("(A, B", Dialect::aim8).kind(), ParseErrorKind::UnbalancedParen);
  EXPECT_EQ(parse_error(")", Dialect::aim8).kind(), ParseErrorKind::UnbalancedParen);
  EXPECT_EQ(parse_error("(A,)", Dialect::aim8).kind(), ParseErrorKind::UnexpectedChar);
  EXPECT_EQ(parse_error("(,A)", Dialect::aim8).kind(), ParseErrorKind::UnexpectedChar);
  EXPECT_EQ(parse_error("(A,,B)", Dialect::aim8).kind(), ParseErrorKind::UnexpectedChar);
  EXPECT_EQ(parse_error("abc", Dialect::aim8).kind(), ParseErrorKind::UnexpectedChar);
  EXPECT_EQ(parse_error("1A", Dialect::aim8).kind(), ParseErrorKind::UnexpectedChar);
  EXPECT_EQ(parse_error("   # only a comment\n", Dialect::aim8).kind(), ParseErrorKind::EmptyInput);
  EXPECT_EQ(parse_error("A B", Dialect::aim8).kind(), ParseErrorKind::TrailingInput);
  EXPECT_EQ(parse_error("(A) )", Dialect::aim8).kind(), ParseErrorKind::TrailingInput);
}

TEST(ReadAim8, ErrorPositionAndPrefix) {
  ParseError e = parse_error("(A,\n  B . C)", Dialect::aim8);
  EXPECT_EQ(e.position(), (SourcePosition{2, 5}));
  EXPECT_EQ(e.message().rfind("misplaced dot", 0), 0u);
  EXPECT_TRUE(parse_error("(A, (B", Dialect::aim8).incomplete());
  EXPECT_FALSE(parse_error("(A, B))", Dialect::aim8).incomplete());
}

// The four AIM-8 clauses: atoms, (), (e), (e1, es). Every string they generate
// up to a small size must read, and nothing with a dot may.
TEST(ReadAim8, AcceptsExactlyTheFourClauses) {
  std::vector<std::string> level{"A", "()"};
  std::vector<std::string> all = level;
  for (int round = 0; round < 2; ++round) {
    std::vector<std::string> next;
    for (const auto& e : level) next.push_back("(" + e + ")");
    for (const auto& e1 : level)
      for (const auto& e2 : level) next.push_back("(" + e1 + ", " + e2 + ")");
    all.insert(all.end(), next.begin(), next.end());
    level = next;
  }
  for (const auto& s : all) {
    EXPECT_NO_THROW(read_aim8(s)) << s;
    std::string dotted = s;
    for (auto& c : dotted)
      if (c == ',') c = '.';
    if (dotted != s) {
      EXPECT_EQ(parse_error(dotted, Dialect::aim8).kind(), ParseErrorKind::DotMisuse) << dotted;
    }
  }
}

TEST(ReadClassic, PairsAndSugar) {
  EXPECT_EQ(read_classic("(A . B)"), PairValue::pair(PairValue::atom("A"), PairValue::atom("B")));
  EXPECT_EQ(read_classic("(A B)"), read_classic("(A . (B . NIL))"));
  EXPECT_EQ(read_classic("(A, B)"), read_classic("(A B)"));
  EXPECT_EQ(read_classic("()"), PairValue::nil());
  EXPECT_EQ(read_classic("(A B . C)"), read_classic("(A . (B . C))"));
  EXPECT_EQ(read_classic("((A . B) . (C . D))"), PairValue::pair(read_classic("(A . B)"), read_classic("(C . D)")));
}

TEST(ReadClassic, DotMisuse) {
  for (const char* bad : {"( . A)", "(A . )", "(A . B C)", "(A . B . C)", "(A, . B)", ". A"})
    EXPECT_EQ(parse_error(bad, Dialect::classic).kind(), ParseErrorKind::DotMisuse) << bad;
  EXPECT_EQ(parse_error("(A . B", Dialect::classic).kind(), ParseErrorKind::UnbalancedParen);
}

TEST(PrintAim8, Canonical) {
  EXPECT_EQ(print_aim8(ListValue::list({ListValue::atom("A"), ListValue()})), "(A, ())");
  EXPECT_EQ(print_aim8(read_aim8("( A  B (C))")), "(A, B, (C))");
  EXPECT_EQ(print_aim8(ListValue()), "()");
}

TEST(PrintClassic, SugarAndDots) {
  auto A = PairValue::atom("A"), B = PairValue::atom("B"), NIL = PairValue::nil();
  EXPECT_EQ(print_classic(PairValue::pair(A, PairValue::pair(B, NIL))), "(A B)");
  EXPECT_EQ(print_classic(PairValue::pair(A, B)), "(A . B)");
  EXPECT_EQ(print_classic(NIL), "NIL");
  EXPECT_EQ(print_classic(PairValue::pair(NIL, NIL)), "(NIL)");
  EXPECT_EQ(print_classic(read_classic("(A . (B . C))")), "(A B . C)");
  EXPECT_EQ(print_classic(read_classic("((A . B) C)")), "((A . B) C)");
  // Printing agrees with the list_to_pair expansion.
  EXPECT_EQ(print_classic(list_to_pair(read_aim8("(A, (B, ()), C)"))), "(A (B NIL) C)");
}

TEST(PrintSexpr, KindMismatch) {
  EXPECT_THROW(print_sexpr(AnyValue(PairValue::nil()), Dialect::aim8), KindMismatch);
  EXPECT_THROW(print_sexpr(AnyValue(ListValue()), Dialect::classic), KindMismatch);
  EXPECT_EQ(print_sexpr(AnyValue(ListValue()), Dialect::aim8), "()");
}

TEST(PrintClassic, CycleMarker) {
  PairValue x = read_classic("(A B)");
  PairHarness::set_tail(x.tail(), x);
  EXPECT_EQ(print_classic(x), "(A B . #cycle)");
  PairHarness::set_tail(x.tail(), PairValue::nil());

  PairValue y = read_classic("(A)");
  PairHarness::set_head(y, y);
  EXPECT_EQ(print_classic(y), "(#cycle)");
  PairHarness::set_head(y, PairValue::nil());

  PairValue shared = read_classic("(B)");
  EXPECT_EQ(print_classic(PairValue::list({shared, shared})), "((B) (B))");
}

TEST(RoundTrip, BothDialects) {
  props::Gen gen(21);
  for (int i = 0; i < 1500; ++i) {
    ListValue l = gen.list_value(8);
    ASSERT_EQ(read_aim8(print_aim8(l)), l) << print_aim8(l);
    PairValue p = gen.pair_value(8);
    ASSERT_EQ(read_classic(print_classic(p)), p) << print_classic(p);
  }
}

TEST(RoundTrip, PrintParseIsIdempotent) {
  props::Gen gen(22);
  for (int i = 0; i < 300; ++i) {
    // Messy but valid source: mixed separators and comments.
    ListValue l = gen.list_value(5);
    std::string messy = print_aim8(l);
    for (std::size_t at = messy.find(", "); at != std::string::npos; at = messy.find(", ", at + 1))
      if (gen.chance(0.5)) messy.replace(at, 2, " \n ");
    std::string once = print_aim8(read_aim8(messy + " # end"));
    ASSERT_EQ(print_aim8(read_aim8(once)), once);

    std::string classic = print_classic(list_to_pair(l));
    std::string c1 = print_classic(read_classic(classic));
    ASSERT_EQ(print_classic(read_classic(c1)), c1);
  }
}

TEST(SexprStream, ReadsSequence) {
  SexprStream in("A (B, C)\n# comment\n()", Dialect::aim8);
  std::vector<ListValue> got;
  while (!in.done()) got.push_back(std::get<ListValue>(in.next()));
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[2], ListValue());
}
