#include <gtest/gtest.h>

#include "aim8/kernel_list.hpp"
#include "aim8/kernel_pair.hpp"
#include "aim8/sexpr.hpp"
#include "support/generators.hpp"

using namespace aim8;

namespace {

ListValue L(std::string_view text) { return read_aim8(text); }
PairValue P(std::string_view text) { return read_classic(text); }

template <class F>
KernelErrorKind kernel_error(F&& f) {
  try {
    f();
  } catch (const KernelError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no KernelError";
  return KernelErrorKind::NotASymbol;
}

}  // namespace

namespace lk = aim8::list_kernel;
namespace pk = aim8::pair_kernel;

TEST(ListKernel, First) {
  EXPECT_EQ(lk::first(L("(A)")), L("A"));
  EXPECT_EQ(lk::first(L("(A, B, C)")), L("A"));
  EXPECT_EQ(kernel_error([] { lk::first(L("()")); }), KernelErrorKind::UndefinedOnNull);
  EXPECT_EQ(kernel_error([] { lk::first(L("A")); }), KernelErrorKind::UndefinedOnAtom);
}

TEST(ListKernel, Rest) {
  EXPECT_EQ(lk::rest(L("(A)")), L("()"));
  EXPECT_EQ(lk::rest(L("(A, B, C)")), L("(B, C)"));
  EXPECT_EQ(kernel_error([] { lk::rest(L("B")); }), KernelErrorKind::UndefinedOnAtom);
  EXPECT_EQ(kernel_error([] { lk::rest(L("()")); }), KernelErrorKind::UndefinedOnNull);
}

TEST(ListKernel, Combine) {
  EXPECT_EQ(lk::combine(L("A"), L("()")), L("(A)"));
  EXPECT_EQ(lk::combine(L("A"), L("(B, C)")), L("(A, B, C)"));
  EXPECT_EQ(kernel_error([] { lk::combine(L("A"), L("B")); }), KernelErrorKind::AtomicSecondArg);
}

TEST(ListKernel, ErrorCarriesOperationAndOffender) {
  try {
    lk::combine(L("A"), L("B"), "cons");
    FAIL();
  } catch (const KernelError& e) {
    EXPECT_EQ(e.operation(), "cons");
    EXPECT_EQ(std::get<ListValue>(e.offending()), L("B"));
    EXPECT_STREQ(e.what(), "cons: second argument is atomic");
  }
}

TEST(ListKernel, Predicates) {
  EXPECT_TRUE(lk::atom(L("A")));
  EXPECT_FALSE(lk::atom(L("()")));
  EXPECT_FALSE(lk::atom(L("(A)")));
  EXPECT_TRUE(lk::eq(L("A"), L("A")));
  EXPECT_FALSE(lk::eq(L("A"), L("B")));
  EXPECT_EQ(kernel_error([] { lk::eq(L("()"), L("A")); }), KernelErrorKind::NotASymbol);
  EXPECT_EQ(kernel_error([] { lk::eq(L("A"), L("(A)")); }), KernelErrorKind::NotASymbol);
  EXPECT_TRUE(lk::null(L("()")));
  EXPECT_FALSE(lk::null(L("A")));
  EXPECT_FALSE(lk::null(L("(())")));
}

TEST(ListKernel, SelectorConstructorLaws) {
  props::Gen gen(3);
  for (int i = 0; i < 1000; ++i) {
    ListValue e = gen.list_value(4);
    ListValue l = gen.list_only(4);
    ListValue c = lk::combine(e, l);
    ASSERT_EQ(lk::first(c), e);
    ASSERT_EQ(lk::rest(c), l);
    ASSERT_EQ(lk::combine(lk::first(c), lk::rest(c)), c);
  }
}

TEST(ListKernel, SelectorsFailExactlyOnNullAndAtoms) {
  props::Gen gen(4);
  for (int i = 0; i < 2000; ++i) {
    ListValue x = gen.list_value(6);
    bool defined = !x.is_atom() && !x.is_null();
    bool first_ok = true, rest_ok = true;
    try {
      lk::first(x);
    } catch (const KernelError&) {
      first_ok = false;
    }
    try {
      lk::rest(x);
    } catch (const KernelError&) {
      rest_ok = false;
    }
    ASSERT_EQ(first_ok, defined);
    ASSERT_EQ(rest_ok, defined);
  }
}

TEST(PairKernel, ConsCarCdr) {
  EXPECT_EQ(pk::cons(P("A"), P("B")), P("(A . B)"));
  EXPECT_EQ(pk::cons(P("A"), P("NIL")), P("(A)"));
  EXPECT_EQ(print_classic(pk::cons(P("A"), P("(B . C)"))), "(A B . C)");
  EXPECT_EQ(pk::car(P("(A . B)")), P("A"));
  EXPECT_EQ(pk::car(P("(A B)")), P("A"));
  EXPECT_EQ(pk::cdr(P("(A . B)")), P("B"));
  EXPECT_EQ(pk::cdr(P("(A B C)")), P("(B C)"));
  EXPECT_EQ(kernel_error([] { pk::car(P("NIL")); }), KernelErrorKind::UndefinedOnAtom);
  EXPECT_EQ(kernel_error([] { pk::cdr(P("A")); }), KernelErrorKind::UndefinedOnAtom);
}

TEST(PairKernel, Predicates) {
  EXPECT_TRUE(pk::atom(P("NIL")));
  EXPECT_TRUE(pk::atom(P("()")));
  EXPECT_FALSE(pk::atom(P("(A . B)")));
  EXPECT_TRUE(pk::atom(P("A")));
  EXPECT_TRUE(pk::eq(P("NIL"), P("NIL")));
  EXPECT_TRUE(pk::eq(P("A"), P("A")));
  EXPECT_EQ(kernel_error([] { pk::eq(P("(A . B)"), P("(A . B)")); }), KernelErrorKind::NotASymbol);
}

TEST(PairKernel, Proper) {
  EXPECT_TRUE(pk::proper(P("(A B C)")));
  EXPECT_TRUE(pk::proper(P("NIL")));
  EXPECT_FALSE(pk::proper(P("(A . B)")));
  EXPECT_FALSE(pk::proper(P("(A B . C)")));
  EXPECT_FALSE(pk::proper(P("A")));
  // Improper element inside a proper spine is still proper at the top.
  EXPECT_TRUE(pk::proper(P("((A . B) C)")));
}

TEST(PairKernel, ProperTerminatesOnCycles) {
  PairValue x = P("(A)");
  PairHarness::set_tail(x, x);
  EXPECT_FALSE(pk::proper(x));
  PairHarness::set_tail(x, PairValue::nil());

  for (int len : {2, 3, 7, 100}) {
    std::vector<PairValue> items(len, P("A"));
    PairValue list = PairValue::list(items);
    const PairValue* last = &list;
    while (!last->tail().is_nil()) last = &last->tail();
    // Loop back to each possible entry point.
    for (int entry = 0; entry < std::min(len, 5); ++entry) {
      const PairValue* target = &list;
      for (int i = 0; i < entry; ++i) target = &target->tail();
      PairValue hold = *target;
      PairHarness::set_tail(*last, hold);
      EXPECT_FALSE(pk::proper(list)) << len << " " << entry;
      PairHarness::set_tail(*last, PairValue::nil());
    }
  }
}

TEST(PairKernel, Laws) {
  props::Gen gen(5);
  for (int i = 0; i < 1000; ++i) {
    PairValue a = gen.pair_value(5), b = gen.pair_value(5);
    PairValue c = pk::cons(a, b);
    ASSERT_EQ(pk::car(c), a);
    ASSERT_EQ(pk::cdr(c), b);
    ASSERT_EQ(pk::proper(c), pk::proper(b));
  }
}
