#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "heckelib/coxeter.hpp"

using coxeter::CoxeterGroup;
using coxeter::CoxeterType;
using coxeter::Element;

namespace {

// independent Bruhat oracle: y <= w iff some subword of the canonical word of
// w is a word for y of length l(y)
bool subword_leq(const CoxeterGroup& W, Element y, Element w) {
  const auto& word = W.word(w);
  size_t n = word.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    std::vector<int> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) sub.push_back(word[i]);
    if (static_cast<int>(sub.size()) == y.length() && W.from_word(sub) == y) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(CoxeterGroup::get("A1").size() == 2);
  CHECK(CoxeterGroup::get("A2").size() == 6);
  CHECK(CoxeterGroup::get("A3").size() == 24);
  CHECK(CoxeterGroup::get("A4").size() == 120);
  CHECK(CoxeterGroup::get("B2").size() == 8);
  CHECK(CoxeterGroup::get("G2").size() == 12);
  CHECK(CoxeterGroup::get("I2:5").size() == 10);
  CHECK(CoxeterGroup::get("I2:7").size() == 14);
  CHECK_THROWS_AS(CoxeterGroup::get("H3"), coxeter::UnsupportedType);
  CHECK_THROWS_AS(CoxeterGroup::get("A5"), coxeter::UnsupportedType);
}

TEST_CASE("products and canonical words") {
  const auto& W = CoxeterGroup::get("A2");
  Element s1 = W.generator(1), s2 = W.generator(2);
  CHECK(s1 * s1 == W.identity());
  Element w0 = (s1 * s2) * s1;
  CHECK(w0 == W.longest_element());
  CHECK(w0.length() == 3);
  CHECK(w0.word() == std::vector<int>{1, 2, 1});

  const auto& I4 = CoxeterGroup::get("I2:4");
  Element r = I4.generator(1) * I4.generator(2);
  Element p = I4.identity();
  for (int i = 0; i < 4; ++i) p = p * r;
  CHECK(p == I4.identity());
}

TEST_CASE("length, descents, inverse") {
  const auto& W = CoxeterGroup::get("A2");
  CHECK(W.identity().length() == 0);
  CHECK(W.longest_element().descents_left() == std::vector<int>{1, 2});
  std::mt19937_64 rng(3);
  const auto& A3 = CoxeterGroup::get("A3");
  auto elts = A3.all_elements();
  for (int i = 0; i < 50; ++i) {
    Element w = elts[rng() % elts.size()];
    CHECK(w.inverse().length() == w.length());
    CHECK(w * w.inverse() == A3.identity());
  }
}

TEST_CASE("canonical words are reduced and ShortLex minimal") {
  for (const char* lbl : {"A3", "B2", "G2"}) {
    const auto& W = CoxeterGroup::get(lbl);
    for (Element w : W.all_elements()) {
      CHECK(W.from_word(w.word()) == w);
      CHECK(static_cast<int>(w.word().size()) == w.length());
      // re-canonicalization of a product of canonical forms is deterministic
      for (int s = 1; s <= W.rank(); ++s) {
        Element ws = W.right_mul(w, s);
        CHECK(W.from_word(ws.word()) == ws);
      }
    }
  }
}

TEST_CASE("bruhat order matches the subword criterion") {
  const auto& A2 = CoxeterGroup::get("A2");
  Element s1 = A2.generator(1), s2 = A2.generator(2);
  CHECK(A2.bruhat_leq(s1, s1 * s2));
  CHECK_FALSE(A2.bruhat_leq(s1, s2));
  for (const char* lbl : {"A2", "B2", "G2"}) {
    const auto& W = CoxeterGroup::get(lbl);
    for (Element y : W.all_elements())
      for (Element w : W.all_elements()) CHECK(W.bruhat_leq(y, w) == subword_leq(W, y, w));
  }
}

TEST_CASE("bruhat order properties") {
  const auto& W = CoxeterGroup::get("A3");
  auto elts = W.all_elements();
  Element e = W.identity(), w0 = W.longest_element();
  for (Element w : elts) {
    CHECK(W.bruhat_leq(e, w));
    CHECK(W.bruhat_leq(w, w0));
    for (Element y : elts) {
      if (W.bruhat_leq(y, w)) {
        CHECK(y.length() <= w.length());
        if (y.length() == w.length()) CHECK(y == w);
      }
    }
  }
  // antiautomorphism: y <= w iff w0*w <= w0*y, exhaustive in A2 and B2
  for (const char* lbl : {"A2", "B2"}) {
    const auto& G = CoxeterGroup::get(lbl);
    Element g0 = G.longest_element();
    for (Element y : G.all_elements())
      for (Element w : G.all_elements())
        CHECK(G.bruhat_leq(y, w) == G.bruhat_leq(g0 * w, g0 * y));
  }
}

TEST_CASE("exchange property spot check") {
  std::mt19937_64 rng(11);
  const auto& W = CoxeterGroup::get("A3");
  auto elts = W.all_elements();
  for (int i = 0; i < 200; ++i) {
    Element w = elts[rng() % elts.size()];
    int s = 1 + static_cast<int>(rng() % W.rank());
    Element sw = W.left_mul(s, w);
    if (sw.length() < w.length()) {
      // s followed by a reduced word of sw is a reduced word of w starting with s
      std::vector<int> word{s};
      word.insert(word.end(), sw.word().begin(), sw.word().end());
      CHECK(W.from_word(word) == w);
      CHECK(static_cast<int>(word.size()) == w.length());
    }
  }
}

TEST_CASE("longest element and omega") {
  const auto& A1 = CoxeterGroup::get("A1");
  CHECK(A1.longest_element() == A1.generator(1));
  const auto& A2 = CoxeterGroup::get("A2");
  CHECK(A2.longest_element().length() == 3);
  CHECK(A2.omega(A2.generator(1)) == A2.generator(2));
  for (const char* lbl : {"A3", "B2", "G2"}) {
    const auto& W = CoxeterGroup::get(lbl);
    for (Element w : W.all_elements()) {
      CHECK(W.omega(W.omega(w)) == w);
      CHECK(W.omega(w).length() == w.length());
    }
  }
}

TEST_CASE("conjugacy classes") {
  const auto& A2 = CoxeterGroup::get("A2");
  CHECK(A2.conjugacy_classes().size() == 3);  // matches S3
  const auto& A3 = CoxeterGroup::get("A3");
  CHECK(A3.conjugacy_classes().size() == 5);  // partitions of 4
  const auto& G2 = CoxeterGroup::get("G2");
  CHECK(G2.conjugacy_classes().size() == 6);
  // classes partition the group and are closed under conjugation by generators
  std::size_t total = 0;
  for (const auto& cl : A3.conjugacy_classes()) {
    total += cl.size();
    for (Element x : cl)
      for (int s = 1; s <= A3.rank(); ++s) {
        Element c = A3.left_mul(s, A3.right_mul(x, s));
        CHECK(A3.class_of(c) == A3.class_of(x));
      }
  }
  CHECK(total == A3.size());
}

TEST_CASE("group mismatch is rejected") {
  const auto& A2 = CoxeterGroup::get("A2");
  const auto& B2 = CoxeterGroup::get("B2");
  CHECK_THROWS_AS((void)(A2.generator(1) * B2.generator(1)), coxeter::GroupMismatch);
  CHECK_THROWS_AS((void)A2.bruhat_leq(A2.generator(1), B2.generator(1)), coxeter::GroupMismatch);
}
