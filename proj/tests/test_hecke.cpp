#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heckelib/hecke.hpp"
#include "support/linsolve.hpp"

using coxeter::CoxeterGroup;
using coxeter::Element;
using hecke::HeckeElt;
using hecke::t_inverse;
using laurent::FracLaurent;
using laurent::LaurentPoly;

namespace {

HeckeElt random_elt(const CoxeterGroup& W, std::mt19937_64& rng) {
  auto elts = W.all_elements();
  HeckeElt h(W);
  std::uniform_int_distribution<int> nterms(1, 4), exp(-3, 3), coef(-4, 4);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    h.add_to(elts[rng() % elts.size()], FracLaurent(LaurentPoly::monomial(coef(rng), exp(rng))));
  return h;
}

// independent route to T_w^{-1}: solve x * T_w = T_e in T-coordinates
HeckeElt t_inverse_by_linear_algebra(const CoxeterGroup& W, Element w) {
  auto elts = W.all_elements();
  const size_t n = elts.size();
  // column j of M = T-coordinates of T_{elts[j]} * T_w
  testsupport::Mat<FracLaurent> M(n, std::vector<FracLaurent>(n));
  for (size_t j = 0; j < n; ++j) {
    HeckeElt prod = mul(HeckeElt::basis(W, elts[j]), HeckeElt::basis(W, w));
    for (const auto& [y, c] : prod.coeffs()) M[y.id()][j] = c;
  }
  std::vector<FracLaurent> rhs(n);
  rhs[W.identity().id()] = FracLaurent(1);
  auto x = testsupport::solve(M, rhs);
  HeckeElt r(W);
  for (size_t j = 0; j < n; ++j) r.add_to(elts[j], x[j]);
  return r;
}

}  // namespace

TEST_CASE("quadratic relation and unit") {
  const auto& W = CoxeterGroup::get("A2");
  HeckeElt ts = HeckeElt::basis(W, W.generator(1));
  HeckeElt sq = mul(ts, ts);
  HeckeElt expected(W);
  expected.add_to(W.generator(1), FracLaurent(LaurentPoly::v(2) - LaurentPoly(1)));
  expected.add_to(W.identity(), FracLaurent(LaurentPoly::v(2)));
  CHECK(sq == expected);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    HeckeElt h = random_elt(W, rng);
    CHECK(mul(HeckeElt::unit(W), h) == h);
    CHECK(mul(h, HeckeElt::unit(W)) == h);
  }

  // lengths add: T_{s1} T_{s2} = T_{s1 s2}
  HeckeElt t12 = mul(HeckeElt::basis(W, W.generator(1)), HeckeElt::basis(W, W.generator(2)));
  CHECK(t12 == HeckeElt::basis(W, W.generator(1) * W.generator(2)));
}

TEST_CASE("t_inverse") {
  const auto& W = CoxeterGroup::get("A2");
  CHECK(t_inverse(W, W.identity()) == HeckeElt::unit(W));

  HeckeElt tsinv = t_inverse(W, W.generator(1));
  HeckeElt expected(W);
  expected.add_to(W.generator(1), FracLaurent(LaurentPoly::v(-2)));
  expected.add_to(W.identity(), FracLaurent(LaurentPoly::v(-2) - LaurentPoly(1)));
  CHECK(tsinv == expected);

  for (Element w : W.all_elements()) {
    CHECK(mul(t_inverse(W, w), HeckeElt::basis(W, w)) == HeckeElt::unit(W));
    CHECK(mul(HeckeElt::basis(W, w), t_inverse(W, w)) == HeckeElt::unit(W));
    // against the linear-algebra oracle
    CHECK(t_inverse(W, w) == t_inverse_by_linear_algebra(W, w));
  }
}

TEST_CASE("associativity") {
  const auto& A2 = CoxeterGroup::get("A2");
  auto elts = A2.all_elements();
  for (Element x : elts)
    for (Element y : elts)
      for (Element z : elts) {
        HeckeElt a = HeckeElt::basis(A2, x), b = HeckeElt::basis(A2, y), c = HeckeElt::basis(A2, z);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      }
  std::mt19937_64 rng(17);
  const auto& A3 = CoxeterGroup::get("A3");
  for (int i = 0; i < 25; ++i) {
    HeckeElt a = random_elt(A3, rng), b = random_elt(A3, rng), c = random_elt(A3, rng);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}

TEST_CASE("involutions") {
  const auto& W = CoxeterGroup::get("A2");
  HeckeElt ts = HeckeElt::basis(W, W.generator(1));
  CHECK(bar(ts) == t_inverse(W, W.generator(1)));
  CHECK(dagger(dagger(ts)) == ts);

  Element s1 = W.generator(1), s2 = W.generator(2);
  CHECK(transpose(HeckeElt::basis(W, s1 * s2)) == HeckeElt::basis(W, s2 * s1));

  std::mt19937_64 rng(23);
  for (int i = 0; i < 15; ++i) {
    HeckeElt a = random_elt(W, rng), b = random_elt(W, rng);
    CHECK(bar(mul(a, b)) == mul(bar(a), bar(b)));
    CHECK(dagger(mul(a, b)) == mul(dagger(a), dagger(b)));
    CHECK(transpose(mul(a, b)) == mul(transpose(b), transpose(a)));
    CHECK(bar(bar(a)) == a);
    CHECK(dagger(dagger(a)) == a);
    CHECK(transpose(transpose(a)) == a);
  }
}

TEST_CASE("centrality") {
  const auto& W = CoxeterGroup::get("A2");
  CHECK(is_central(HeckeElt::unit(W)));
  CHECK_FALSE(is_central(HeckeElt::basis(W, W.generator(1))));
  HeckeElt tw0 = HeckeElt::basis(W, W.longest_element());
  CHECK(is_central(mul(tw0, tw0)));  // T_{w0}^2 is central
}

TEST_CASE("group mismatch") {
  const auto& A2 = CoxeterGroup::get("A2");
  const auto& B2 = CoxeterGroup::get("B2");
  CHECK_THROWS_AS(mul(HeckeElt::unit(A2), HeckeElt::unit(B2)), coxeter::GroupMismatch);
}
