#ifndef HECKELIB_KLBASIS_HPP
#define HECKELIB_KLBASIS_HPP

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "heckelib/hecke.hpp"

namespace klbasis {

using coxeter::CoxeterGroup;
using coxeter::Element;
using hecke::HeckeElt;
using laurent::FracLaurent;
using laurent::Int;
using laurent::LaurentPoly;

struct NoSolution : std::logic_error {
  using std::logic_error::logic_error;
};

// c-basis coordinates of a Hecke element
using CCoords = std::map<Element, FracLaurent>;

/*
  Kazhdan-Lusztig data for one group: the polynomials P_{y,w} (in the
  indeterminate q), the mu-function, the self-dual basis

      c_w = v^{-l(w)} sum_y P_{y,w}(v^2) T_y,

  the inverse polynomials Q_{y,w} = (-1)^{l(w)-l(y)} P_{w0 w, w0 y}, and the
  unitriangular base change between T- and c-coordinates.

  P is computed by the classical length recursion: choosing s with sw < w and
  writing u = sw,

      P_{y,w} = q^{1-c} P_{sy,u} + q^c P_{y,u}
                 - sum_{y <= z < u, sz < z} mu(z,u) q^{(l(w)-l(z))/2} P_{y,z}

  with c = 1 when sy < y and c = 0 otherwise.

  kl_oracle recomputes P_{y,w} by a method that shares nothing with that
  recursion: it solves for the unique bar-invariant element with unitriangular
  T-expansion directly, correcting coefficients from the top of the Bruhat
  interval downward using only the bar involution of the Hecke algebra.

  All caches are memo tables guarded by a mutex; fills are idempotent.
*/
class KLContext {
 public:
  explicit KLContext(const CoxeterGroup& W);

  // process-wide cache, one context per group
  static KLContext& get(const CoxeterGroup& W);
  static KLContext& get(const std::string& label) { return get(CoxeterGroup::get(label)); }

  const CoxeterGroup& group() const { return *W_; }

  // P_{y,w} as a polynomial in q; zero unless y <= w, P_{w,w} = 1
  LaurentPoly kl_polynomial(Element y, Element w);

  // same value, computed by the independent bar-invariance solver
  LaurentPoly kl_oracle(Element y, Element w);

  // symmetric mu: the coefficient of q^{(l(w)-l(y)-1)/2} in P for the
  // Bruhat-comparable order of the arguments, 0 on even length differences
  Int mu(Element y, Element w);

  // Q_{y,w}, in q
  LaurentPoly inverse_kl(Element y, Element w);

  HeckeElt c_basis(Element w);

  // T_s * c_w expanded in the c-basis by the closed multiplication rule:
  //   v^2 c_w                                  if sw < w
  //   -c_w + sum_{sy < y} mu(y,w) v c_y        if sw > w
  CCoords mul_ts_c(int s, Element w);

  CCoords expand_in_c(const HeckeElt& h);
  HeckeElt expand_in_T(const CCoords& coords);

 private:
  const CoxeterGroup* W_;
  std::mutex mu_;
  std::map<uint64_t, LaurentPoly> p_memo_;
  std::vector<std::optional<std::vector<LaurentPoly>>> bar_t_;    // bar(t_y) in t-coordinates
  std::vector<std::optional<std::vector<LaurentPoly>>> oracle_;   // solved rows, t-coordinates
  std::vector<std::optional<HeckeElt>> c_memo_;

  LaurentPoly kl_unlocked(uint32_t y, uint32_t w);
  Int mu_unlocked(uint32_t y, uint32_t w);
  const std::vector<LaurentPoly>& bar_t_row(uint32_t y);
  const std::vector<LaurentPoly>& oracle_row(uint32_t w);
};

}  // namespace klbasis

#endif
