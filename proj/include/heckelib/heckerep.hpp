#ifndef HECKELIB_HECKEREP_HPP
#define HECKELIB_HECKEREP_HPP

#include <string>
#include <vector>

#include "heckelib/klbasis.hpp"

namespace heckerep {

using coxeter::CoxeterGroup;
using coxeter::Element;
using coxeter::UnsupportedType;
using hecke::HeckeElt;
using klbasis::KLContext;
using laurent::FracLaurent;
using laurent::LaurentPoly;

using Mat = std::vector<std::vector<FracLaurent>>;

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
FracLaurent mat_trace(const Mat& a);

/*
  A matrix model of one simple module of H over Q(v), given by the images of
  the generators T_s.  Labels: "triv" and "sgn" everywhere; the remaining
  partitions ("31", "22", ...) in type A; "alt1"/"alt2" (one-dimensional) and
  "rho1", "rho2", ... (two-dimensional) in the dihedral family.
*/
struct HeckeRep {
  const CoxeterGroup* W;
  std::string label;
  int dim = 0;
  std::vector<Mat> gens;  // gens[s-1] = image of T_s

  Mat of(Element w) const;  // product over the canonical reduced word
};

/*
  One representative per isomorphism class of simple modules.

  Type A reps use the rational seminormal form on standard Young tableaux:
  with q = v^2 and r = c(i+1) - c(i) the content difference in the tableau t,
  T_i acts on the t-column by alpha(r) = (q-1)/(1-q^{-r}) on the diagonal and
  1 + alpha(r) toward the swapped tableau.  Dihedral 2-dim reps rho_k pin
  tr(T_{s1}T_{s2}) = v^2 (zeta^k + zeta^{-k}), which forces the braid
  relation; m in {3,4,6} keeps that trace in Z[v^2].

  Supported: A1, A2, A3 and the dihedral types of order m in {3,4,6}
  (so B2 and G2 included); anything else raises UnsupportedType.
*/
std::vector<HeckeRep> irreducibles(const CoxeterGroup& W);

FracLaurent trace_T(const HeckeRep& rep, Element w);
FracLaurent trace_c(const HeckeRep& rep, Element w, KLContext& kl);

// precompose with the dagger involution: swaps the eigenvalues -1 and v^2 of
// every generator image; at v = 1 this is tensoring with sign
HeckeRep sign_twist(const HeckeRep& rep);

// C_E = sum_x (-1)^{l(x)} tr(c_{w0 x}, E) c_x
HeckeElt c_E(const HeckeRep& rep, KLContext& kl);

// C'_E = sum_u v^{-2 l(u)} tr(T_{u^-1}, E) T_u
HeckeElt c_prime_E(const HeckeRep& rep);

}  // namespace heckerep

#endif
