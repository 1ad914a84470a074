#ifndef HECKELIB_DUAL_HPP
#define HECKELIB_DUAL_HPP

#include "heckelib/klbasis.hpp"

namespace dualmod {

using coxeter::CoxeterGroup;
using coxeter::Element;
using hecke::HeckeElt;
using klbasis::KLContext;
using laurent::FracLaurent;

/*
  An element of the dual module H* = Hom(H, A), stored in the basis dual to
  the c-basis up to sign: ct_x(c_y) = (-1)^{l(x)} delta_{x,y}.  The module
  structure is h * phi = (transpose(dagger(h))) phi with (k phi)(h1) =
  phi(k h1), and Lambda: H* -> H sends ct_w to c_{w w0}.
*/
class DualElt {
 public:
  explicit DualElt(const CoxeterGroup& W) : W_(&W) {}

  static DualElt basis(const CoxeterGroup& W, Element w);  // ct_w

  const CoxeterGroup& group() const { return *W_; }
  const std::map<Element, FracLaurent>& coeffs() const { return coeffs_; }
  FracLaurent coeff(Element w) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_to(Element w, const FracLaurent& c);

  DualElt operator-() const;
  DualElt& operator+=(const DualElt& o);
  friend DualElt operator+(DualElt a, const DualElt& b) { return a += b; }
  friend bool operator==(const DualElt& a, const DualElt& b);

  DualElt scaled(const FracLaurent& c) const;

  std::string str() const;

 private:
  const CoxeterGroup* W_;
  std::map<Element, FracLaurent> coeffs_;
};

// evaluation of the functional on h
FracLaurent pair(const DualElt& phi, const HeckeElt& h, KLContext& kl);

// the twisted action h * phi (generic route through transpose and dagger)
DualElt star_action(const HeckeElt& h, const DualElt& phi, KLContext& kl);

// T_s * phi by the closed rules:
//   T_s * ct_w =  v^2 ct_w                                  if sw > w
//   T_s * ct_w = -ct_w + sum_{sy > y} mu(w,y) v ct_y        if sw < w
DualElt star_action_ts(int s, const DualElt& phi, KLContext& kl);

// the A-linear isomorphism ct_w -> c_{w w0}
HeckeElt lambda(const DualElt& phi, KLContext& kl);

// full coefficient matrices, rows and columns in ShortLex order:
//   T_{w0}^{-1} c_x           = sum_y a[x][y] c_y
//   (-v^2)^{-l(w0)} T_{w0} c_x = sum_y b[x][y] c_y
std::vector<std::vector<FracLaurent>> a_coeffs(KLContext& kl);
std::vector<std::vector<FracLaurent>> b_coeffs(KLContext& kl);

}  // namespace dualmod

#endif
