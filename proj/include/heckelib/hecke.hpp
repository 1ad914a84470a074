#ifndef HECKELIB_HECKE_HPP
#define HECKELIB_HECKE_HPP

#include <map>
#include <string>

#include "heckelib/coxeter.hpp"
#include "heckelib/laurent.hpp"

namespace hecke {

using coxeter::CoxeterGroup;
using coxeter::Element;
using coxeter::GroupMismatch;
using laurent::FracLaurent;
using laurent::LaurentPoly;

/*
  An element of the Iwahori-Hecke algebra H of W over Q(v) in the T-basis:
  a finitely supported map w -> coefficient.  The defining relations are
    T_w T_w' = T_ww'            when lengths add,
    (T_s + 1)(T_s - v^2) = 0    for generators s.
  Products are computed by applying one generator at a time; no zero
  coefficient is ever stored.
*/
class HeckeElt {
 public:
  explicit HeckeElt(const CoxeterGroup& W) : W_(&W) {}

  static HeckeElt zero(const CoxeterGroup& W) { return HeckeElt(W); }
  static HeckeElt unit(const CoxeterGroup& W);                 // T_e
  static HeckeElt basis(const CoxeterGroup& W, Element w);     // T_w
  static HeckeElt basis(Element w) { return basis(w.group(), w); }

  const CoxeterGroup& group() const { return *W_; }
  const std::map<Element, FracLaurent>& coeffs() const { return coeffs_; }
  FracLaurent coeff(Element w) const;
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  void set(Element w, FracLaurent c);
  void add_to(Element w, const FracLaurent& c);

  HeckeElt operator-() const;
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b);

  HeckeElt scaled(const FracLaurent& c) const;

  // right and left multiplication by the generator T_s
  HeckeElt mul_gen_right(int s) const;
  HeckeElt mul_gen_left(int s) const;

  std::string str() const;

 private:
  const CoxeterGroup* W_;
  std::map<Element, FracLaurent> coeffs_;
  void check_same(const HeckeElt& o) const;
};

HeckeElt mul(const HeckeElt& a, const HeckeElt& b);
inline HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return mul(a, b); }

// T_w^{-1}, as a product of T_s^{-1} = v^-2 T_s + (v^-2 - 1) T_e over a
// reduced word of w, reversed
HeckeElt t_inverse(const CoxeterGroup& W, Element w);

HeckeElt bar(const HeckeElt& h);        // semilinear ring involution, v^j T_w -> v^-j (T_{w^-1})^-1
HeckeElt transpose(const HeckeElt& h);  // algebra antiautomorphism, T_w -> T_{w^-1}
HeckeElt dagger(const HeckeElt& h);     // algebra involution, T_w -> (-v^2)^{l(w)} (T_{w^-1})^-1

// h commutes with every T_s (sufficient for centrality)
bool is_central(const HeckeElt& h);

}  // namespace hecke

#endif
