#include "heckelib/dual.hpp"

#include <sstream>

namespace dualmod {

using laurent::LaurentPoly;

DualElt DualElt::basis(const CoxeterGroup& W, Element w) {
  DualElt d(W);
  d.add_to(w, FracLaurent(1));
  return d;
}

FracLaurent DualElt::coeff(Element w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? FracLaurent() : it->second;
}

void DualElt::add_to(Element w, const FracLaurent& c) {
  if (&w.group() != W_) throw coxeter::GroupMismatch("basis element from a different group");
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_[w] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

DualElt DualElt::operator-() const {
  DualElt r(*W_);
  for (const auto& [w, c] : coeffs_) r.coeffs_[w] = -c;
  return r;
}

DualElt& DualElt::operator+=(const DualElt& o) {
  if (W_ != o.W_) throw coxeter::GroupMismatch("dual elements over different groups");
  for (const auto& [w, c] : o.coeffs_) add_to(w, c);
  return *this;
}

bool operator==(const DualElt& a, const DualElt& b) {
  if (a.W_ != b.W_) throw coxeter::GroupMismatch("dual elements over different groups");
  return a.coeffs_ == b.coeffs_;
}

DualElt DualElt::scaled(const FracLaurent& c) const {
  DualElt r(*W_);
  if (c.is_zero()) return r;
  for (const auto& [w, co] : coeffs_) r.coeffs_[w] = co * c;
  return r;
}

std::string DualElt::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")*ct" << w.str();
  }
  return out.str();
}

FracLaurent pair(const DualElt& phi, const HeckeElt& h, KLContext& kl) {
  if (&phi.group() != &h.group()) throw coxeter::GroupMismatch("pairing across different groups");
  klbasis::CCoords coords = kl.expand_in_c(h);
  FracLaurent r;
  for (const auto& [x, px] : phi.coeffs()) {
    auto it = coords.find(x);
    if (it == coords.end()) continue;
    FracLaurent term = px * it->second;
    r += (x.length() % 2 == 0) ? term : -term;
  }
  return r;
}

DualElt star_action(const HeckeElt& h, const DualElt& phi, KLContext& kl) {
  if (&phi.group() != &h.group()) throw coxeter::GroupMismatch("action across different groups");
  const CoxeterGroup& W = h.group();
  HeckeElt k = hecke::transpose(hecke::dagger(h));
  DualElt out(W);
  for (Element y : W.all_elements()) {
    FracLaurent val = pair(phi, mul(k, kl.c_basis(y)), kl);
    if (val.is_zero()) continue;
    out.add_to(y, (y.length() % 2 == 0) ? val : -val);
  }
  return out;
}

DualElt star_action_ts(int s, const DualElt& phi, KLContext& kl) {
  const CoxeterGroup& W = phi.group();
  static const FracLaurent v2(LaurentPoly::v(2));
  DualElt out(W);
  for (const auto& [w, pw] : phi.coeffs()) {
    if (W.left_mul(s, w).length() > w.length()) {
      out.add_to(w, pw * v2);
    } else {
      out.add_to(w, -pw);
      for (Element y : W.all_elements()) {
        if (!(W.left_mul(s, y).length() > y.length())) continue;
        laurent::Int m = kl.mu(w, y);
        if (m == 0) continue;
        out.add_to(y, pw * FracLaurent(LaurentPoly::monomial(m, 1)));
      }
    }
  }
  return out;
}

HeckeElt lambda(const DualElt& phi, KLContext& kl) {
  const CoxeterGroup& W = phi.group();
  Element w0 = W.longest_element();
  HeckeElt out(W);
  for (const auto& [w, c] : phi.coeffs()) out += kl.c_basis(w * w0).scaled(c);
  return out;
}

namespace {

std::vector<std::vector<FracLaurent>> expand_rows(KLContext& kl, const HeckeElt& factor,
                                                  const FracLaurent& scale) {
  const CoxeterGroup& W = kl.group();
  auto elts = W.all_elements();
  std::vector<std::vector<FracLaurent>> m(elts.size(), std::vector<FracLaurent>(elts.size()));
  for (size_t i = 0; i < elts.size(); ++i) {
    klbasis::CCoords row = kl.expand_in_c(mul(factor, kl.c_basis(elts[i])).scaled(scale));
    for (const auto& [y, c] : row) m[i][y.id()] = c;
  }
  return m;
}

}  // namespace

std::vector<std::vector<FracLaurent>> a_coeffs(KLContext& kl) {
  const CoxeterGroup& W = kl.group();
  return expand_rows(kl, hecke::t_inverse(W, W.longest_element()), FracLaurent(1));
}

std::vector<std::vector<FracLaurent>> b_coeffs(KLContext& kl) {
  const CoxeterGroup& W = kl.group();
  int l0 = W.longest_element().length();
  LaurentPoly scale = LaurentPoly::monomial((l0 % 2 == 0) ? 1 : -1, -2 * l0);
  return expand_rows(kl, HeckeElt::basis(W, W.longest_element()), FracLaurent(scale));
}

}  // namespace dualmod
