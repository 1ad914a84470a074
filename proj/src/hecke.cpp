#include "heckelib/hecke.hpp"

#include <sstream>

namespace hecke {

namespace {

const FracLaurent& v2_minus_1() {
  static const FracLaurent c(LaurentPoly::v(2) - LaurentPoly(1));
  return c;
}
const FracLaurent& v2() {
  static const FracLaurent c(LaurentPoly::v(2));
  return c;
}

}  // namespace

HeckeElt HeckeElt::unit(const CoxeterGroup& W) { return basis(W, W.identity()); }

HeckeElt HeckeElt::basis(const CoxeterGroup& W, Element w) {
  HeckeElt h(W);
  h.set(w, FracLaurent(1));
  return h;
}

FracLaurent HeckeElt::coeff(Element w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? FracLaurent() : it->second;
}

void HeckeElt::set(Element w, FracLaurent c) {
  if (&w.group() != W_) throw GroupMismatch("basis element from a different group");
  if (c.is_zero())
    coeffs_.erase(w);
  else
    coeffs_[w] = std::move(c);
}

void HeckeElt::add_to(Element w, const FracLaurent& c) {
  if (&w.group() != W_) throw GroupMismatch("basis element from a different group");
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_[w] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

void HeckeElt::check_same(const HeckeElt& o) const {
  if (W_ != o.W_) throw GroupMismatch("Hecke elements over different groups");
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt r(*W_);
  for (const auto& [w, c] : coeffs_) r.coeffs_[w] = -c;
  return r;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  check_same(o);
  for (const auto& [w, c] : o.coeffs_) add_to(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  check_same(o);
  for (const auto& [w, c] : o.coeffs_) add_to(w, -c);
  return *this;
}

bool operator==(const HeckeElt& a, const HeckeElt& b) {
  a.check_same(b);
  return a.coeffs_ == b.coeffs_;
}

HeckeElt HeckeElt::scaled(const FracLaurent& c) const {
  HeckeElt r(*W_);
  if (c.is_zero()) return r;
  for (const auto& [w, co] : coeffs_) r.coeffs_[w] = co * c;
  return r;
}

HeckeElt HeckeElt::mul_gen_right(int s) const {
  HeckeElt r(*W_);
  for (const auto& [w, c] : coeffs_) {
    Element ws = W_->right_mul(w, s);
    if (ws.length() > w.length()) {
      r.add_to(ws, c);
    } else {
      r.add_to(w, c * v2_minus_1());
      r.add_to(ws, c * v2());
    }
  }
  return r;
}

HeckeElt HeckeElt::mul_gen_left(int s) const {
  HeckeElt r(*W_);
  for (const auto& [w, c] : coeffs_) {
    Element sw = W_->left_mul(s, w);
    if (sw.length() > w.length()) {
      r.add_to(sw, c);
    } else {
      r.add_to(w, c * v2_minus_1());
      r.add_to(sw, c * v2());
    }
  }
  return r;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  if (&a.group() != &b.group()) throw GroupMismatch("Hecke elements over different groups");
  HeckeElt r(a.group());
  for (const auto& [x, cx] : a.coeffs()) {
    // T_x * b, applying the letters of x from the right end inward
    HeckeElt t = b;
    const auto& word = x.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = t.mul_gen_left(*it);
    r += t.scaled(cx);
  }
  return r;
}

HeckeElt t_inverse(const CoxeterGroup& W, Element w) {
  static const FracLaurent vminus2(LaurentPoly::v(-2));
  static const FracLaurent vminus2_minus_1(LaurentPoly::v(-2) - LaurentPoly(1));
  HeckeElt r = HeckeElt::unit(W);
  const auto& word = W.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    // multiply on the right by T_s^{-1} = v^-2 T_s + (v^-2 - 1) T_e
    HeckeElt nxt = r.mul_gen_right(*it).scaled(vminus2);
    nxt += r.scaled(vminus2_minus_1);
    r = nxt;
  }
  return r;
}

HeckeElt bar(const HeckeElt& h) {
  const CoxeterGroup& W = h.group();
  HeckeElt r(W);
  for (const auto& [w, c] : h.coeffs()) r += t_inverse(W, w.inverse()).scaled(c.bar());
  return r;
}

HeckeElt transpose(const HeckeElt& h) {
  HeckeElt r(h.group());
  for (const auto& [w, c] : h.coeffs()) r.add_to(w.inverse(), c);
  return r;
}

HeckeElt dagger(const HeckeElt& h) {
  const CoxeterGroup& W = h.group();
  HeckeElt r(W);
  for (const auto& [w, c] : h.coeffs()) {
    LaurentPoly sign = LaurentPoly::monomial((w.length() % 2 == 0) ? 1 : -1, 2 * w.length());
    r += t_inverse(W, w.inverse()).scaled(c * FracLaurent(sign));
  }
  return r;
}

bool is_central(const HeckeElt& h) {
  const CoxeterGroup& W = h.group();
  for (int s = 1; s <= W.rank(); ++s) {
    HeckeElt ts = HeckeElt::basis(W, W.generator(s));
    if (!(mul(ts, h) == mul(h, ts))) return false;
  }
  return true;
}

std::string HeckeElt::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")*T" << w.str();
  }
  return out.str();
}

}  // namespace hecke
