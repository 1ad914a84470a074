#include "heckelib/klbasis.hpp"

#include <algorithm>

namespace klbasis {

namespace {

uint64_t pair_key(uint32_t y, uint32_t w) { return (static_cast<uint64_t>(y) << 32) | w; }

// extract P(q) from P(v^2): exponents must be even and >= 0
LaurentPoly unsquare(const LaurentPoly& p) {
  LaurentPoly q;
  for (const auto& [e, c] : p.terms()) {
    if (e < 0 || e % 2 != 0) throw NoSolution("Kazhdan-Lusztig coefficient is not a polynomial in q");
    q += LaurentPoly::monomial(c, e / 2);
  }
  return q;
}

}  // namespace

KLContext::KLContext(const CoxeterGroup& W) : W_(&W) {
  bar_t_.resize(W.size());
  oracle_.resize(W.size());
  c_memo_.resize(W.size());
}

KLContext& KLContext::get(const CoxeterGroup& W) {
  static std::mutex mu;
  static std::map<const CoxeterGroup*, std::unique_ptr<KLContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&W);
  if (it == cache.end()) it = cache.emplace(&W, std::make_unique<KLContext>(W)).first;
  return *it->second;
}

LaurentPoly KLContext::kl_polynomial(Element y, Element w) {
  std::lock_guard<std::mutex> lock(mu_);
  return kl_unlocked(y.id(), w.id());
}

LaurentPoly KLContext::kl_unlocked(uint32_t y, uint32_t w) {
  const CoxeterGroup& W = *W_;
  Element ye = W.element(y), we = W.element(w);
  if (!W.bruhat_leq(ye, we)) return LaurentPoly();
  if (y == w) return LaurentPoly(1);
  uint64_t key = pair_key(y, w);
  if (auto it = p_memo_.find(key); it != p_memo_.end()) return it->second;

  int s = W.word(we).front();  // left descent of w
  Element u = W.left_mul(s, we);
  Element sy = W.left_mul(s, ye);
  bool sy_down = sy.length() < ye.length();
  LaurentPoly p;
  if (sy_down)
    p = kl_unlocked(sy.id(), u.id()) + LaurentPoly::v(1) * kl_unlocked(y, u.id());
  else
    p = LaurentPoly::v(1) * kl_unlocked(sy.id(), u.id()) + kl_unlocked(y, u.id());
  for (Element z : W.all_elements()) {
    if (!(W.left_mul(s, z).length() < z.length())) continue;
    if (!W.bruhat_leq(ye, z) || !W.bruhat_leq(z, u) || z == u) continue;
    Int m = mu_unlocked(z.id(), u.id());
    if (m == 0) continue;
    long half = (we.length() - z.length()) / 2;
    p -= LaurentPoly::monomial(m, half) * kl_unlocked(y, z.id());
  }
  p_memo_[key] = p;
  return p;
}

Int KLContext::mu_unlocked(uint32_t y, uint32_t w) {
  const CoxeterGroup& W = *W_;
  Element ye = W.element(y), we = W.element(w);
  if (ye.length() > we.length()) {
    std::swap(y, w);
    std::swap(ye, we);
  }
  int d = we.length() - ye.length();
  if (d % 2 == 0) return 0;
  LaurentPoly p = kl_unlocked(y, w);
  return p.coeff((d - 1) / 2);
}

Int KLContext::mu(Element y, Element w) {
  std::lock_guard<std::mutex> lock(mu_);
  return mu_unlocked(y.id(), w.id());
}

LaurentPoly KLContext::inverse_kl(Element y, Element w) {
  const CoxeterGroup& W = *W_;
  Element w0 = W.longest_element();
  LaurentPoly p = kl_polynomial(w0 * w, w0 * y);
  int d = w.length() - y.length();
  return (d % 2 == 0) ? p : -p;
}

HeckeElt KLContext::c_basis(Element w) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (c_memo_[w.id()]) return *c_memo_[w.id()];
  }
  const CoxeterGroup& W = *W_;
  HeckeElt c(W);
  for (Element y : W.all_elements()) {
    LaurentPoly p = kl_polynomial(y, w);
    if (p.is_zero()) continue;
    c.add_to(y, FracLaurent(p.subst_square().shifted(-w.length())));
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (!c_memo_[w.id()]) c_memo_[w.id()] = c;
  return c;
}

CCoords KLContext::mul_ts_c(int s, Element w) {
  const CoxeterGroup& W = *W_;
  CCoords out;
  if (W.left_mul(s, w).length() < w.length()) {
    out[w] = FracLaurent(LaurentPoly::v(2));
    return out;
  }
  out[w] = FracLaurent(LaurentPoly(-1));
  for (Element y : W.all_elements()) {
    if (!(W.left_mul(s, y).length() < y.length())) continue;
    Int m = mu(y, w);
    if (m == 0) continue;
    out[y] = FracLaurent(LaurentPoly::monomial(m, 1));
  }
  return out;
}

CCoords KLContext::expand_in_c(const HeckeElt& h) {
  if (&h.group() != W_) throw coxeter::GroupMismatch("element over a different group");
  CCoords out;
  HeckeElt rest = h;
  while (!rest.is_zero()) {
    // ids refine length, so the largest id in the T-support has maximal
    // length; triangularity strips it off
    Element top = rest.coeffs().rbegin()->first;
    FracLaurent gamma = rest.coeff(top) * FracLaurent(LaurentPoly::v(top.length()));
    out[top] = gamma;
    rest -= c_basis(top).scaled(gamma);
  }
  return out;
}

HeckeElt KLContext::expand_in_T(const CCoords& coords) {
  HeckeElt h(*W_);
  for (const auto& [w, c] : coords) h += c_basis(w).scaled(c);
  return h;
}

/*
  bar(t_y) in the normalized basis t_z = v^{-l(z)} T_z, as a dense row of
  Laurent polynomials indexed by z.  Unitriangular with diagonal 1.
*/
const std::vector<LaurentPoly>& KLContext::bar_t_row(uint32_t y) {
  if (bar_t_[y]) return *bar_t_[y];
  const CoxeterGroup& W = *W_;
  Element ye = W.element(y);
  HeckeElt b = hecke::t_inverse(W, ye.inverse());  // bar(T_y)
  std::vector<LaurentPoly> row(W.size());
  for (const auto& [z, c] : b.coeffs())
    row[z.id()] = c.as_laurent().shifted(ye.length() + z.length());
  bar_t_[y] = std::move(row);
  return *bar_t_[y];
}

/*
  The solved row for w: t-coordinates n_z of the unique element

      h = t_w + sum_{z<w} n_z t_z,   bar(h) = h,   n_z in v^-1 Z[v^-1].

  Start from t_w and repeatedly cancel the top defect coefficient of
  bar(h) - h: the defect d_z at the top dirty z has zero constant term and
  satisfies bar(d_z) = -d_z, so adding its negative-exponent part to n_z
  removes it while only disturbing strictly lower rows.
*/
const std::vector<LaurentPoly>& KLContext::oracle_row(uint32_t w) {
  if (oracle_[w]) return *oracle_[w];
  const CoxeterGroup& W = *W_;
  std::vector<LaurentPoly> n(W.size());
  n[w] = LaurentPoly(1);
  std::vector<LaurentPoly> defect(W.size());
  const std::vector<LaurentPoly>& top_row = bar_t_row(w);
  for (uint32_t z = 0; z < W.size(); ++z) defect[z] = top_row[z];
  defect[w] -= LaurentPoly(1);

  // ids refine length, so scanning from the top finds a dirty coefficient of
  // maximal length first
  auto top_dirty = [&]() -> std::optional<uint32_t> {
    for (uint32_t z = static_cast<uint32_t>(W.size()); z-- > 0;)
      if (!defect[z].is_zero()) return z;
    return std::nullopt;
  };

  while (auto zopt = top_dirty()) {
    uint32_t z = *zopt;
    const LaurentPoly& d = defect[z];
    if (d.coeff(0) != 0) throw NoSolution("defect has a constant term; no self-dual completion");
    LaurentPoly alpha;
    for (const auto& [e, c] : d.terms())
      if (e < 0) alpha += LaurentPoly::monomial(c, e);
    if (!(alpha.bar() - alpha == -d)) throw NoSolution("defect is not bar-antisymmetric");
    n[z] += alpha;
    // defect update for h += alpha t_z:  bar(alpha) bar(t_z) - alpha t_z
    LaurentPoly abar = alpha.bar();
    const std::vector<LaurentPoly>& row = bar_t_row(z);
    for (uint32_t u = 0; u < W.size(); ++u)
      if (!row[u].is_zero()) defect[u] += abar * row[u];
    defect[z] -= alpha;
  }

  oracle_[w] = std::move(n);
  return *oracle_[w];
}

LaurentPoly KLContext::kl_oracle(Element y, Element w) {
  std::lock_guard<std::mutex> lock(mu_);
  const std::vector<LaurentPoly>& row = oracle_row(w.id());
  const LaurentPoly& n = row[y.id()];
  if (n.is_zero()) return LaurentPoly();
  // n_y = v^{l(y)-l(w)} P_{y,w}(v^2)
  return unsquare(n.shifted(w.length() - y.length()));
}

}  // namespace klbasis
