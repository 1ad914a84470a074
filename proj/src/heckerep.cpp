#include "heckelib/heckerep.hpp"

#include <algorithm>
#include <map>

namespace heckerep {

Mat mat_identity(int n) {
  Mat m(n, std::vector<FracLaurent>(n));
  for (int i = 0; i < n; ++i) m[i][i] = FracLaurent(1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const size_t n = a.size(), k = b.size(), c = b[0].size();
  Mat r(n, std::vector<FracLaurent>(c));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t l = 0; l < c; ++l) {
        if (b[j][l].is_zero()) continue;
        r[i][l] += a[i][j] * b[j][l];
      }
    }
  return r;
}

FracLaurent mat_trace(const Mat& a) {
  FracLaurent t;
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

Mat HeckeRep::of(Element w) const {
  Mat m = mat_identity(dim);
  for (int s : w.word()) m = mat_mul(m, gens[s - 1]);
  return m;
}

namespace {

// ----- type A: seminormal form on standard Young tableaux -----

using Partition = std::vector<int>;
using Tableau = std::vector<std::pair<int, int>>;  // value k-1 -> (row, col)

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  int n = 0;
  for (int p : shape) n += p;
  std::vector<Tableau> out;
  Tableau cur;
  std::vector<int> filled(shape.size(), 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
      if (filled[r] >= shape[r]) continue;
      if (r > 0 && filled[r] >= filled[r - 1]) continue;
      cur.emplace_back(static_cast<int>(r), filled[r]);
      ++filled[r];
      self(self, k + 1);
      --filled[r];
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string partition_label(const Partition& p, int n) {
  if (p.size() == 1) return "triv";
  if (static_cast<int>(p.size()) == n) return "sgn";
  std::string s;
  for (int part : p) s += std::to_string(part);
  return s;
}

// alpha(r) = (q-1)/(1-q^{-r}) with q = v^2
FracLaurent seminormal_alpha(int r) {
  return FracLaurent(LaurentPoly::v(2) - LaurentPoly(1), LaurentPoly(1) - LaurentPoly::v(-2 * r));
}

HeckeRep type_a_rep(const CoxeterGroup& W, const Partition& shape) {
  int n = W.rank() + 1;
  std::vector<Tableau> tabs = standard_tableaux(shape);
  std::map<Tableau, int> index;
  for (size_t i = 0; i < tabs.size(); ++i) index[tabs[i]] = static_cast<int>(i);

  HeckeRep rep;
  rep.W = &W;
  rep.label = partition_label(shape, n);
  rep.dim = static_cast<int>(tabs.size());
  for (int i = 1; i < n; ++i) {
    Mat m(rep.dim, std::vector<FracLaurent>(rep.dim));
    for (int t = 0; t < rep.dim; ++t) {
      auto [r1, c1] = tabs[t][i - 1];  // box of i
      auto [r2, c2] = tabs[t][i];      // box of i+1
      int rho = (c2 - r2) - (c1 - r1);
      FracLaurent alpha = seminormal_alpha(rho);
      m[t][t] = alpha;
      Tableau swapped = tabs[t];
      std::swap(swapped[i - 1], swapped[i]);
      auto it = index.find(swapped);
      if (it != index.end()) m[it->second][t] = FracLaurent(1) + alpha;
    }
    rep.gens.push_back(std::move(m));
  }
  return rep;
}

// ----- dihedral family -----

HeckeRep dihedral_one_dim(const CoxeterGroup& W, const std::string& label, bool s1_up, bool s2_up) {
  auto eig = [](bool up) {
    return up ? FracLaurent(LaurentPoly::v(2)) : FracLaurent(LaurentPoly(-1));
  };
  HeckeRep rep;
  rep.W = &W;
  rep.label = label;
  rep.dim = 1;
  rep.gens = {Mat{{eig(s1_up)}}, Mat{{eig(s2_up)}}};
  return rep;
}

HeckeRep dihedral_two_dim(const CoxeterGroup& W, int m, int k) {
  // c_k = 2 cos(2 pi k / m), integral exactly for m in {3,4,6}
  int ck;
  if (m == 3) ck = -1;
  else if (m == 4) ck = 0;
  else if (k == 1) ck = 1;   // m = 6
  else ck = -1;              // m = 6, k = 2
  HeckeRep rep;
  rep.W = &W;
  rep.label = "rho" + std::to_string(k);
  rep.dim = 2;
  FracLaurent zero, one(1), v2(LaurentPoly::v(2));
  FracLaurent lam(LaurentPoly::monomial(ck + 2, 2));
  rep.gens = {Mat{{FracLaurent(LaurentPoly(-1)), zero}, {one, v2}},
              Mat{{v2, lam}, {zero, FracLaurent(LaurentPoly(-1))}}};
  return rep;
}

}  // namespace

std::vector<HeckeRep> irreducibles(const CoxeterGroup& W) {
  const std::string& label = W.type().label;
  std::vector<HeckeRep> reps;
  if (label[0] == 'A' && W.rank() <= 3) {
    for (const Partition& p : partitions_of(W.rank() + 1)) reps.push_back(type_a_rep(W, p));
    return reps;
  }
  if (W.rank() == 2) {
    int m = W.type().m_entry(1, 2);
    if (m == 3 || m == 4 || m == 6) {
      reps.push_back(dihedral_one_dim(W, "triv", true, true));
      reps.push_back(dihedral_one_dim(W, "sgn", false, false));
      if (m % 2 == 0) {
        reps.push_back(dihedral_one_dim(W, "alt1", true, false));
        reps.push_back(dihedral_one_dim(W, "alt2", false, true));
      }
      for (int k = 1; k <= (m - 1) / 2; ++k) reps.push_back(dihedral_two_dim(W, m, k));
      return reps;
    }
  }
  throw UnsupportedType("no representation tables for type " + label);
}

FracLaurent trace_T(const HeckeRep& rep, Element w) { return mat_trace(rep.of(w)); }

FracLaurent trace_c(const HeckeRep& rep, Element w, KLContext& kl) {
  FracLaurent t;
  for (Element y : rep.W->all_elements()) {
    LaurentPoly p = kl.kl_polynomial(y, w);
    if (p.is_zero()) continue;
    t += FracLaurent(p.subst_square()) * trace_T(rep, y);
  }
  return t * FracLaurent(LaurentPoly::v(-w.length()));
}

HeckeRep sign_twist(const HeckeRep& rep) {
  HeckeRep out;
  out.W = rep.W;
  out.label = rep.label + "!";
  out.dim = rep.dim;
  FracLaurent shift(LaurentPoly::v(2) - LaurentPoly(1));
  for (const Mat& g : rep.gens) {
    // image of T_s under dagger: -v^2 T_s^{-1} = (v^2-1) I - T_s
    Mat m(rep.dim, std::vector<FracLaurent>(rep.dim));
    for (int i = 0; i < rep.dim; ++i)
      for (int j = 0; j < rep.dim; ++j) m[i][j] = (i == j ? shift - g[i][j] : -g[i][j]);
    out.gens.push_back(std::move(m));
  }
  return out;
}

HeckeElt c_E(const HeckeRep& rep, KLContext& kl) {
  const CoxeterGroup& W = *rep.W;
  Element w0 = W.longest_element();
  HeckeElt out(W);
  for (Element x : W.all_elements()) {
    FracLaurent t = trace_c(rep, w0 * x, kl);
    if (t.is_zero()) continue;
    if (x.length() % 2 != 0) t = -t;
    out += kl.c_basis(x).scaled(t);
  }
  return out;
}

HeckeElt c_prime_E(const HeckeRep& rep) {
  const CoxeterGroup& W = *rep.W;
  HeckeElt out(W);
  for (Element u : W.all_elements()) {
    FracLaurent t = trace_T(rep, u.inverse());
    if (t.is_zero()) continue;
    out.add_to(u, t * FracLaurent(LaurentPoly::v(-2 * u.length())));
  }
  return out;
}

}  // namespace heckerep
