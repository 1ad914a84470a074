#include "heckelib/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace laurent {

namespace {

Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// dense coefficient vector of a Laurent polynomial shifted so exponents start at 0
std::vector<Int> dense_shifted(const LaurentPoly& p) {
  std::vector<Int> d(static_cast<size_t>(p.max_exp() - p.min_exp()) + 1);
  for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e - p.min_exp())] = c;
  return d;
}

void dense_trim(std::vector<Int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Int dense_content(const std::vector<Int>& a) {
  Int g = 0;
  for (const auto& c : a) g = int_gcd(g, c);
  return g;
}

void dense_make_primitive(std::vector<Int>& a) {
  Int g = dense_content(a);
  if (g == 0) return;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
}

// pseudo-remainder of a by b (deg a >= deg b, b nonzero)
std::vector<Int> dense_prem(std::vector<Int> a, const std::vector<Int>& b) {
  const Int& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    Int la = a.back();
    size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    dense_trim(a);
  }
  return a;
}

LaurentPoly from_dense(const std::vector<Int>& d, long base_exp) {
  LaurentPoly p;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) p += LaurentPoly::monomial(d[i], base_exp + static_cast<long>(i));
  return p;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(Int c) {
  if (c != 0) terms_[0] = std::move(c);
}

LaurentPoly LaurentPoly::monomial(Int c, long e) {
  LaurentPoly p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::v(long e) { return monomial(1, e); }

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::leading_coeff() const { return terms_.rbegin()->second; }

void LaurentPoly::put(long e, Int c) {
  if (c != 0) terms_[e] = std::move(c);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      long e = ea + eb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_[e] = ca * cb;
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, co] : terms_) r.terms_[e] = co * c;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::alternated() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = (e % 2 != 0) ? -c : c;
  return r;
}

LaurentPoly LaurentPoly::subst_square() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[2 * e] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
  LaurentPoly r(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) g = int_gcd(g, c);
  return g;
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& b) const {
  if (b.is_zero()) throw std::logic_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  std::vector<Int> da = dense_shifted(*this), db = dense_shifted(b);
  if (da.size() < db.size()) throw std::logic_error("inexact polynomial division");
  std::vector<Int> q(da.size() - db.size() + 1);
  for (size_t k = q.size(); k-- > 0;) {
    Int top = da[k + db.size() - 1];
    if (top == 0) continue;
    if (top % db.back() != 0) throw std::logic_error("inexact polynomial division");
    q[k] = top / db.back();
    for (size_t i = 0; i < db.size(); ++i) da[k + i] -= q[k] * db[i];
  }
  for (const auto& c : da)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  return from_dense(q, min_exp() - b.min_exp());
}

Rat LaurentPoly::eval(const Rat& t) const {
  Rat r = 0;
  for (const auto& [e, c] : terms_) r += Rat(c) * rat_pow(t, e);
  return r;
}

std::pair<Rat, Rat> LaurentPoly::eval_at_sqrt(const Rat& t) const {
  Rat a = 0, b = 0;
  for (const auto& [e, c] : terms_) {
    if (e % 2 == 0) {
      a += Rat(c) * rat_pow(t, e / 2);
    } else {
      // v^e = sqrt(t) * t^((e-1)/2); e-1 is even so the division is exact
      b += Rat(c) * rat_pow(t, (e - 1) / 2);
    }
  }
  return {a, b};
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int ac = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (e == 0) {
      out << ac;
    } else {
      if (ac != 1) out << ac << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  auto normalize = [](std::vector<Int> d) {
    dense_make_primitive(d);
    return d;
  };
  if (a.is_zero() || b.is_zero()) {
    std::vector<Int> d = normalize(dense_shifted(a.is_zero() ? b : a));
    return from_dense(d, 0);
  }
  // primitive Euclidean algorithm on the shifted ordinary polynomials
  std::vector<Int> x = normalize(dense_shifted(a));
  std::vector<Int> y = normalize(dense_shifted(b));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Int> r = dense_prem(x, y);
    dense_make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return from_dense(x, 0);
}

std::optional<Rat> exact_sqrt(const Rat& t) {
  if (t < 0) return std::nullopt;
  Int n = numerator(t), d = denominator(t);
  Int sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rat(sn, sd);
}

Rat rat_pow(const Rat& t, long e) {
  if (e == 0) return Rat(1);
  if (t == 0) {
    if (e < 0) throw std::domain_error("0 raised to a negative power");
    return Rat(0);
  }
  Rat base = e > 0 ? t : Rat(denominator(t), numerator(t));
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rat r = 1;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

Rat specialize(const LaurentPoly& p, const Rat& t, SpecMode mode) {
  if (mode == SpecMode::V) return p.eval(t);
  bool all_even = true;
  for (const auto& [e, c] : p.terms())
    if (e % 2 != 0) {
      all_even = false;
      break;
    }
  if (all_even) {
    Rat r = 0;
    for (const auto& [e, c] : p.terms()) r += Rat(c) * rat_pow(t, e / 2);
    return r;
  }
  auto s = exact_sqrt(t);
  if (!s) throw OddExponent("odd exponent under v^2-specialization and t has no exact square root");
  return p.eval(*s);
}

QuadRat::QuadRat(Rat a_, Rat b_, Rat t_) : a(std::move(a_)), b(std::move(b_)), t(std::move(t_)) {
  if (auto s = exact_sqrt(t)) {  // collapse into Q when sqrt(t) is rational
    a += b * (*s);
    b = 0;
  }
  if (b == 0) t = 0;
}

std::string QuadRat::str() const {
  std::ostringstream out;
  out << a;
  if (b != 0) out << "+" << b << "*sqrt(" << t << ")";
  return out.str();
}

FracLaurent::FracLaurent(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("zero denominator");
  reduce();
}

void FracLaurent::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_one()) {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
    Int c = int_gcd(num_.content(), den_.content());
    if (c > 1) {
      LaurentPoly cc(c);
      num_ = num_.divexact(cc);
      den_ = den_.divexact(cc);
    }
    long k = den_.min_exp();
    if (k != 0) {
      num_ = num_.shifted(-k);
      den_ = den_.shifted(-k);
    }
    if (den_.leading_coeff() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
}

const LaurentPoly& FracLaurent::as_laurent() const {
  if (!is_laurent()) throw NonLaurentCoefficient("coefficient is a proper fraction: " + str());
  return num_;
}

FracLaurent FracLaurent::operator-() const {
  FracLaurent r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

FracLaurent& FracLaurent::operator+=(const FracLaurent& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  if (num_.is_zero())
    den_ = LaurentPoly(1);
  else
    reduce();
  return *this;
}

FracLaurent& FracLaurent::operator-=(const FracLaurent& o) { return *this += -o; }

FracLaurent& FracLaurent::operator*=(const FracLaurent& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  if (!(den_.is_one())) reduce();
  return *this;
}

FracLaurent operator/(const FracLaurent& a, const FracLaurent& b) { return a * b.inv(); }

FracLaurent FracLaurent::inv() const {
  if (num_.is_zero()) throw ZeroDenominator("inverse of zero");
  return FracLaurent(den_, num_);
}

FracLaurent FracLaurent::bar() const { return FracLaurent(num_.bar(), den_.bar()); }

Rat FracLaurent::eval(const Rat& t) const {
  Rat d = den_.eval(t);
  if (d == 0) throw ZeroDenominator("denominator vanishes at specialization point");
  return num_.eval(t) / d;
}

QuadRat FracLaurent::eval_v2(const Rat& t) const {
  // rationalize: num/den = num*den(-v) / (den(v)*den(-v)), the new denominator
  // is even in v so its value at v = sqrt(t) is rational
  LaurentPoly dalt = den_.alternated();
  LaurentPoly n = num_ * dalt;
  LaurentPoly d = den_ * dalt;
  auto [da, db] = d.eval_at_sqrt(t);
  if (db != 0) throw std::logic_error("even polynomial evaluated with irrational part");
  if (da == 0) throw ZeroDenominator("denominator vanishes at v^2 = " + t.str());
  auto [na, nb] = n.eval_at_sqrt(t);
  return QuadRat(na / da, nb / da, t);
}

std::string FracLaurent::str(const std::string& var) const {
  if (is_laurent()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace laurent
