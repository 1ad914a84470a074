#include "heckelib/coxeter.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace coxeter {

namespace {

std::vector<uint8_t> compose(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  // (a . b)(i) = a[b[i]]
  std::vector<uint8_t> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::vector<uint8_t> invert(const std::vector<uint8_t>& a) {
  std::vector<uint8_t> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<uint8_t>(i);
  return r;
}

}  // namespace

CoxeterType CoxeterType::parse(const std::string& label) {
  CoxeterType t;
  auto dihedral = [&](int mval, const std::string& lab) {
    t.label = lab;
    t.rank = 2;
    t.m.assign(3, std::vector<int>(3, 2));
    t.m[1][1] = t.m[2][2] = 1;
    t.m[1][2] = t.m[2][1] = mval;
  };
  if (label.size() == 2 && label[0] == 'A' && label[1] >= '1' && label[1] <= '4') {
    int n = label[1] - '0';
    t.label = label;
    t.rank = n;
    t.m.assign(n + 1, std::vector<int>(n + 1, 2));
    for (int s = 1; s <= n; ++s) t.m[s][s] = 1;
    for (int s = 1; s < n; ++s) t.m[s][s + 1] = t.m[s + 1][s] = 3;
    return t;
  }
  if (label == "B2") {
    dihedral(4, "B2");
    return t;
  }
  if (label == "G2") {
    dihedral(6, "G2");
    return t;
  }
  if (label.rfind("I2:", 0) == 0) {
    int mval = 0;
    try {
      mval = std::stoi(label.substr(3));
    } catch (...) {
      throw UnsupportedType("bad dihedral order in type label: " + label);
    }
    if (mval < 3 || mval > 60) throw UnsupportedType("I2:m requires 3 <= m <= 60");
    dihedral(mval, "I2:" + std::to_string(mval));
    return t;
  }
  throw UnsupportedType("unsupported Coxeter type: " + label);
}

std::size_t CoxeterType::order() const {
  if (label[0] == 'A') {
    std::size_t f = 1;
    for (int k = 2; k <= rank + 1; ++k) f *= static_cast<std::size_t>(k);
    return f;
  }
  return 2 * static_cast<std::size_t>(m[1][2]);
}

CoxeterGroup::CoxeterGroup(const CoxeterType& type) : type_(type) { build(); }

void CoxeterGroup::build() {
  const int n = type_.rank;
  int points = 0;
  std::vector<std::vector<uint8_t>> gens;
  if (type_.label[0] == 'A') {
    points = n + 1;
    for (int s = 1; s <= n; ++s) {
      std::vector<uint8_t> p(points);
      std::iota(p.begin(), p.end(), 0);
      std::swap(p[s - 1], p[s]);
      gens.push_back(std::move(p));
    }
  } else {
    int mval = type_.m[1][2];
    points = mval;
    std::vector<uint8_t> r1(points), r2(points);
    for (int x = 0; x < mval; ++x) {
      r1[x] = static_cast<uint8_t>(((-x) % mval + mval) % mval);
      r2[x] = static_cast<uint8_t>(((1 - x) % mval + mval) % mval);
    }
    gens.push_back(std::move(r1));
    gens.push_back(std::move(r2));
  }

  std::map<std::vector<uint8_t>, uint32_t> index;
  std::vector<uint8_t> id_perm(points);
  std::iota(id_perm.begin(), id_perm.end(), 0);
  perms_.push_back(id_perm);
  words_.push_back({});
  index[id_perm] = 0;

  // BFS in ShortLex order: extending the canonical word of x on the right by
  // ascending s reaches each new element first through its ShortLex-minimal
  // reduced word.
  for (uint32_t i = 0; i < perms_.size(); ++i) {
    std::vector<uint8_t> cur = perms_[i];  // copy: perms_ may reallocate
    std::vector<int> curw = words_[i];
    for (int s = 1; s <= n; ++s) {
      std::vector<uint8_t> nxt = compose(cur, gens[s - 1]);
      if (index.find(nxt) == index.end()) {
        uint32_t nid = static_cast<uint32_t>(perms_.size());
        index[nxt] = nid;
        perms_.push_back(nxt);
        std::vector<int> w = curw;
        w.push_back(s);
        words_.push_back(std::move(w));
      }
    }
  }

  if (perms_.size() != type_.order())
    throw std::logic_error("group enumeration does not match the classical order formula");

  const uint32_t N = static_cast<uint32_t>(perms_.size());
  right_.assign(N, std::vector<uint32_t>(n));
  left_.assign(N, std::vector<uint32_t>(n));
  inverse_.assign(N, 0);
  for (uint32_t i = 0; i < N; ++i) {
    for (int s = 1; s <= n; ++s) {
      right_[i][s - 1] = index.at(compose(perms_[i], gens[s - 1]));
      left_[i][s - 1] = index.at(compose(gens[s - 1], perms_[i]));
    }
    inverse_[i] = index.at(invert(perms_[i]));
  }

  w0_ = N - 1;
  std::size_t maxlen = words_[w0_].size();
  for (uint32_t i = 0; i + 1 < N; ++i)
    if (words_[i].size() >= maxlen) throw std::logic_error("longest element is not unique");

  bruhat_rows_.assign(N, {});
  bruhat_done_.assign(N, 0);
}

const CoxeterGroup& CoxeterGroup::get(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<CoxeterGroup>> cache;
  CoxeterType t = CoxeterType::parse(label);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t.label);
  if (it == cache.end()) it = cache.emplace(t.label, std::make_unique<CoxeterGroup>(t)).first;
  return *it->second;
}

uint32_t CoxeterGroup::check(Element w) const {
  if (&w.group() != this) throw GroupMismatch("element does not belong to this group");
  return w.id();
}

Element CoxeterGroup::generator(int s) const {
  if (s < 1 || s > rank()) throw std::out_of_range("generator index out of range");
  return Element(this, right_[0][s - 1]);
}

Element CoxeterGroup::from_word(std::span<const int> word) const {
  uint32_t id = 0;
  for (int s : word) {
    if (s < 1 || s > rank()) throw std::out_of_range("generator index out of range");
    id = right_[id][s - 1];
  }
  return Element(this, id);
}

Element CoxeterGroup::product(Element a, Element b) const {
  uint32_t id = check(a);
  check(b);
  for (int s : words_[b.id()]) id = right_[id][s - 1];
  return Element(this, id);
}

Element CoxeterGroup::left_mul(int s, Element w) const {
  return Element(this, left_[check(w)][s - 1]);
}

Element CoxeterGroup::right_mul(Element w, int s) const {
  return Element(this, right_[check(w)][s - 1]);
}

std::vector<int> CoxeterGroup::descents_left(Element w) const {
  uint32_t id = check(w);
  std::vector<int> ds;
  for (int s = 1; s <= rank(); ++s)
    if (words_[left_[id][s - 1]].size() < words_[id].size()) ds.push_back(s);
  return ds;
}

std::vector<int> CoxeterGroup::descents_right(Element w) const {
  uint32_t id = check(w);
  std::vector<int> ds;
  for (int s = 1; s <= rank(); ++s)
    if (words_[right_[id][s - 1]].size() < words_[id].size()) ds.push_back(s);
  return ds;
}

/*
  Bruhat rows via the descent recursion: for s with sw < w,
    y <= w  iff  (sy < y ? sy <= sw : y <= sw).
  Rows are filled in increasing length order, so the recursion only ever
  consults rows already computed.
*/
const std::vector<char>& CoxeterGroup::bruhat_row(uint32_t w) const {
  if (bruhat_done_[w]) return bruhat_rows_[w];
  std::vector<char> row(size(), 0);
  if (words_[w].empty()) {
    row[0] = 1;
  } else {
    int s = words_[w].front();  // first letter of the canonical word: sw < w
    uint32_t sw = left_[w][s - 1];
    const std::vector<char>& sub = bruhat_row(sw);
    for (uint32_t y = 0; y < size(); ++y) {
      uint32_t sy = left_[y][s - 1];
      if (words_[sy].size() < words_[y].size())
        row[y] = sub[sy];
      else
        row[y] = static_cast<char>(sub[y] | sub[sy]);
    }
  }
  bruhat_rows_[w] = std::move(row);
  bruhat_done_[w] = 1;
  return bruhat_rows_[w];
}

bool CoxeterGroup::bruhat_leq(Element y, Element w) const {
  uint32_t yi = check(y), wi = check(w);
  if (words_[yi].size() > words_[wi].size()) return false;
  return bruhat_row(wi)[yi] != 0;
}

Element CoxeterGroup::omega(Element w) const {
  check(w);
  Element w0 = longest_element();
  return product(product(w0, w), w0);
}

std::vector<Element> CoxeterGroup::all_elements() const {
  std::vector<Element> r;
  r.reserve(size());
  for (uint32_t i = 0; i < size(); ++i) r.emplace_back(this, i);
  return r;
}

const std::vector<std::vector<Element>>& CoxeterGroup::conjugacy_classes() const {
  if (!classes_.empty()) return classes_;
  std::vector<char> seen(size(), 0);
  std::vector<std::size_t> cls(size(), 0);
  std::vector<std::vector<Element>> classes;
  for (uint32_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<uint32_t> orbit{i};
    seen[i] = 1;
    for (size_t k = 0; k < orbit.size(); ++k) {
      for (int s = 1; s <= rank(); ++s) {
        uint32_t c = left_[right_[orbit[k]][s - 1]][s - 1];  // s x s
        if (!seen[c]) {
          seen[c] = 1;
          orbit.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<Element> cl;
    for (uint32_t id : orbit) {
      cls[id] = classes.size();
      cl.emplace_back(this, id);
    }
    classes.push_back(std::move(cl));
  }
  classes_ = std::move(classes);
  class_index_ = std::move(cls);
  return classes_;
}

std::size_t CoxeterGroup::class_of(Element w) const {
  conjugacy_classes();
  return class_index_[check(w)];
}

int Element::length() const { return g_->length(*this); }
const std::vector<int>& Element::word() const { return g_->word(*this); }
Element Element::inverse() const { return g_->inverse(*this); }
std::vector<int> Element::descents_left() const { return g_->descents_left(*this); }
std::vector<int> Element::descents_right() const { return g_->descents_right(*this); }
Element Element::omega() const { return g_->omega(*this); }

Element operator*(Element a, Element b) { return a.g_->product(a, b); }

bool operator==(const Element& a, const Element& b) {
  if (a.g_ != b.g_) throw GroupMismatch("comparing elements of different groups");
  return a.id_ == b.id_;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.g_ != b.g_) throw GroupMismatch("comparing elements of different groups");
  return a.id_ <=> b.id_;
}

std::string Element::str() const {
  std::ostringstream out;
  out << "[";
  const auto& w = word();
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << w[i];
  }
  out << "]";
  return out.str();
}

}  // namespace coxeter
