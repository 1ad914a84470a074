#ifndef HECKELIB_COXETER_HPP
#define HECKELIB_COXETER_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxeter {

struct GroupMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/*
  A supported finite Coxeter type: A1..A4, B2, G2, or I2:m (m >= 3).
  Generators are numbered 1..rank; the Coxeter matrix is symmetric with 1 on
  the diagonal.  Generator numbering is a convention of this library (the
  abstract group fixes none), so identity checks downstream never depend on a
  particular labeling of the diagram.
*/
struct CoxeterType {
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> m;  // (rank+1)x(rank+1), 1-based

  static CoxeterType parse(const std::string& label);
  std::size_t order() const;  // |W| by the classical formula
  int m_entry(int s, int t) const { return m[s][t]; }
};

class CoxeterGroup;

/*
  A group element: an index into its group's element table.  The canonical
  form held by the group is the ShortLex-minimal reduced word, so equal ids
  mean equal elements and ordering by id is the ShortLex order.
*/
class Element {
 public:
  Element() = default;
  Element(const CoxeterGroup* g, uint32_t id) : g_(g), id_(id) {}

  uint32_t id() const { return id_; }
  const CoxeterGroup& group() const { return *g_; }
  bool valid() const { return g_ != nullptr; }

  int length() const;
  const std::vector<int>& word() const;  // canonical reduced word
  Element inverse() const;
  std::vector<int> descents_left() const;
  std::vector<int> descents_right() const;
  Element omega() const;  // w0 * w * w0

  friend Element operator*(Element a, Element b);
  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

  std::string str() const;  // e.g. "[1,2,1]", "[]" for the identity

 private:
  const CoxeterGroup* g_ = nullptr;
  uint32_t id_ = 0;
};

/*
  The whole group, enumerated once at construction.

  Elements are realized as permutations: A_n acts on n+1 points by adjacent
  transpositions, the dihedral family I2(m) (which covers B2 = I2(4) and
  G2 = I2(6)) acts on Z/m by the reflections x -> -x and x -> 1-x.  A BFS in
  ShortLex order assigns ids, canonical words and the generator
  multiplication tables; everything else is derived from those tables.
  After construction the group is immutable apart from the memoized Bruhat
  rows, which are filled idempotently.
*/
class CoxeterGroup {
 public:
  explicit CoxeterGroup(const CoxeterType& type);

  // process-wide cache keyed by normalized label
  static const CoxeterGroup& get(const std::string& label);

  const CoxeterType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t size() const { return words_.size(); }

  Element identity() const { return Element(this, 0); }
  Element generator(int s) const;  // 1-based
  Element element(uint32_t id) const { return Element(this, id); }
  Element from_word(std::span<const int> word) const;
  Element longest_element() const { return Element(this, w0_); }

  int length(Element w) const { return static_cast<int>(words_[check(w)].size()); }
  const std::vector<int>& word(Element w) const { return words_[check(w)]; }
  Element product(Element a, Element b) const;
  Element inverse(Element w) const { return Element(this, inverse_[check(w)]); }
  Element left_mul(int s, Element w) const;   // s * w
  Element right_mul(Element w, int s) const;  // w * s

  std::vector<int> descents_left(Element w) const;
  std::vector<int> descents_right(Element w) const;

  bool bruhat_leq(Element y, Element w) const;

  Element omega(Element w) const;

  std::vector<Element> all_elements() const;  // ShortLex order
  const std::vector<std::vector<Element>>& conjugacy_classes() const;
  // index into conjugacy_classes() for a given element
  std::size_t class_of(Element w) const;

 private:
  CoxeterType type_;
  std::vector<std::vector<uint8_t>> perms_;  // faithful permutation per element
  std::vector<std::vector<int>> words_;      // canonical ShortLex reduced words
  std::vector<std::vector<uint32_t>> right_;  // right_[id][s-1] = id of w*s
  std::vector<std::vector<uint32_t>> left_;
  std::vector<uint32_t> inverse_;
  uint32_t w0_ = 0;

  mutable std::vector<std::vector<char>> bruhat_rows_;  // per w, filled lazily
  mutable std::vector<char> bruhat_done_;
  mutable std::vector<std::vector<Element>> classes_;
  mutable std::vector<std::size_t> class_index_;

  uint32_t check(Element w) const;
  const std::vector<char>& bruhat_row(uint32_t w) const;
  void build();
};

}  // namespace coxeter

#endif
