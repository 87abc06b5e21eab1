// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Ground-set combinatorics over J = [n] u [n]*: the star involution,
// admissible sets, C_n / D_n admissible orderings and the induced Gale order.

#ifndef LAGMAT_GROUND_HPP_
#define LAGMAT_GROUND_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lagmat/error.hpp"

namespace lagmat {

// Largest supported ground size; sets are pairs of 64-bit masks.
inline constexpr int kMaxGround = 64;

struct Element {
  int index = 1;  // 1-based
  bool starred = false;

  friend constexpr bool operator==(Element, Element) = default;
};

constexpr Element star(Element e) { return {e.index, !e.starred}; }

// Integer code: i -> i, i* -> n + i.
constexpr int element_code(Element e, int n) {
  return e.starred ? n + e.index : e.index;
}

constexpr Element element_from_code(int code, int n) {
  return code > n ? Element{code - n, true} : Element{code, false};
}

// Print order: all unstarred elements before starred ones, then by index.
// This agrees with comparing integer codes for any fixed n.
constexpr bool element_less(Element a, Element b) {
  if (a.starred != b.starred) return !a.starred;
  return a.index < b.index;
}

inline std::string to_string(Element e) {
  return std::to_string(e.index) + (e.starred ? "*" : "");
}

// A subset of J stored as two index masks; bit i-1 stands for index i.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) insert(e);
  }

  static constexpr ElementSet from_masks(std::uint64_t plain,
                                         std::uint64_t starred) {
    ElementSet s;
    s.plain_ = plain;
    s.starred_ = starred;
    return s;
  }

  // The Lagrangian set with unstarred part `plain`, starred elsewhere in [n].
  static constexpr ElementSet lagrangian(std::uint64_t plain, int n) {
    return from_masks(plain, full_mask(n) & ~plain);
  }

  static constexpr std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  static constexpr std::uint64_t bit(int index) {
    return std::uint64_t{1} << (index - 1);
  }

  constexpr std::uint64_t plain() const { return plain_; }
  constexpr std::uint64_t starred() const { return starred_; }
  // Indices touched by the set, starred or not.
  constexpr std::uint64_t support() const { return plain_ | starred_; }

  constexpr bool contains(Element e) const {
    return ((e.starred ? starred_ : plain_) & bit(e.index)) != 0;
  }
  constexpr void insert(Element e) {
    (e.starred ? starred_ : plain_) |= bit(e.index);
  }
  constexpr void erase(Element e) {
    (e.starred ? starred_ : plain_) &= ~bit(e.index);
  }
  constexpr int size() const {
    return std::popcount(plain_) + std::popcount(starred_);
  }
  constexpr bool empty() const { return plain_ == 0 && starred_ == 0; }
  constexpr bool is_admissible() const { return (plain_ & starred_) == 0; }
  constexpr int plain_count() const { return std::popcount(plain_); }
  constexpr int max_index() const {
    return 64 - std::countl_zero(support());
  }

  // K* = { e* : e in K }.
  constexpr ElementSet star() const { return from_masks(starred_, plain_); }

  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return from_masks(a.plain_ ^ b.plain_, a.starred_ ^ b.starred_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return from_masks(a.plain_ & b.plain_, a.starred_ & b.starred_);
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return from_masks(a.plain_ | b.plain_, a.starred_ | b.starred_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return from_masks(a.plain_ & ~b.plain_, a.starred_ & ~b.starred_);
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

  // Members in print order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint64_t m = plain_; m != 0; m &= m - 1) {
      out.push_back({std::countr_zero(m) + 1, false});
    }
    for (std::uint64_t m = starred_; m != 0; m &= m - 1) {
      out.push_back({std::countr_zero(m) + 1, true});
    }
    return out;
  }

 private:
  std::uint64_t plain_ = 0;
  std::uint64_t starred_ = 0;
};

// Lexicographic comparison of the member sequences in print order.
inline bool lex_less(const ElementSet& a, const ElementSet& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(),
                                      eb.end(), element_less);
}

struct LexLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    return lex_less(a, b);
  }
};

inline std::string to_string(const ElementSet& s) {
  std::string out;
  for (Element e : s.elements()) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out;
}

// K n K* = {} and every index within [n].
inline bool is_admissible(const ElementSet& k, int n) {
  return k.is_admissible() && k.max_index() <= n;
}

// All admissible k-subsets of J for ground size n, in lexicographic order.
inline std::vector<ElementSet> admissible_sets(int n, int k) {
  std::vector<ElementSet> out;
  if (k < 0 || k > n) return out;
  const std::uint64_t full = ElementSet::full_mask(n);
  // Enumerate index supports of size k, then star patterns on them.
  for (std::uint64_t sup = 0; sup <= full; ++sup) {
    if (std::popcount(sup) != k) continue;
    for (std::uint64_t st = sup;; st = (st - 1) & sup) {
      out.push_back(ElementSet::from_masks(sup & ~st, st));
      if (st == 0) break;
    }
    if (sup == full) break;
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

enum class Variant { C, D };

// A C_n- or D_n-admissible ordering, stored by the top half of its
// largest-to-smallest listing. The bottom half is the reversed star of the
// top. For D the n-th and (n+1)-st listed elements are incomparable and the
// stored representative lists the unstarred one first.
class AdmissibleOrdering {
 public:
  AdmissibleOrdering(std::vector<Element> top, Variant variant)
      : top_(std::move(top)), variant_(variant) {
    const int n = static_cast<int>(top_.size());
    if (n < 1 || n > kMaxGround) {
      throw InvalidOrdering("ground size must be in [1, 64]");
    }
    std::uint64_t seen = 0;
    for (Element e : top_) {
      if (e.index < 1 || e.index > n) {
        throw InvalidOrdering("element " + to_string(e) + " out of range");
      }
      if (seen & ElementSet::bit(e.index)) {
        throw InvalidOrdering("top half is not admissible");
      }
      seen |= ElementSet::bit(e.index);
    }
    if (variant_ == Variant::D) top_.back().starred = false;
    position_.assign(2 * n + 1, 0);
    for (int p = 0; p < n; ++p) {
      position_[element_code(top_[p], n)] = p;
      position_[element_code(lagmat::star(top_[p]), n)] = 2 * n - 1 - p;
    }
  }

  int n() const { return static_cast<int>(top_.size()); }
  Variant variant() const { return variant_; }
  std::span<const Element> top() const { return top_; }

  std::vector<Element> listing() const {
    std::vector<Element> out(top_.begin(), top_.end());
    for (auto it = top_.rbegin(); it != top_.rend(); ++it) {
      out.push_back(lagmat::star(*it));
    }
    return out;
  }

  // 0 for the largest element, 2n-1 for the smallest.
  int position(Element e) const { return position_[element_code(e, n())]; }

  bool incomparable(Element a, Element b) const {
    if (variant_ != Variant::D || a == b) return false;
    const int pa = position(a);
    const int pb = position(b);
    return std::min(pa, pb) == n() - 1 && std::max(pa, pb) == n();
  }

  // Strict a < b in this ordering.
  bool precedes(Element a, Element b) const {
    return !incomparable(a, b) && position(a) > position(b);
  }

  // The ordering with every listed element replaced by its star, which is
  // the opposite linear order.
  AdmissibleOrdering reversed() const {
    std::vector<Element> t;
    t.reserve(top_.size());
    for (Element e : top_) t.push_back(lagmat::star(e));
    return AdmissibleOrdering(std::move(t), variant_);
  }

  // The C orderings refining this one: itself for C, two for D.
  std::vector<AdmissibleOrdering> refinements() const {
    if (variant_ == Variant::C) return {*this};
    AdmissibleOrdering a(top_, Variant::C);
    std::vector<Element> t = top_;
    t.back() = lagmat::star(t.back());
    AdmissibleOrdering b(std::move(t), Variant::C);
    return {a, b};
  }

  friend bool operator==(const AdmissibleOrdering& a,
                         const AdmissibleOrdering& b) {
    return a.variant_ == b.variant_ && a.top_ == b.top_;
  }

 private:
  std::vector<Element> top_;
  Variant variant_;
  std::vector<int> position_;  // indexed by element code
};

// "1 > 2 > 2* > 1*"; for D the middle pair is printed as "{2 2*}".
inline std::string to_string(const AdmissibleOrdering& ord) {
  const auto list = ord.listing();
  const int n = ord.n();
  std::string out;
  for (int p = 0; p < 2 * n; ++p) {
    if (p > 0) out += " > ";
    if (ord.variant() == Variant::D && p == n - 1) {
      out += "{" + to_string(list[p]) + " " + to_string(list[p + 1]) + "}";
      ++p;
      continue;
    }
    out += to_string(list[p]);
  }
  return out;
}

// Visits every admissible ordering once, permutations of [n] in
// lexicographic order and star patterns in increasing mask order within
// each. Returns false iff the visitor stopped the scan by returning false.
inline bool for_each_admissible_ordering(
    int n, Variant variant,
    const std::function<bool(const AdmissibleOrdering&)>& visit) {
  if (n < 1 || n > kMaxGround) {
    throw InvalidOrdering("ground size must be in [1, 64]");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  const std::uint64_t patterns = std::uint64_t{1} << n;
  do {
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      if (variant == Variant::D && (mask >> (n - 1)) & 1) continue;
      std::vector<Element> top(n);
      for (int p = 0; p < n; ++p) top[p] = {perm[p], ((mask >> p) & 1) != 0};
      if (!visit(AdmissibleOrdering(std::move(top), variant))) return false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

inline std::vector<AdmissibleOrdering> enumerate_admissible_orderings(
    int n, Variant variant) {
  std::vector<AdmissibleOrdering> out;
  for_each_admissible_ordering(n, variant, [&](const AdmissibleOrdering& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

namespace detail {

// Listing positions of the members, largest first. With swap_middle the
// n-th and (n+1)-st listed elements trade places (the other C refinement
// of a D ordering).
inline void sorted_positions(const ElementSet& s, const AdmissibleOrdering& ord,
                             bool swap_middle, std::vector<int>& pos) {
  const int n = ord.n();
  pos.clear();
  for (Element e : s.elements()) {
    int p = ord.position(e);
    if (swap_middle && (p == n - 1 || p == n)) p = 2 * n - 1 - p;
    pos.push_back(p);
  }
  std::sort(pos.begin(), pos.end());
}

inline bool gale_leq_linear(const ElementSet& a, const ElementSet& b,
                            const AdmissibleOrdering& ord, bool swap_middle) {
  thread_local std::vector<int> pa;
  thread_local std::vector<int> pb;
  sorted_positions(a, ord, swap_middle, pa);
  sorted_positions(b, ord, swap_middle, pb);
  for (std::size_t t = 0; t < pa.size(); ++t) {
    if (pa[t] < pb[t]) return false;
  }
  return true;
}

}  // namespace detail

// Gale order A <= B: sorted componentwise, each member of A is at most the
// corresponding member of B. For D both C refinements must agree, which
// makes the mutually starred middle pair incomparable.
inline bool gale_leq(const ElementSet& a, const ElementSet& b,
                     const AdmissibleOrdering& ord) {
  if (a.size() != b.size()) {
    throw InvalidCollection("Gale comparison of sets of different size");
  }
  if (!detail::gale_leq_linear(a, b, ord, false)) return false;
  return ord.variant() == Variant::C ||
         detail::gale_leq_linear(a, b, ord, true);
}

}  // namespace lagmat

#endif  // LAGMAT_GROUND_HPP_
