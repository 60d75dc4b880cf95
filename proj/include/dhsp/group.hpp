// Exact arithmetic in the dihedral group D_n = <x, y | x^n = y^2 = e, y x y^-1 = x^-1>,
// with elements kept in the canonical form y^beta x^alpha.
#pragma once

#include <array>
#include <stdexcept>

namespace dhsp {

// Rotation order n of D_n. The group itself has 2n elements.
class GroupOrder {
 public:
  explicit GroupOrder(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("GroupOrder: n must be >= 1");
  }
  int rotations() const { return n_; }     // number of distinct rotation exponents
  int elements() const { return 2 * n_; }  // |D_n|

  friend bool operator==(GroupOrder, GroupOrder) = default;

 private:
  int n_;
};

// y^beta x^alpha with beta in {0,1} and 0 <= alpha < n. Constructors and all
// operations below maintain the canonical range.
struct DihedralElement {
  int beta = 0;
  int alpha = 0;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

// (beta, alpha) lexicographic order; used to pick coset representatives.
inline bool lex_less(const DihedralElement& a, const DihedralElement& b) {
  return a.beta != b.beta ? a.beta < b.beta : a.alpha < b.alpha;
}

inline DihedralElement identity_element() { return {0, 0}; }

// Canonicalizes an arbitrary exponent pair.
inline DihedralElement make_element(int beta, long long alpha, GroupOrder n) {
  const int m = n.rotations();
  long long r = alpha % m;
  if (r < 0) r += m;
  return {beta & 1, static_cast<int>(r)};
}

// Contiguous basis index beta*n + alpha, mapping D_n onto [0, 2n).
inline int index_of(const DihedralElement& g, GroupOrder n) {
  return g.beta * n.rotations() + g.alpha;
}

inline DihedralElement element_at(int index, GroupOrder n) {
  if (index < 0 || index >= n.elements())
    throw std::out_of_range("element_at: index outside [0, 2n)");
  const int m = n.rotations();
  return {index / m, index % m};
}

// (y^b x^a)(y^0 x^c) = y^b x^{a+c};  (y^b x^a)(y^1 x^c) = y^{b+1} x^{c-a}.
inline DihedralElement multiply(const DihedralElement& g, const DihedralElement& h,
                                GroupOrder n) {
  const int m = n.rotations();
  if (h.beta == 0) return {g.beta, (g.alpha + h.alpha) % m};
  return {g.beta ^ 1, ((h.alpha - g.alpha) % m + m) % m};
}

// Rotations invert to x^{-alpha}; reflections are involutions.
inline DihedralElement inverse(const DihedralElement& g, GroupOrder n) {
  if (g.beta == 1) return g;
  return make_element(0, -static_cast<long long>(g.alpha), n);
}

inline DihedralElement power(DihedralElement g, int e, GroupOrder n) {
  DihedralElement acc = identity_element();
  if (e < 0) {
    g = inverse(g, n);
    e = -e;
  }
  for (int i = 0; i < e; ++i) acc = multiply(acc, g, n);
  return acc;
}

// The order-2 subgroup H_a = <y x^a> = {e, y x^a}.
class ReflectionSubgroup {
 public:
  ReflectionSubgroup(int slope, GroupOrder n) : slope_(slope) {
    if (slope < 0 || slope >= n.rotations())
      throw std::invalid_argument("ReflectionSubgroup: slope outside [0, n)");
  }
  int slope() const { return slope_; }
  std::array<DihedralElement, 2> elements() const {
    return {DihedralElement{0, 0}, DihedralElement{1, slope_}};
  }

 private:
  int slope_;
};

// {g, g * y x^a}, returned in lexicographic order. Always size 2.
inline std::array<DihedralElement, 2> left_coset(const DihedralElement& g,
                                                 const ReflectionSubgroup& subgroup,
                                                 GroupOrder n) {
  DihedralElement other = multiply(g, DihedralElement{1, subgroup.slope()}, n);
  if (lex_less(other, g)) return {other, g};
  return {g, other};
}

}  // namespace dhsp
