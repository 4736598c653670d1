#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lagrangia/error.hpp"
#include "lagrangia/integer.hpp"

namespace lagrangia {

/// Homology class of a loop on the fiber, as coordinates in H_1(Sigma) = Z^{2g}.
class CurveClass {
 public:
  CurveClass() = default;
  explicit CurveClass(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  CurveClass(std::initializer_list<long long> coords) {
    for (long long c : coords) coords_.emplace_back(c);
  }

  static CurveClass zero(std::size_t dim) { return CurveClass(std::vector<Integer>(dim)); }

  /// The i-th standard basis vector b_i.
  static CurveClass basis(std::size_t dim, std::size_t i) {
    CurveClass c = zero(dim);
    c.coords_.at(i) = 1;
    return c;
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const Integer> coords() const noexcept { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const {
    for (const auto& x : coords_)
      if (x != 0) return false;
    return true;
  }

  /// gcd of the coordinates; 0 for the zero vector.
  Integer content() const {
    Integer g = 0;
    for (const auto& x : coords_) g = gcd(g, x);
    return g;
  }

  /// Primitive iff content == 1; the zero class is never primitive.
  bool primitive() const { return content() == 1; }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

  friend CurveClass operator+(const CurveClass& a, const CurveClass& b) {
    check(a, b);
    CurveClass r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r.coords_[i] += b.coords_[i];
    return r;
  }

  friend CurveClass operator-(const CurveClass& a) {
    CurveClass r = a;
    for (auto& x : r.coords_) x = -x;
    return r;
  }

  friend CurveClass operator*(const Integer& n, const CurveClass& a) {
    CurveClass r = a;
    for (auto& x : r.coords_) x *= n;
    return r;
  }

  /// True iff this class is an integer multiple of `other` (other nonzero).
  bool is_multiple_of(const CurveClass& other) const {
    check(*this, other);
    // 2x2 minors vanish and the ratio is integral.
    std::size_t pivot = 0;
    while (pivot < other.dim() && other[pivot] == 0) ++pivot;
    if (pivot == other.dim()) return is_zero();
    if (coords_[pivot] % other[pivot] != 0) return false;
    const Integer k = coords_[pivot] / other[pivot];
    for (std::size_t i = 0; i < dim(); ++i)
      if (coords_[i] != k * other[i]) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += coords_[i].str();
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const CurveClass& c) {
    return os << '(' << c.str() << ')';
  }

 private:
  static void check(const CurveClass& a, const CurveClass& b) {
    if (a.dim() != b.dim()) throw error(errc::dimension, "curve class dimensions differ");
  }

  std::vector<Integer> coords_;
};

}  // namespace lagrangia
