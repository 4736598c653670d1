#pragma once

// Exact sparse Laurent polynomials and integral group rings Z[H] of free
// abelian groups H = Z^n. Coefficients are arbitrary precision.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lagrangia/error.hpp"
#include "lagrangia/integer.hpp"

namespace lagrangia {

using Exponent = std::vector<std::int64_t>;

namespace detail {

inline Exponent add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponent sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Exponent negate(const Exponent& a) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

/// Sparse map exponent -> nonzero coefficient over a fixed number of
/// variables. Terms iterate in descending lexicographic order.
class SparseLaurent {
 public:
  using Terms = std::map<Exponent, Integer, std::greater<Exponent>>;

  explicit SparseLaurent(std::size_t nvars = 0) : nvars_(nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Exponent& e, const Integer& c) {
    if (e.size() != nvars_) throw error(errc::dimension, "exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Integer coefficient_sum() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const SparseLaurent&, const SparseLaurent&) = default;

  SparseLaurent& operator+=(const SparseLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  SparseLaurent& operator-=(const SparseLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  SparseLaurent negated() const {
    SparseLaurent r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  SparseLaurent scaled(const Integer& s) const {
    SparseLaurent r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }

  SparseLaurent times_monomial(const Exponent& m, const Integer& s) const {
    SparseLaurent r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(add(e, m), c * s);
    return r;
  }

  friend SparseLaurent operator*(const SparseLaurent& a, const SparseLaurent& b) {
    SparseLaurent r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), ca * cb);
    return r;
  }

  /// Exact quotient a / b in the Laurent ring, or nullopt when b does not
  /// divide a. Any quotient q has per-variable degree range
  /// [min_a - min_b, max_a - max_b], so the candidate monomials form a finite
  /// box and leading-term elimination always terminates.
  friend std::optional<SparseLaurent> divide(const SparseLaurent& a,
                                             const SparseLaurent& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "exact_divide by zero");
    SparseLaurent q(a.nvars_);
    if (a.is_zero()) return q;
    const std::size_t n = a.nvars_;
    auto [amin, amax] = a.degree_box();
    auto [bmin, bmax] = b.degree_box();
    Exponent lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = amin[i] - bmin[i];
      hi[i] = amax[i] - bmax[i];
      if (lo[i] > hi[i]) return std::nullopt;
    }
    const auto& [lead_b, lead_c] = *b.terms_.begin();
    SparseLaurent rem = a;
    while (!rem.is_zero()) {
      const auto& [lead_r, lead_rc] = *rem.terms_.begin();
      Exponent e = sub(lead_r, lead_b);
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
      if (lead_rc % lead_c != 0) return std::nullopt;
      Integer c = lead_rc / lead_c;
      q.add_term(e, c);
      rem -= b.times_monomial(e, c);
    }
    return q;
  }

  std::pair<Exponent, Exponent> degree_box() const {
    Exponent lo(nvars_), hi(nvars_);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (first || e[i] < lo[i]) lo[i] = e[i];
        if (first || e[i] > hi[i]) hi[i] = e[i];
      }
      first = false;
    }
    return {lo, hi};
  }

 private:
  std::size_t nvars_;
  Terms terms_;
};

/// Renders "c1 m1 + c2 m2 - ..." given a monomial printer; zero prints "0".
template <class MonomialPrinter>
std::string render(const SparseLaurent& p, MonomialPrinter&& mono) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    const std::string m = mono(e);
    std::string body;
    if (m.empty())
      body = mag.str();
    else if (mag == 1)
      body = m;
    else
      body = mag.str() + "*" + m;
    if (first)
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// LaurentPoly

/// One-variable Laurent polynomial over Z whose exponents live on the
/// half-integer lattice. Exponents are stored doubled: t^(k/2) has key k.
class LaurentPoly {
 public:
  LaurentPoly() : p_(1) {}

  static LaurentPoly constant(const Integer& c) { return monomial_doubled(c, 0); }

  /// c * t^k for an integer exponent k.
  static LaurentPoly monomial(const Integer& c, std::int64_t k) {
    return monomial_doubled(c, 2 * k);
  }

  /// c * t^(d/2).
  static LaurentPoly monomial_doubled(const Integer& c, std::int64_t d) {
    LaurentPoly r;
    r.p_.add_term({d}, c);
    return r;
  }

  /// sum_i coeffs[i] * t^(lowest + i).
  static LaurentPoly from_ascending(const std::vector<Integer>& coeffs,
                                    std::int64_t lowest = 0) {
    LaurentPoly r;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      r.p_.add_term({2 * (lowest + static_cast<std::int64_t>(i))}, coeffs[i]);
    return r;
  }

  /// (t^{1/2} - t^{-1/2})^2 = t - 2 + t^{-1}.
  static LaurentPoly half_twist_square() {
    LaurentPoly r = monomial_doubled(1, 1) - monomial_doubled(1, -1);
    return r * r;
  }

  bool is_zero() const noexcept { return p_.is_zero(); }
  std::size_t size() const noexcept { return p_.size(); }

  Integer coeff(std::int64_t k) const { return p_.coefficient({2 * k}); }
  Integer coeff_doubled(std::int64_t d) const { return p_.coefficient({d}); }

  /// (doubled exponent, coefficient) pairs in descending exponent order.
  std::vector<std::pair<std::int64_t, Integer>> terms() const {
    std::vector<std::pair<std::int64_t, Integer>> out;
    for (const auto& [e, c] : p_.terms()) out.emplace_back(e[0], c);
    return out;
  }

  /// Highest / lowest doubled exponent; requires a nonzero polynomial.
  std::int64_t top_doubled() const { return nonzero().terms().begin()->first[0]; }
  std::int64_t bottom_doubled() const { return nonzero().terms().rbegin()->first[0]; }
  Integer leading_coefficient() const { return nonzero().terms().begin()->second; }

  bool has_half_integer_exponents() const {
    for (const auto& [e, c] : p_.terms())
      if (e[0] % 2 != 0) return true;
    return false;
  }

  /// coeff(d) == coeff(-d) for every exponent.
  bool is_symmetric() const {
    for (const auto& [e, c] : p_.terms())
      if (p_.coefficient({-e[0]}) != c) return false;
    return true;
  }

  /// Value at t = 1.
  Integer at_one() const { return p_.coefficient_sum(); }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a.p_ += b.p_;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a.p_ -= b.p_;
    return a;
  }
  friend LaurentPoly operator-(const LaurentPoly& a) { return wrap(a.p_.negated()); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return wrap(a.p_ * b.p_);
  }
  friend LaurentPoly operator*(const Integer& s, const LaurentPoly& a) {
    return wrap(a.p_.scaled(s));
  }

  /// Multiplies by t^(d/2).
  LaurentPoly shifted_doubled(std::int64_t d) const {
    return wrap(p_.times_monomial({d}, 1));
  }

  friend std::optional<LaurentPoly> exact_divide(const LaurentPoly& a,
                                                 const LaurentPoly& b) {
    auto q = divide(a.p_, b.p_);
    if (!q) return std::nullopt;
    return wrap(std::move(*q));
  }

  std::string str(const std::string& var = "t") const {
    return detail::render(p_, [&](const Exponent& e) -> std::string {
      const std::int64_t d = e[0];
      if (d == 0) return "";
      if (d == 2) return var;
      if (d % 2 == 0) return var + "^" + std::to_string(d / 2);
      return var + "^(" + std::to_string(d) + "/2)";
    });
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.str();
  }

 private:
  static LaurentPoly wrap(detail::SparseLaurent p) {
    LaurentPoly r;
    r.p_ = std::move(p);
    return r;
  }

  const detail::SparseLaurent& nonzero() const {
    if (p_.is_zero()) throw error(errc::invalid_argument, "zero polynomial has no degree");
    return p_;
  }

  detail::SparseLaurent p_;
};

// ---------------------------------------------------------------------------
// GroupRingElement

/// Element of Z[H] for H free abelian on named classes; the monomial with
/// exponent vector v stands for t_{v_1 b_1 + ... + v_n b_n}.
class GroupRingElement {
 public:
  using Basis = std::vector<std::string>;

  GroupRingElement() = default;
  explicit GroupRingElement(Basis basis) : basis_(std::move(basis)), p_(basis_.size()) {}

  static GroupRingElement zero(Basis basis) { return GroupRingElement(std::move(basis)); }

  static GroupRingElement constant(Basis basis, const Integer& c) {
    GroupRingElement r(std::move(basis));
    r.p_.add_term(Exponent(r.basis_.size(), 0), c);
    return r;
  }

  static GroupRingElement monomial(Basis basis, Exponent e, const Integer& c = 1) {
    GroupRingElement r(std::move(basis));
    r.p_.add_term(e, c);
    return r;
  }

  /// t_name^power.
  static GroupRingElement generator(Basis basis, const std::string& name,
                                    std::int64_t power = 1) {
    GroupRingElement r(std::move(basis));
    Exponent e(r.basis_.size(), 0);
    e[r.index_of(name)] = power;
    r.p_.add_term(e, 1);
    return r;
  }

  const Basis& basis() const noexcept { return basis_; }
  bool is_zero() const noexcept { return p_.is_zero(); }
  std::size_t size() const noexcept { return p_.size(); }
  const detail::SparseLaurent::Terms& terms() const noexcept { return p_.terms(); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(basis_.begin(), basis_.end(), name);
    if (it == basis_.end()) throw error(errc::untracked_class, "class '" + name + "' not in basis");
    return static_cast<std::size_t>(it - basis_.begin());
  }

  bool tracks(const std::string& name) const {
    return std::find(basis_.begin(), basis_.end(), name) != basis_.end();
  }

  Integer coefficient(const Exponent& e) const { return p_.coefficient(e); }
  Integer coefficient_sum() const { return p_.coefficient_sum(); }

  void add_term(const Exponent& e, const Integer& c) { p_.add_term(e, c); }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  GroupRingElement& operator+=(const GroupRingElement& o) {
    check_basis(o);
    p_ += o.p_;
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    check_basis(o);
    p_ -= o.p_;
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator-(const GroupRingElement& a) {
    return a.with(a.p_.negated());
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.check_basis(b);
    return a.with(a.p_ * b.p_);
  }
  friend GroupRingElement operator*(const Integer& s, const GroupRingElement& a) {
    return a.with(a.p_.scaled(s));
  }

  friend std::optional<GroupRingElement> exact_divide(const GroupRingElement& a,
                                                      const GroupRingElement& b) {
    a.check_basis(b);
    auto q = divide(a.p_, b.p_);
    if (!q) return std::nullopt;
    return a.with(std::move(*q));
  }

  /// Canonical text: descending lexicographic monomial order, e.g.
  /// "t_F^2 - 1 + t_F^-2".
  std::string str() const {
    return detail::render(p_, [&](const Exponent& e) {
      std::string m;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!m.empty()) m += '*';
        m += "t_" + basis_[i];
        if (e[i] != 1) m += "^" + std::to_string(e[i]);
      }
      return m;
    });
  }

  friend std::ostream& operator<<(std::ostream& os, const GroupRingElement& x) {
    return os << x.str();
  }

  void check_basis(const GroupRingElement& o) const {
    if (basis_ != o.basis_) throw error(errc::basis_mismatch, "group ring bases differ");
  }

 private:
  GroupRingElement with(detail::SparseLaurent p) const {
    GroupRingElement r(basis_);
    r.p_ = std::move(p);
    return r;
  }

  Basis basis_;
  detail::SparseLaurent p_;
};

/// Embeds p into Z[H] via t^d -> t_target^{2d}.
inline GroupRingElement substitute_square(const LaurentPoly& p,
                                          const GroupRingElement::Basis& basis,
                                          const std::string& target_class) {
  GroupRingElement r(basis);
  const std::size_t idx = r.index_of(target_class);
  for (const auto& [d, c] : p.terms()) {
    if (d % 2 != 0)
      throw error(errc::non_embeddable, "half-integer exponent in " + p.str());
    Exponent e(basis.size(), 0);
    e[idx] = d;  // doubled storage already equals 2 * exponent
    r.add_term(e, c);
  }
  return r;
}

inline GroupRingElement substitute_square(const LaurentPoly& p, const std::string& target_class) {
  return substitute_square(p, GroupRingElement::Basis{target_class}, target_class);
}

/// True iff coeff(-v) == (-1)^parity * coeff(v) for every exponent v.
inline bool conjugation_check(const GroupRingElement& x, int parity) {
  const bool odd = (parity % 2) != 0;
  for (const auto& [e, c] : x.terms()) {
    const Integer mirrored = x.coefficient(detail::negate(e));
    if (mirrored != (odd ? Integer(-c) : c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// RationalGRE

/// Formal quotient num / den in the fraction field of Z[H]. Stays unreduced
/// unless den divides num exactly.
class RationalGRE {
 public:
  RationalGRE(GroupRingElement num, GroupRingElement den)
      : num_(std::move(num)), den_(std::move(den)) {
    num_.check_basis(den_);
    if (den_.is_zero()) throw error(errc::division_by_zero, "zero denominator");
    reduce();
  }

  explicit RationalGRE(GroupRingElement num)
      : RationalGRE(num, GroupRingElement::constant(num.basis(), 1)) {}

  const GroupRingElement& num() const noexcept { return num_; }
  const GroupRingElement& den() const noexcept { return den_; }

  bool is_polynomial() const {
    return den_ == GroupRingElement::constant(den_.basis(), 1);
  }

  /// The polynomial value; throws when den does not divide num.
  GroupRingElement polynomial() const {
    if (!is_polynomial())
      throw error(errc::inconsistent_state, "rational element is not a polynomial");
    return num_;
  }

  friend bool operator==(const RationalGRE& a, const RationalGRE& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  friend RationalGRE operator+(const RationalGRE& a, const RationalGRE& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalGRE operator-(const RationalGRE& a) { return {-a.num_, a.den_}; }
  friend RationalGRE operator-(const RationalGRE& a, const RationalGRE& b) { return a + (-b); }
  friend RationalGRE operator*(const RationalGRE& a, const RationalGRE& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalGRE operator*(const RationalGRE& a, const GroupRingElement& b) {
    return {a.num_ * b, a.den_};
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  void reduce() {
    if (auto q = exact_divide(num_, den_)) {
      num_ = std::move(*q);
      den_ = GroupRingElement::constant(num_.basis(), 1);
    } else if (den_.size() == 1 && den_.terms().begin()->second < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  GroupRingElement num_;
  GroupRingElement den_;
};

// ---------------------------------------------------------------------------
// GRESubmodule

/// Z-submodule of Z[H] spanned by finitely many elements. The canonical form
/// is the row Hermite normal form of the coefficient matrix whose columns are
/// the union of the generators' supports in descending lex order; that union
/// is exactly the support of the span, so the form depends only on the span.
class GRESubmodule {
 public:
  GRESubmodule(GroupRingElement::Basis basis, std::vector<GroupRingElement> generators)
      : basis_(std::move(basis)), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      if (g.basis() != basis_) throw error(errc::basis_mismatch, "generator basis differs");
  }

  const GroupRingElement::Basis& basis() const noexcept { return basis_; }
  const std::vector<GroupRingElement>& generators() const noexcept { return generators_; }

  /// Nonzero HNF rows as group ring elements; empty for the zero module.
  std::vector<GroupRingElement> canonical_form() const {
    std::vector<Exponent> columns;
    {
      std::map<Exponent, int, std::greater<Exponent>> support;
      for (const auto& g : generators_)
        for (const auto& [e, c] : g.terms()) support.emplace(e, 0);
      for (const auto& [e, unused] : support) columns.push_back(e);
    }
    std::vector<std::vector<Integer>> rows;
    for (const auto& g : generators_) {
      if (g.is_zero()) continue;
      std::vector<Integer> r(columns.size());
      for (std::size_t j = 0; j < columns.size(); ++j) r[j] = g.coefficient(columns[j]);
      rows.push_back(std::move(r));
    }
    const std::size_t rank = hermite_normal_form(rows);
    std::vector<GroupRingElement> out;
    for (std::size_t i = 0; i < rank; ++i) {
      GroupRingElement x(basis_);
      for (std::size_t j = 0; j < columns.size(); ++j) x.add_term(columns[j], rows[i][j]);
      out.push_back(std::move(x));
    }
    return out;
  }

  bool is_zero() const { return canonical_form().empty(); }

  /// Row HNF in place (pivots positive, entries above a pivot reduced into
  /// [0, pivot)); returns the rank, with the nonzero rows first.
  static std::size_t hermite_normal_form(std::vector<std::vector<Integer>>& a) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        Integer s, t;
        const Integer x = a[r][col], y = a[i][col];
        const Integer g = extended_gcd(x, y, s, t);
        const Integer xg = x / g, yg = y / g;
        for (std::size_t j = col; j < n; ++j) {
          Integer top = s * a[r][j] + t * a[i][j];
          Integer bot = -yg * a[r][j] + xg * a[i][j];
          a[r][j] = std::move(top);
          a[i][j] = std::move(bot);
        }
      }
      if (a[r][col] == 0) continue;
      if (a[r][col] < 0)
        for (std::size_t j = col; j < n; ++j) a[r][j] = -a[r][j];
      for (std::size_t i = 0; i < r; ++i) {
        const Integer q = floor_div(a[i][col], a[r][col]);
        if (q == 0) continue;
        for (std::size_t j = col; j < n; ++j) a[i][j] -= q * a[r][j];
      }
      ++r;
    }
    return r;
  }

 private:
  GroupRingElement::Basis basis_;
  std::vector<GroupRingElement> generators_;
};

inline bool submodule_equal(const GRESubmodule& a, const GRESubmodule& b) {
  if (a.basis() != b.basis()) throw error(errc::basis_mismatch, "submodule bases differ");
  return a.canonical_form() == b.canonical_form();
}

}  // namespace lagrangia
