#ifndef BCF_SERIES_HPP
#define BCF_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bcf/multi_index.hpp"
#include "bcf/rational.hpp"

namespace bcf {

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// shifted_section was asked to normalize by a zero coefficient.
class ZeroSectionBase : public SeriesError {
 public:
  explicit ZeroSectionBase(MultiIndex base)
      : SeriesError("section base coefficient c_" + base.str() + " is zero"), base_(std::move(base)) {}
  const MultiIndex& base() const noexcept { return base_; }

 private:
  MultiIndex base_;
};

// Order of a formal series: the smallest total degree carrying a nonzero
// coefficient, or infinity for the zero series.
class Valuation {
 public:
  static Valuation infinite() noexcept { return Valuation(); }
  static Valuation finite(int degree) {
    if (degree < 0) throw std::invalid_argument("Valuation degree must be non-negative");
    return Valuation(degree);
  }

  bool is_infinite() const noexcept { return !degree_.has_value(); }
  bool is_finite() const noexcept { return degree_.has_value(); }
  int degree() const {
    if (!degree_) throw std::logic_error("infinite valuation has no degree");
    return *degree_;
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return *a.degree_ <=> *b.degree_;
  }

  std::string str() const { return degree_ ? std::to_string(*degree_) : std::string("inf"); }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

 private:
  Valuation() = default;
  explicit Valuation(int d) : degree_(d) {}
  std::optional<int> degree_;
};

// Formal multiple power series truncated at total degree `degree_cap`.
// Coefficients beyond the cap are unknown, not zero. Only nonzero
// coefficients are stored, so equality of series is equality of maps.
class TruncatedMultiSeries {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  TruncatedMultiSeries(std::size_t dim, int degree_cap) : dim_(dim), cap_(degree_cap) {
    if (dim == 0) throw SeriesError("series dimension must be positive");
    if (degree_cap < 0) throw SeriesError("degree cap must be non-negative");
  }

  static TruncatedMultiSeries constant(std::size_t dim, int degree_cap, const Rational& c) {
    TruncatedMultiSeries s(dim, degree_cap);
    s.set(MultiIndex(dim), c);
    return s;
  }

  static TruncatedMultiSeries monomial(const MultiIndex& k, const Rational& c, int degree_cap) {
    TruncatedMultiSeries s(k.dim(), degree_cap);
    if (k.total_degree() <= degree_cap) s.set(k, c);
    return s;
  }

  std::size_t dim() const noexcept { return dim_; }
  int degree_cap() const noexcept { return cap_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const MultiIndex& k) const {
    check_index(k);
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void set(const MultiIndex& k, const Rational& c) {
    check_index(k);
    if (k.total_degree() > cap_)
      throw SeriesError("coefficient " + k.str() + " lies beyond the degree cap " + std::to_string(cap_));
    if (c == 0) {
      terms_.erase(k);
    } else {
      terms_.insert_or_assign(k, c);
    }
  }

  void add_to(const MultiIndex& k, const Rational& c) {
    if (c == 0) return;
    check_index(k);
    if (k.total_degree() > cap_) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TruncatedMultiSeries truncated(int cap) const {
    TruncatedMultiSeries r(dim_, std::min(cap, cap_));
    for (const auto& [k, c] : terms_)
      if (k.total_degree() <= r.cap_) r.terms_.emplace(k, c);
    return r;
  }

  // Number of leading variables that actually occur.
  std::size_t active_vars() const noexcept {
    std::size_t n = 0;
    for (const auto& [k, c] : terms_)
      if (auto t = k.top_var()) n = std::max(n, *t + 1);
    return n;
  }

  friend bool operator==(const TruncatedMultiSeries&, const TruncatedMultiSeries&) = default;

  friend std::ostream& operator<<(std::ostream& os, const TruncatedMultiSeries& s) {
    if (s.terms_.empty()) os << "0";
    bool first = true;
    for (const auto& [k, c] : s.terms_) {
      if (!first) os << " + ";
      first = false;
      os << to_string(c);
      for (std::size_t i = 0; i < k.dim(); ++i) {
        if (k[i] == 1) os << "*z" << (i + 1);
        if (k[i] > 1) os << "*z" << (i + 1) << "^" << k[i];
      }
    }
    return os << " + O(deg " << s.cap_ + 1 << ")";
  }

 private:
  void check_index(const MultiIndex& k) const {
    if (k.dim() != dim_) throw SeriesError("multi-index " + k.str() + " has the wrong dimension");
  }

  std::size_t dim_;
  int cap_;
  Terms terms_;
};

namespace detail {
inline void require_same_dim(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
  if (a.dim() != b.dim())
    throw SeriesError("series dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}
}  // namespace detail

inline Valuation order(const TruncatedMultiSeries& s) {
  if (s.is_zero()) return Valuation::infinite();
  // Canonical ordering puts the lowest total degree first.
  return Valuation::finite(s.terms().begin()->first.total_degree());
}

inline TruncatedMultiSeries add(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
  detail::require_same_dim(a, b);
  TruncatedMultiSeries r(a.dim(), std::min(a.degree_cap(), b.degree_cap()));
  for (const auto& [k, c] : a.terms()) r.add_to(k, c);
  for (const auto& [k, c] : b.terms()) r.add_to(k, c);
  return r;
}

inline TruncatedMultiSeries scale(const TruncatedMultiSeries& a, const Rational& factor) {
  TruncatedMultiSeries r(a.dim(), a.degree_cap());
  if (factor == 0) return r;
  for (const auto& [k, c] : a.terms()) r.set(k, c * factor);
  return r;
}

inline TruncatedMultiSeries subtract(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
  return add(a, scale(b, Rational(-1)));
}

inline TruncatedMultiSeries mul(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
  detail::require_same_dim(a, b);
  const int cap = std::min(a.degree_cap(), b.degree_cap());
  TruncatedMultiSeries r(a.dim(), cap);
  for (const auto& [ka, ca] : a.terms()) {
    const int da = ka.total_degree();
    if (da > cap) break;
    for (const auto& [kb, cb] : b.terms()) {
      if (da + kb.total_degree() > cap) break;
      r.add_to(ka + kb, ca * cb);
    }
  }
  return r;
}

// Order of a - b over the shared degree range. Infinity means the two agree
// on every term up to min(a.degree_cap(), b.degree_cap()).
inline Valuation agreement_order(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
  detail::require_same_dim(a, b);
  const int cap = std::min(a.degree_cap(), b.degree_cap());
  return order(subtract(a.truncated(cap), b.truncated(cap)));
}

// Multiplicative inverse through total degree D of a series with constant
// term 1, by the convolution recurrence c'_k = -sum_{1<=|r|<=|k|} c'_{k-r} c_r.
// The result cap is min(D, s.degree_cap()).
inline TruncatedMultiSeries reciprocal(const TruncatedMultiSeries& s, int D) {
  const std::size_t dim = s.dim();
  if (s.coefficient(MultiIndex(dim)) != 1)
    throw SeriesError("reciprocal requires a constant term equal to 1");
  const int cap = std::min(D, s.degree_cap());
  if (cap < 0) throw SeriesError("reciprocal degree must be non-negative");
  TruncatedMultiSeries r(dim, cap);
  r.set(MultiIndex(dim), Rational(1));
  Rational acc;
  for_each_index(
      dim, cap,
      [&](const MultiIndex& k) {
        if (k.is_zero()) return;
        acc = 0;
        for (const auto& [rk, c] : s.terms()) {
          if (rk.is_zero()) continue;
          if (rk.total_degree() > k.total_degree()) break;
          if (!k.dominates(rk)) continue;
          auto it = r.terms().find(k - rk);
          if (it != r.terms().end()) acc += it->second * c;
        }
        if (acc != 0) r.set(k, -acc);
      },
      s.active_vars());
  return r;
}

inline TruncatedMultiSeries reciprocal(const TruncatedMultiSeries& s) { return reciprocal(s, s.degree_cap()); }

// The normalized section R(z) = sum_k c_{k+base}/c_base z^k over the k that
// involve only the first `var_limit` variables. The result has constant
// term 1 and cap s.degree_cap() - |base|.
inline TruncatedMultiSeries shifted_section(const TruncatedMultiSeries& s, const MultiIndex& base, std::size_t var_limit) {
  if (base.dim() != s.dim()) throw SeriesError("section base has the wrong dimension");
  if (var_limit == 0 || var_limit > s.dim()) throw SeriesError("section variable limit out of range");
  const int cap = s.degree_cap() - base.total_degree();
  if (cap < 0) throw SeriesError("section base " + base.str() + " lies beyond the degree cap");
  const Rational lead = s.coefficient(base);
  if (lead == 0) throw ZeroSectionBase(base);
  TruncatedMultiSeries r(s.dim(), cap);
  for (const auto& [k, c] : s.terms()) {
    if (!k.dominates(base)) continue;
    MultiIndex shifted = k - base;
    if (!shifted.uses_only_first(var_limit)) continue;
    r.set(shifted, c / lead);
  }
  return r;
}

inline TruncatedMultiSeries operator+(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) { return add(a, b); }
inline TruncatedMultiSeries operator-(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) { return subtract(a, b); }
inline TruncatedMultiSeries operator*(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) { return mul(a, b); }

}  // namespace bcf

#endif  // BCF_SERIES_HPP
