#ifndef BCF_GRAGG1D_HPP
#define BCF_GRAGG1D_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bcf/outcome.hpp"
#include "bcf/rational.hpp"

namespace bcf {

// One partial quotient p z^a / (1 + q z) of a one-variable A-fraction.
struct ElementPair {
  Rational p;
  Rational q;
  friend bool operator==(const ElementPair&, const ElementPair&) = default;
};

// p_1 z/(1 + q_1 z) - p_2 z^2/(1 + q_2 z) - p_3 z^2/(1 + q_3 z) - ...
struct ContinuedFraction1D {
  std::vector<ElementPair> pairs;
  std::size_t size() const noexcept { return pairs.size(); }
};

// Intermediate tables of the Gragg recurrences. Indices follow the
// mathematical convention: sigma(-1) = 1, tau(-1) = 0, B(n, r) = 0 outside
// 0 <= r <= n, B(n, 0) = 1.
class GraggTrace {
 public:
  GraggTrace() {
    sigma_.push_back(Rational(1));
    tau_.push_back(Rational(0));
    b_.push_back({});                   // B_{-1}
    b_.push_back({Rational(1)});        // B_0
  }

  int max_index() const noexcept { return static_cast<int>(sigma_.size()) - 2; }

  Rational sigma(int n) const { return at(sigma_, n + 1); }
  Rational tau(int n) const { return at(tau_, n + 1); }
  Rational B(int n, int r) const {
    if (n < -1 || n + 1 >= static_cast<int>(b_.size()) || r < 0) return Rational(0);
    const auto& row = b_[static_cast<std::size_t>(n + 1)];
    return r < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(r)] : Rational(0);
  }
  int B_rows() const noexcept { return static_cast<int>(b_.size()) - 1; }

  void push_sigma_tau(Rational s, Rational t) {
    sigma_.push_back(std::move(s));
    tau_.push_back(std::move(t));
  }
  void push_B(std::vector<Rational> row) { b_.push_back(std::move(row)); }

 private:
  static Rational at(const std::vector<Rational>& v, int i) {
    if (i < 0 || i >= static_cast<int>(v.size())) throw std::out_of_range("GraggTrace index out of range");
    return v[static_cast<std::size_t>(i)];
  }

  std::vector<Rational> sigma_;
  std::vector<Rational> tau_;
  std::vector<std::vector<Rational>> b_;
};

struct GraggFailure {
  enum class Kind { LeadingZero, DegenerateSigma };
  Kind kind;
  int sigma_index;  // n with sigma_n = 0
  // Order of the first vanishing Hankel determinant, H(n+1).
  int hankel_order() const noexcept { return sigma_index + 1; }
};

// Result of a (possibly halted) expansion: `fraction` holds every pair that
// was computed before a failure.
struct GraggExpansion {
  ContinuedFraction1D fraction;
  GraggTrace trace;
  std::optional<GraggFailure> failure;
  bool ok() const noexcept { return !failure.has_value(); }
};

// Gragg's algorithm for the A-fraction corresponding to sum_{m>=1} c_m z^m.
// `c` holds c_1..c_M; floor(M/2) pairs are emitted, pair n+1 drawing on
// sigma_n (c up to index 2n+1) and tau_n (c up to index 2n+2).
inline GraggExpansion gragg_expand(std::span<const Rational> c) {
  GraggExpansion out;
  const int M = static_cast<int>(c.size());
  const int K = M / 2;
  auto coeff = [&](int i) -> const Rational& { return c[static_cast<std::size_t>(i - 1)]; };
  if (M >= 1 && c[0] == 0) {
    out.failure = GraggFailure{GraggFailure::Kind::LeadingZero, 0};
    return out;
  }
  GraggTrace& tr = out.trace;
  Rational sum;
  for (int n = 0; n < K; ++n) {
    sum = 0;
    for (int r = 0; r <= n; ++r) sum += coeff(2 * n + 1 - r) * tr.B(n, r);
    if (sum == 0) {
      out.failure = GraggFailure{GraggFailure::Kind::DegenerateSigma, n};
      return out;
    }
    Rational sigma = sum;
    sum = 0;
    for (int r = 0; r <= n; ++r) sum += coeff(2 * n + 2 - r) * tr.B(n, r);
    Rational tau = sum / sigma;

    Rational p = sigma / tr.sigma(n - 1);
    Rational q = tr.tau(n - 1) - tau;
    tr.push_sigma_tau(sigma, tau);

    std::vector<Rational> next(static_cast<std::size_t>(n + 2));
    next[0] = 1;
    for (int r = 1; r <= n + 1; ++r)
      next[static_cast<std::size_t>(r)] = tr.B(n, r) + q * tr.B(n, r - 1) - p * tr.B(n - 1, r - 2);
    tr.push_B(std::move(next));
    out.fraction.pairs.push_back({std::move(p), std::move(q)});
  }
  return out;
}

// Determinant of the n x n Hankel matrix [c_{i+j-1}], by exact Gaussian
// elimination with row pivoting.
inline Rational hankel_det(std::span<const Rational> c, int n) {
  if (n < 1) throw std::invalid_argument("hankel_det: order must be positive");
  if (static_cast<int>(c.size()) < 2 * n - 1)
    throw std::invalid_argument("hankel_det: order " + std::to_string(n) + " needs " + std::to_string(2 * n - 1) +
                                " coefficients, have " + std::to_string(c.size()));
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::vector<Rational>> a(N, std::vector<Rational>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) a[i][j] = c[i + j];
  Rational det(1);
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    while (pivot < N && a[pivot][col] == 0) ++pivot;
    if (pivot == N) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < N; ++row) {
      if (a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < N; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  return det;
}

// n-th approximant of a one-variable A-fraction by backward recurrence.
// In floating point a denominator counts as zero below
// kPoleTolerance * (1 + |z|^2 max|p|). A pole is reported with the 1-based
// level of the vanishing denominator.
template <class T>
EvalOutcome<T> eval_cf_1d(const ContinuedFraction1D& f, const T& z, int n) {
  if (n < 0 || n > static_cast<int>(f.size()))
    throw std::invalid_argument("eval_cf_1d: depth " + std::to_string(n) + " exceeds fraction size");
  if (n == 0) return T(0);
  auto pair_at = [&](int k) -> const ElementPair& { return f.pairs[static_cast<std::size_t>(k - 1)]; };
  double max_p = 0.0;
  for (int k = 1; k <= n; ++k) max_p = std::max(max_p, magnitude(pair_at(k).p));
  const T z2 = z * z;
  const double scale = 1.0 + magnitude(z2) * max_p;
  T t = T(1) + T(scalar_cast<T>(pair_at(n).q) * z);
  if (vanishes(t, scale)) return Pole{MultiIndex{n}};
  for (int k = n - 1; k >= 1; --k) {
    t = T(1) + T(scalar_cast<T>(pair_at(k).q) * z) - T(scalar_cast<T>(pair_at(k + 1).p) * z2 / t);
    if (vanishes(t, scale)) return Pole{MultiIndex{k}};
  }
  return T(scalar_cast<T>(pair_at(1).p) * z / t);
}

}  // namespace bcf

#endif  // BCF_GRAGG1D_HPP
