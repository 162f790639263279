#ifndef BCF_EXPERIMENTS_HPP
#define BCF_EXPERIMENTS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcf/build.hpp"
#include "bcf/eval.hpp"
#include "bcf/fraction.hpp"
#include "bcf/rational.hpp"
#include "bcf/series.hpp"

namespace bcf {

// B_k^+ = 1 - sum_{r<k} C(k,r) B_r^+ / (k-r+1), k = 0..K.
inline std::vector<Rational> bernoulli_plus(int K) {
  if (K < 0) throw std::invalid_argument("bernoulli_plus: K must be non-negative");
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    Rational acc(1);
    mpz_class binom(1);  // C(k, r)
    for (int r = 0; r < k; ++r) {
      acc -= Rational(binom) * b[static_cast<std::size_t>(r)] / (k - r + 1);
      binom = binom * (k - r) / (r + 1);
    }
    b.push_back(acc);
  }
  return b;
}

namespace detail {

// c0 + sum_{r>=1} coeff(r) g^r, for a series g without constant term.
template <class Coeff>
TruncatedMultiSeries power_sum(const TruncatedMultiSeries& g, int first, Coeff coeff, int step = 1) {
  TruncatedMultiSeries out(g.dim(), g.degree_cap());
  TruncatedMultiSeries pw = TruncatedMultiSeries::constant(g.dim(), g.degree_cap(), Rational(1));
  for (int r = 0; r < first; ++r) pw = mul(pw, g);
  const TruncatedMultiSeries g_step = [&] {
    TruncatedMultiSeries s = TruncatedMultiSeries::constant(g.dim(), g.degree_cap(), Rational(1));
    for (int i = 0; i < step; ++i) s = mul(s, g);
    return s;
  }();
  for (int r = first; !pw.is_zero(); r += step) {
    out = add(out, scale(pw, coeff(r)));
    pw = mul(pw, g_step);
  }
  return out;
}

// x2 / (1 + x2 s) for a series s in x1 only.
inline TruncatedMultiSeries lateral_quotient(const TruncatedMultiSeries& s) {
  const std::size_t N = s.dim();
  const int D = s.degree_cap();
  const TruncatedMultiSeries x2 = TruncatedMultiSeries::monomial(MultiIndex::unit(N, 1), Rational(1), D);
  const TruncatedMultiSeries one = TruncatedMultiSeries::constant(N, D, Rational(1));
  return mul(x2, reciprocal(add(one, mul(x2, s))));
}

}  // namespace detail

// Taylor series through total degree D of
//   F(z1, z2) = arctan(z1) + arctan(z2 / (1 + z2 arctan(z1))).
inline TruncatedMultiSeries generate_arctan2d_series(int D) {
  if (D < 1) throw std::invalid_argument("generate_arctan2d_series: D must be at least 1");
  TruncatedMultiSeries a(2, D);
  for (int k = 1; k <= D; k += 2) a.set(MultiIndex::unit(2, 0, k), Rational((k / 2) % 2 == 0 ? 1 : -1, k));
  const TruncatedMultiSeries g = detail::lateral_quotient(a);
  auto arctan_coeff = [](int r) { return Rational(((r - 1) / 2) % 2 == 0 ? 1 : -1, r); };
  return add(a, detail::power_sum(g, 1, arctan_coeff, 2));
}

// Asymptotic series of Psi1(w1, w2) = psi1(w1) + psi1(w2 + psi1(w1)) in
// x = (1/w1, 1/w2), through total degree D. With S(x1) = sum_k B_k^+ x1^{k+1}
// and G = x2 / (1 + x2 S), the series is S + sum_r B_r^+ G^{r+1}.
inline TruncatedMultiSeries generate_trigamma2d_laurent(int D) {
  if (D < 1) throw std::invalid_argument("generate_trigamma2d_laurent: D must be at least 1");
  const auto b = bernoulli_plus(D);
  TruncatedMultiSeries s(2, D);
  for (int k = 0; k + 1 <= D; ++k) s.set(MultiIndex::unit(2, 0, k + 1), b[static_cast<std::size_t>(k)]);
  const TruncatedMultiSeries g = detail::lateral_quotient(s);
  auto coeff = [&](int r) { return b[static_cast<std::size_t>(r - 1)]; };
  return add(s, detail::power_sum(g, 1, coeff));
}

inline double eval_arctan2d_ref(double z1, double z2) {
  const double a = std::atan(z1);
  const double den = 1.0 + z2 * a;
  if (den == 0.0) throw std::domain_error("arctan reference: 1 + z2 arctan(z1) vanishes");
  return a + std::atan(z2 / den);
}

// Trigamma function for x > 0: shift the argument to at least 20, then sum
// the large-argument expansion until its terms stop decreasing.
inline double psi1(double x) {
  if (!(x > 0.0)) throw std::domain_error("psi1: argument must be positive");
  static const std::vector<double> b2k = [] {
    const auto b = bernoulli_plus(40);
    std::vector<double> v;
    for (std::size_t k = 2; k < b.size(); k += 2) v.push_back(to_double(b[k]));
    return v;
  }();
  double acc = 0.0;
  while (x < 20.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double tail = inv + 0.5 * inv2;
  double power = inv2 * inv;  // 1 / x^{2k+1}
  double prev = INFINITY;
  for (double b : b2k) {
    const double term = b * power;
    if (std::fabs(term) >= std::fabs(prev)) break;
    tail += term;
    prev = term;
    power *= inv2;
  }
  return acc + tail;
}

inline double eval_trigamma2d_ref(double w1, double w2) {
  const double inner = w2 + psi1(w1);
  if (!(inner > 0.0)) throw std::domain_error("trigamma reference: w2 + psi1(w1) must be positive");
  return psi1(w1) + psi1(inner);
}

enum class Example { Arctan, Trigamma };

inline Example parse_example(const std::string& name) {
  if (name == "arctan2d" || name == "arctan") return Example::Arctan;
  if (name == "trigamma2d" || name == "trigamma") return Example::Trigamma;
  throw std::invalid_argument("unknown example '" + name + "' (expected arctan2d or trigamma2d)");
}

inline const char* example_name(Example ex) { return ex == Example::Arctan ? "arctan2d" : "trigamma2d"; }

inline TruncatedMultiSeries example_series(Example ex, int D) {
  return ex == Example::Arctan ? generate_arctan2d_series(D) : generate_trigamma2d_laurent(D);
}

inline double example_reference(Example ex, double x1, double x2) {
  return ex == Example::Arctan ? eval_arctan2d_ref(x1, x2) : eval_trigamma2d_ref(x1, x2);
}

// Degree through which the "n-th partial sum" of the tables is taken. The
// arctan column matches degree 2n, the trigamma column degree 2n - 1.
inline int partial_sum_degree(Example ex, int n) { return ex == Example::Arctan ? 2 * n : 2 * n - 1; }

using Point2 = std::array<double, 2>;

inline std::vector<Point2> default_table_points(Example ex) {
  if (ex == Example::Arctan)
    return {{{-0.8, -0.7}}, {{-0.1, -0.1}}, {{0.5, -0.7}}, {{-0.9, 0.1}}, {{0.2, 0.3}},
            {{0.1, 0.8}},   {{0.9, 0.9}},   {{2, 4}},      {{5, 10}},     {{-8, 10}}};
  return {{{0.6, 0.6}}, {{0.9, 0.8}}, {{1.5, 1.4}},   {{2, 3}},       {{10, 9}},
          {{20, 40}},   {{50, 70}},   {{100, 110}},   {{500, 1000}}};
}

// The example's fraction built to depth n from its own series.
inline AFraction example_fraction(Example ex, int n) {
  return build_afraction(example_series(ex, 2 * n), n).fraction();
}

// Value of the example's n-th approximant at a table point: the A-form at
// z for arctan, the J-form at w for trigamma.
inline EvalOutcome<double> example_approximant(Example ex, const AFraction& f, const Point2& x, int n) {
  const std::vector<double> pt{x[0], x[1]};
  if (ex == Example::Arctan) return eval_approximant<double>(f, pt, n);
  return eval_j_approximant<double>(to_jfraction(f), pt, n);
}

// Partial sum of the example's series through total degree D at a point;
// trigamma terms are evaluated at x = 1/w.
inline double example_partial_sum(Example ex, const TruncatedMultiSeries& s, const Point2& x, int D) {
  const double a = ex == Example::Arctan ? x[0] : 1.0 / x[0];
  const double b = ex == Example::Arctan ? x[1] : 1.0 / x[1];
  double sum = 0.0;
  for (const auto& [k, c] : s.terms())
    if (k.total_degree() <= D) sum += to_double(c) * std::pow(a, k[0]) * std::pow(b, k[1]);
  return sum;
}

struct TableRow {
  Point2 point;
  double reference;
  double partial_sum_rel_err;
  std::optional<double> approximant_rel_err;  // empty at a pole
  std::optional<MultiIndex> pole;
};

inline std::vector<TableRow> error_table(Example ex, const std::vector<Point2>& points, int n) {
  if (n < 1) throw std::invalid_argument("error_table: n must be positive");
  const TruncatedMultiSeries s = example_series(ex, 2 * n);
  const AFraction f = build_afraction(s, n).fraction();
  const int ps_degree = partial_sum_degree(ex, n);
  std::vector<TableRow> rows;
  for (const auto& x : points) {
    TableRow row{x, example_reference(ex, x[0], x[1]), 0.0, std::nullopt, std::nullopt};
    row.partial_sum_rel_err = std::fabs((example_partial_sum(ex, s, x, ps_degree) - row.reference) / row.reference);
    auto v = example_approximant(ex, f, x, n);
    if (v)
      row.approximant_rel_err = std::fabs((v.value() - row.reference) / row.reference);
    else
      row.pole = v.pole().branch;
    rows.push_back(row);
  }
  return rows;
}

struct GridRow {
  Point2 point;
  std::vector<std::optional<double>> values;  // one per requested n; empty at a pole
  double reference;
};

// Values of the requested approximants on a res x res grid over
// [x0,x1] x [y0,y1], row-major in the first coordinate.
inline std::vector<GridRow> grid_values(Example ex, const std::vector<int>& orders, const std::array<double, 4>& region,
                                        int res) {
  if (res < 1) throw std::invalid_argument("grid resolution must be positive");
  if (orders.empty()) throw std::invalid_argument("grid needs at least one approximant order");
  int depth = 0;
  for (int n : orders) {
    if (n < 1) throw std::invalid_argument("approximant orders must be positive");
    depth = std::max(depth, n);
  }
  const AFraction f = example_fraction(ex, depth);
  auto coord = [&](double lo, double hi, int i) { return res == 1 ? lo : lo + (hi - lo) * i / (res - 1); };
  std::vector<GridRow> rows;
  rows.reserve(static_cast<std::size_t>(res) * static_cast<std::size_t>(res));
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      const Point2 x{coord(region[0], region[1], i), coord(region[2], region[3], j)};
      GridRow row{x, {}, example_reference(ex, x[0], x[1])};
      for (int n : orders) {
        auto v = example_approximant(ex, f, x, n);
        row.values.push_back(v ? std::optional<double>(v.value()) : std::nullopt);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace bcf

#endif  // BCF_EXPERIMENTS_HPP
