#ifndef BCF_TESTS_ORACLES_HPP
#define BCF_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "bcf/bcf.hpp"

namespace oracle {

using bcf::AFraction;
using bcf::MultiIndex;
using bcf::Rational;
using bcf::TruncatedMultiSeries;

// Builds the fraction with reciprocals only: every element is read off
// the reciprocal table of its parent, with no one-variable recurrences.
// Returns nothing when some leading coefficient vanishes.
inline std::optional<AFraction> reciprocal_route(const TruncatedMultiSeries& L, int depth) {
  const std::size_t N = L.dim();
  AFraction f(N, depth);
  bool ok = true;
  auto visit = [&](auto&& self, const MultiIndex& b, const TruncatedMultiSeries& table, const MultiIndex& base,
                   std::size_t lateral) -> void {
    if (!ok || b.total_degree() >= depth) return;
    for (std::size_t j = 0; j < lateral; ++j) {
      const MultiIndex c = b + MultiIndex::unit(N, j);
      const MultiIndex start = base + MultiIndex::unit(N, j);
      const Rational a = table.coefficient(start);
      if (a == 0) {
        ok = false;
        return;
      }
      const TruncatedMultiSeries next = bcf::reciprocal(bcf::shifted_section(table, start, j + 1));
      f.set(c, {bcf::repeats_last_variable(c) ? Rational(-a) : a, next.coefficient(MultiIndex::unit(N, j))});
      self(self, c, next, MultiIndex::unit(N, j), j + 1);
    }
  };
  visit(visit, MultiIndex(N), L, MultiIndex(N), N);
  if (!ok) return std::nullopt;
  return f;
}

// Taylor series of f_n through degree D by full-cap series products.
inline TruncatedMultiSeries taylor(const AFraction& f, int n, int D) {
  const std::size_t N = f.dim();
  auto z = [&](std::size_t i) { return TruncatedMultiSeries::monomial(MultiIndex::unit(N, i), Rational(1), D); };
  auto tail = [&](auto&& self, const MultiIndex& e) -> TruncatedMultiSeries {
    const std::size_t v = *e.last_var();
    TruncatedMultiSeries t = TruncatedMultiSeries::constant(N, D, Rational(1)) + bcf::scale(z(v), f.at(e).q);
    if (e.total_degree() < n) {
      for (std::size_t j = 0; j <= v; ++j) {
        const MultiIndex c = e + MultiIndex::unit(N, j);
        if (!f.find(c)) continue;
        t = t + bcf::scale(z(v) * z(j) * bcf::reciprocal(self(self, c)), f.partial_numerator(c));
      }
    }
    return t;
  };
  TruncatedMultiSeries out(N, D);
  if (n == 0) return out;
  for (std::size_t j = 0; j < N; ++j) {
    const MultiIndex e = MultiIndex::unit(N, j);
    if (!f.find(e)) continue;
    out = out + bcf::scale(z(j) * bcf::reciprocal(tail(tail, e)), f.at(e).p);
  }
  return out;
}

inline Rational small_rational(std::mt19937_64& rng, int span = 3, int max_den = 3) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational nonzero_rational(std::mt19937_64& rng, int span = 3, int max_den = 3) {
  Rational r;
  do r = small_rational(rng, span, max_den);
  while (r == 0);
  return r;
}

// Random complete fraction with nonzero partial numerators.
inline AFraction random_fraction(std::mt19937_64& rng, std::size_t dim, int depth) {
  AFraction f(dim, depth);
  bcf::for_each_index(dim, depth, [&](const MultiIndex& e) {
    if (!e.is_zero()) f.set(e, {nonzero_rational(rng), small_rational(rng)});
  });
  return f;
}

// Random series with the given constant term and coefficients in -span..span.
inline TruncatedMultiSeries random_series(std::mt19937_64& rng, std::size_t dim, int cap, const Rational& constant,
                                          int span = 3) {
  TruncatedMultiSeries s(dim, cap);
  std::uniform_int_distribution<int> c(-span, span);
  bcf::for_each_index(dim, cap, [&](const MultiIndex& k) { s.set(k, k.is_zero() ? constant : Rational(c(rng))); });
  return s;
}

}  // namespace oracle

#endif  // BCF_TESTS_ORACLES_HPP
