#ifndef BCF_EVAL_HPP
#define BCF_EVAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcf/fraction.hpp"
#include "bcf/multi_index.hpp"
#include "bcf/outcome.hpp"
#include "bcf/rational.hpp"
#include "bcf/series.hpp"

namespace bcf {

namespace detail {

template <FractionForm Form>
void check_eval_args(const BranchedFraction<Form>& f, std::size_t point_dim, int n) {
  if (point_dim != f.dim())
    throw std::invalid_argument("point has " + std::to_string(point_dim) + " coordinates, fraction has dimension " +
                                std::to_string(f.dim()));
  if (n < 0 || n > f.depth())
    throw std::invalid_argument("approximant order " + std::to_string(n) + " exceeds depth " + std::to_string(f.depth()));
}

// Tail denominators evaluated from the deepest level upward. In A-form
//   T(e) = 1 + q_e z_v + sum_{j<=v} a_{e+e_j} z_v z_j / T(e+e_j),
// in J-form
//   T(e) = q_e + w_v + sum_{j<=v} a_{e+e_j} / T(e+e_j),
// where v is the last variable of e and a the signed partial numerator.
// Branches absent from the table contribute nothing.
template <FractionForm Form, class T>
class TailEvaluator {
 public:
  TailEvaluator(const BranchedFraction<Form>& f, std::span<const T> x, int n) : f_(f), x_(x), n_(n) {}

  std::optional<T> tail(const MultiIndex& e) {
    const std::size_t v = *e.last_var();
    const ElementPair& el = f_.at(e);
    const T q = scalar_cast<T>(el.q);
    T t;
    double scale;
    if constexpr (Form == FractionForm::A) {
      t = T(1) + T(q * x_[v]);
      scale = 1.0 + magnitude(T(q * x_[v]));
    } else {
      t = q + x_[v];
      scale = magnitude(q) + magnitude(x_[v]);
    }
    if (e.total_degree() < n_) {
      for (std::size_t j = 0; j <= v; ++j) {
        const MultiIndex child = e + MultiIndex::unit(f_.dim(), j);
        if (!f_.find(child)) continue;
        auto sub = tail(child);
        if (!sub) return std::nullopt;
        const T a = scalar_cast<T>(f_.partial_numerator(child));
        T term = Form == FractionForm::A ? T(a * x_[v] * x_[j] / *sub) : T(a / *sub);
        scale += magnitude(term);
        t += term;
      }
    }
    if (vanishes(t, scale)) {
      pole_ = e;
      return std::nullopt;
    }
    return t;
  }

  EvalOutcome<T> value() {
    T sum(0);
    for (std::size_t j = 0; j < f_.dim(); ++j) {
      const MultiIndex e = MultiIndex::unit(f_.dim(), j);
      if (n_ < 1 || !f_.find(e)) continue;
      auto t = tail(e);
      if (!t) return Pole{*pole_};
      const T a = scalar_cast<T>(f_.at(e).p);
      sum += Form == FractionForm::A ? T(a * x_[j] / *t) : T(a / *t);
    }
    return sum;
  }

 private:
  const BranchedFraction<Form>& f_;
  std::span<const T> x_;
  int n_;
  std::optional<MultiIndex> pole_;
};

}  // namespace detail

// n-th approximant f_n(z) of an A-fraction.
template <class T>
EvalOutcome<T> eval_approximant(const AFraction& f, std::span<const T> z, int n) {
  detail::check_eval_args(f, z.size(), n);
  return detail::TailEvaluator<FractionForm::A, T>(f, z, n).value();
}

template <class T>
EvalOutcome<T> eval_approximant(const AFraction& f, const std::vector<T>& z, int n) {
  return eval_approximant<T>(f, std::span<const T>(z), n);
}

// n-th approximant f*_n(w) of a J-fraction. Every coordinate must be nonzero.
template <class T>
EvalOutcome<T> eval_j_approximant(const JFraction& f, std::span<const T> w, int n) {
  detail::check_eval_args(f, w.size(), n);
  for (const T& x : w)
    if (x == T(0)) throw std::invalid_argument("J-fraction points need nonzero coordinates");
  return detail::TailEvaluator<FractionForm::J, T>(f, w, n).value();
}

template <class T>
EvalOutcome<T> eval_j_approximant(const JFraction& f, const std::vector<T>& w, int n) {
  return eval_j_approximant<T>(f, std::span<const T>(w), n);
}

namespace detail {

inline TruncatedMultiSeries tail_series(const AFraction& f, const MultiIndex& e, int n, int D) {
  const std::size_t N = f.dim();
  const std::size_t v = *e.last_var();
  TruncatedMultiSeries t = TruncatedMultiSeries::constant(N, D, Rational(1));
  t.add_to(MultiIndex::unit(N, v), f.at(e).q);
  if (e.total_degree() < n) {
    for (std::size_t j = 0; j <= v; ++j) {
      const MultiIndex child = e + MultiIndex::unit(N, j);
      if (!f.find(child)) continue;
      const MultiIndex shift = MultiIndex::unit(N, v) + MultiIndex::unit(N, j);
      if (D < 2) continue;
      const TruncatedMultiSeries inv = reciprocal(tail_series(f, child, n, D - 2), D - 2);
      const Rational a = f.partial_numerator(child);
      for (const auto& [k, c] : inv.terms()) t.add_to(k + shift, a * c);
    }
  }
  return t;
}

}  // namespace detail

// Taylor expansion of f_n through total degree D, computed exactly from
// the tail reciprocals.
inline TruncatedMultiSeries expand_approximant(const AFraction& f, int n, int D) {
  if (n < 0 || n > f.depth()) throw std::invalid_argument("approximant order exceeds depth");
  if (D < 0) throw std::invalid_argument("expansion degree must be non-negative");
  const std::size_t N = f.dim();
  TruncatedMultiSeries out(N, D);
  if (n == 0 || D == 0) return out;
  for (std::size_t j = 0; j < N; ++j) {
    const MultiIndex e = MultiIndex::unit(N, j);
    if (!f.find(e)) continue;
    const TruncatedMultiSeries inv = reciprocal(detail::tail_series(f, e, n, D - 1), D - 1);
    const Rational& p = f.at(e).p;
    for (const auto& [k, c] : inv.terms()) out.add_to(k + e, p * c);
  }
  return out;
}

// The J-form shares its elements with the A-form, and f*_n(w) = f_n(1/w).
// The expansion is that of the A-form in z = 1/w.
inline TruncatedMultiSeries expand_approximant(const JFraction& f, int n, int D) {
  AFraction a(f.dim(), f.depth());
  for (const auto& [e, el] : f.nodes()) a.set(e, el);
  return expand_approximant(a, n, D);
}

struct ForkViolation {
  int lower;  // order of the approximant expected below
  int upper;  // order of the approximant expected above
  double excess;
};

struct ForkReport {
  enum class Status { Holds, Violated, Inapplicable };
  Status status = Status::Holds;
  std::vector<double> values;  // f_1 .. f_{n_max}
  std::vector<ForkViolation> violations;
  std::optional<Pole> pole;  // set when Inapplicable
  int pole_order = 0;
};

inline const char* fork_status_name(ForkReport::Status s) {
  switch (s) {
    case ForkReport::Status::Holds: return "holds";
    case ForkReport::Status::Violated: return "violated";
    case ForkReport::Status::Inapplicable: return "inapplicable";
  }
  return "?";
}

// Measures the fork property f_2 <= f_4 <= ... <= f_5 <= f_3 at z, with
// every even approximant below every odd one (from f_2 on).
inline ForkReport fork_check(const AFraction& f, std::span<const double> z, int n_max, double tol = 1e-12) {
  ForkReport r;
  for (int n = 1; n <= n_max; ++n) {
    auto v = eval_approximant<double>(f, z, n);
    if (!v) {
      r.status = ForkReport::Status::Inapplicable;
      r.pole = v.pole();
      r.pole_order = n;
      return r;
    }
    r.values.push_back(v.value());
  }
  auto at = [&](int n) { return r.values[static_cast<std::size_t>(n - 1)]; };
  auto require = [&](int lo, int hi) {
    const double excess = at(lo) - at(hi);
    if (excess > tol) r.violations.push_back({lo, hi, excess});
  };
  for (int n = 4; n <= n_max; n += 2) require(n - 2, n);
  for (int n = 5; n <= n_max; n += 2) require(n, n - 2);
  for (int ev = 2; ev <= n_max; ev += 2)
    for (int od = 3; od <= n_max; od += 2) require(ev, od);
  if (!r.violations.empty()) r.status = ForkReport::Status::Violated;
  return r;
}

inline ForkReport fork_check(const AFraction& f, const std::vector<double>& z, int n_max, double tol = 1e-12) {
  return fork_check(f, std::span<const double>(z), n_max, tol);
}

}  // namespace bcf

#endif  // BCF_EVAL_HPP
