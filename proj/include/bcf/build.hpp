#ifndef BCF_BUILD_HPP
#define BCF_BUILD_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bcf/fraction.hpp"
#include "bcf/gragg1d.hpp"
#include "bcf/multi_index.hpp"
#include "bcf/rational.hpp"
#include "bcf/series.hpp"

namespace bcf {

class BuildError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input series does not carry enough terms for the requested depth.
class InsufficientDegree : public BuildError {
 public:
  InsufficientDegree(int have, int need)
      : BuildError("series is known through degree " + std::to_string(have) + " but depth needs degree " +
                   std::to_string(need)),
        have_(have),
        need_(need) {}
  int have() const noexcept { return have_; }
  int need() const noexcept { return need_; }

 private:
  int have_;
  int need_;
};

// A fraction was requested from a failed construction.
class ConstructionFailed : public BuildError {
 public:
  using BuildError::BuildError;
};

enum class ViolationKind {
  MissingNonzero,         // leading coefficient of a lateral section is zero
  NonvanishingPurePower,  // a term free of the branch variable survives in a reciprocal
  HankelZero,             // a Hankel determinant of a one-variable run vanishes
};

inline const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::MissingNonzero: return "MissingNonzero";
    case ViolationKind::NonvanishingPurePower: return "NonvanishingPurePower";
    case ViolationKind::HankelZero: return "HankelZero";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  MultiIndex branch;      // node where the failing run or table starts
  std::size_t direction;  // 0-based variable of the run, or of the offending term
  int order;              // Hankel order, or total degree of the offending term
  friend bool operator==(const Violation&, const Violation&) = default;

  std::string str() const {
    return std::string(violation_name(kind)) + " at " + branch.str() + " direction " + std::to_string(direction + 1) +
           " order " + std::to_string(order);
  }
};

struct ConditionReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

// One Gragg run along a single variable, started at `origin`.
struct RunTrace {
  MultiIndex origin;
  std::size_t direction;
  std::vector<Rational> coefficients;
  GraggTrace trace;
};

class BuildOutcome {
 public:
  explicit BuildOutcome(AFraction f) : v_(std::move(f)) {}
  explicit BuildOutcome(ConditionReport r) : v_(std::move(r)) {}

  bool ok() const noexcept { return std::holds_alternative<AFraction>(v_); }
  const AFraction& fraction() const {
    if (!ok()) throw ConstructionFailed("construction failed: " + report().violations.front().str());
    return std::get<AFraction>(v_);
  }
  const ConditionReport& report() const { return std::get<ConditionReport>(v_); }

  std::vector<RunTrace> runs;

 private:
  std::variant<AFraction, ConditionReport> v_;
};

namespace detail {

inline void require_buildable(const TruncatedMultiSeries& L, int depth) {
  if (depth < 0) throw BuildError("depth must be non-negative");
  if (L.coefficient(MultiIndex(L.dim())) != 0) throw BuildError("series must have a zero constant term");
  if (L.degree_cap() < 2 * depth) throw InsufficientDegree(L.degree_cap(), 2 * depth);
}

// Walks the branch tree shared by the construction and by the condition
// check. `Run` decides how many nodes of a one-variable run exist; the
// walker handles lateral tables and the vanishing-term conditions.
template <class Run>
class Walker {
 public:
  Walker(std::size_t dim, int depth, Run& run) : dim_(dim), depth_(depth), run_(run) {}

  void visit_root(const TruncatedMultiSeries& L) { visit(MultiIndex(dim_), L, MultiIndex(dim_), dim_); }

  ConditionReport report;

 private:
  void visit(const MultiIndex& b, const TruncatedMultiSeries& table, const MultiIndex& base, std::size_t lateral) {
    const int P = depth_ - b.total_degree();
    if (P <= 0) return;
    if (!b.is_zero() && !check_free_terms(b, table)) return;
    for (std::size_t j = 0; j < lateral; ++j) {
      const MultiIndex step = MultiIndex::unit(dim_, j);
      if (vacuous(table, base + step, j)) continue;
      std::vector<Rational> seq;
      seq.reserve(static_cast<std::size_t>(2 * P));
      for (int m = 1; m <= 2 * P; ++m) seq.push_back(table.coefficient(base + MultiIndex::unit(dim_, j, m)));
      const int count = run_(b, j, seq, P, report);
      if (count <= 0 || j == 0) continue;
      TruncatedMultiSeries chain = reciprocal(shifted_section(table, base + step, j + 1));
      const MultiIndex twice = MultiIndex::unit(dim_, j, 2);
      for (int m = 1; m <= count; ++m) {
        const MultiIndex node = b + MultiIndex::unit(dim_, j, m);
        visit(node, chain, step, j);
        if (m == count) break;
        if (chain.coefficient(twice) == 0) {
          report.violations.push_back({ViolationKind::MissingNonzero, node, j, 2});
          break;
        }
        chain = reciprocal(shifted_section(chain, twice, j + 1));
      }
    }
  }

  // A direction whose whole section is zero contributes no branch at all.
  static bool vacuous(const TruncatedMultiSeries& table, const MultiIndex& start, std::size_t j) {
    for (const auto& [k, c] : table.terms())
      if (k.dominates(start) && (k - start).uses_only_first(j + 1)) return false;
    return true;
  }

  // Every nonconstant term of a reciprocal table that avoids the branch
  // variable must vanish. Reports the lowest offending term per variable.
  bool check_free_terms(const MultiIndex& b, const TruncatedMultiSeries& table) {
    const std::size_t v = *b.last_var();
    std::vector<std::optional<int>> worst(dim_);
    for (const auto& [k, c] : table.terms()) {
      if (k.is_zero() || k[v] != 0) continue;
      const std::size_t t = *k.top_var();
      if (!worst[t]) worst[t] = k.total_degree();
    }
    bool clean = true;
    for (std::size_t t = 0; t < dim_; ++t) {
      if (!worst[t]) continue;
      report.violations.push_back({ViolationKind::NonvanishingPurePower, b, t, *worst[t]});
      clean = false;
    }
    return clean;
  }

  std::size_t dim_;
  int depth_;
  Run& run_;
};

inline void report_run_failure(const MultiIndex& b, std::size_t j, int order, ConditionReport& report) {
  const auto kind = (order == 1 && j > 0) ? ViolationKind::MissingNonzero : ViolationKind::HankelZero;
  report.violations.push_back({kind, b, j, order});
}

}  // namespace detail

// Builds the A-fraction with levels 1..depth corresponding to L, which must
// have zero constant term and be known through degree 2*depth. Each run of
// Gragg's algorithm along one variable emits the elements of a chain of
// branches; lateral chains restart from the reciprocal of a section.
inline BuildOutcome build_afraction(const TruncatedMultiSeries& L, int depth) {
  detail::require_buildable(L, depth);
  AFraction f(L.dim(), depth);
  std::vector<RunTrace> runs;
  auto run = [&](const MultiIndex& b, std::size_t j, const std::vector<Rational>& seq, int, ConditionReport& report) {
    GraggExpansion ex = gragg_expand(seq);
    for (std::size_t m = 0; m < ex.fraction.size(); ++m)
      f.set(b + MultiIndex::unit(L.dim(), j, static_cast<int>(m + 1)), ex.fraction.pairs[m]);
    if (ex.failure) detail::report_run_failure(b, j, ex.failure->hankel_order(), report);
    const int count = static_cast<int>(ex.fraction.size());
    runs.push_back({b, j, seq, std::move(ex.trace)});
    return count;
  };
  detail::Walker walker(L.dim(), depth, run);
  walker.visit_root(L);
  if (!walker.report.ok()) {
    BuildOutcome out(std::move(walker.report));
    out.runs = std::move(runs);
    return out;
  }
  BuildOutcome out(std::move(f));
  out.runs = std::move(runs);
  return out;
}

// Checks the existence conditions through Hankel determinants instead of
// running the construction. Visits the same nodes as build_afraction and
// reports the same first failure.
inline ConditionReport check_conditions(const TruncatedMultiSeries& L, int depth) {
  detail::require_buildable(L, depth);
  auto run = [](const MultiIndex& b, std::size_t j, const std::vector<Rational>& seq, int P, ConditionReport& report) {
    for (int m = 1; m <= P; ++m) {
      if (hankel_det(seq, m) == 0) {
        detail::report_run_failure(b, j, m, report);
        return m - 1;
      }
    }
    return P;
  };
  detail::Walker walker(L.dim(), depth, run);
  walker.visit_root(L);
  return std::move(walker.report);
}

template <FractionForm To, FractionForm From>
BranchedFraction<To> convert_form(const BranchedFraction<From>& f) {
  BranchedFraction<To> r(f.dim(), f.depth());
  for (const auto& [e, el] : f.nodes()) r.set(e, el);
  return r;
}

inline JFraction to_jfraction(const AFraction& f) { return convert_form<FractionForm::J>(f); }
inline AFraction to_afraction(const JFraction& f) { return convert_form<FractionForm::A>(f); }

}  // namespace bcf

#endif  // BCF_BUILD_HPP
