#ifndef BCF_FRACTION_HPP
#define BCF_FRACTION_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcf/gragg1d.hpp"
#include "bcf/multi_index.hpp"
#include "bcf/rational.hpp"

namespace bcf {

enum class FractionForm { A, J };

inline const char* form_name(FractionForm f) { return f == FractionForm::A ? "A" : "J"; }

// Whether the last step of branch e repeats the variable of the previous
// step (i_{k-1} = i_k). Those partial numerators carry a minus sign.
inline bool repeats_last_variable(const MultiIndex& e) {
  auto v = e.last_var();
  return v && e.total_degree() >= 2 && e[*v] >= 2;
}

// Branch e with its last step removed; the zero index for level-1 branches.
inline MultiIndex parent_branch(const MultiIndex& e) {
  auto v = e.last_var();
  if (!v) throw std::invalid_argument("the root has no parent branch");
  return e - MultiIndex::unit(e.dim(), *v);
}

struct BranchNode {
  MultiIndex e;
  std::size_t last_var;
  Rational p;
  Rational q;
};

// Element table of a multidimensional A- or J-fraction with independent
// variables, keyed by branch multi-index. Both forms share the same
// elements; they differ only in how partial quotients are evaluated:
//   A: (-1)^d p z_{i_{k-1}} z_{i_k} / (1 + q z_{i_k})
//   J: (-1)^d p / (q + w_{i_k})
// with d = 1 exactly when i_{k-1} = i_k (never at level 1).
template <FractionForm Form>
class BranchedFraction {
 public:
  static constexpr FractionForm form = Form;
  using Nodes = std::map<MultiIndex, ElementPair>;

  BranchedFraction(std::size_t dim, int depth) : dim_(dim), depth_(depth) {
    if (dim == 0) throw std::invalid_argument("fraction dimension must be positive");
    if (depth < 0) throw std::invalid_argument("fraction depth must be non-negative");
  }

  std::size_t dim() const noexcept { return dim_; }
  int depth() const noexcept { return depth_; }
  const Nodes& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  const ElementPair* find(const MultiIndex& e) const {
    auto it = nodes_.find(e);
    return it == nodes_.end() ? nullptr : &it->second;
  }

  const ElementPair& at(const MultiIndex& e) const {
    if (const auto* el = find(e)) return *el;
    throw std::out_of_range("fraction has no node " + e.str());
  }

  void set(const MultiIndex& e, ElementPair el) {
    if (e.dim() != dim_) throw std::invalid_argument("branch " + e.str() + " has the wrong dimension");
    const int level = e.total_degree();
    if (level < 1 || level > depth_)
      throw std::invalid_argument("branch " + e.str() + " lies outside levels 1.." + std::to_string(depth_));
    if (el.p == 0) throw std::invalid_argument("partial numerator p at " + e.str() + " must be nonzero");
    nodes_.insert_or_assign(e, std::move(el));
  }

  // Signed partial numerator (-1)^d p of branch e.
  Rational partial_numerator(const MultiIndex& e) const {
    const Rational& p = at(e).p;
    return repeats_last_variable(e) ? Rational(-p) : p;
  }

  std::vector<BranchNode> branch_nodes() const {
    std::vector<BranchNode> out;
    out.reserve(nodes_.size());
    for (const auto& [e, el] : nodes_) out.push_back({e, *e.last_var(), el.p, el.q});
    return out;
  }

  // Copy restricted to levels 1..n.
  BranchedFraction truncated(int n) const {
    BranchedFraction r(dim_, std::min(n, depth_));
    for (const auto& [e, el] : nodes_)
      if (e.total_degree() <= r.depth_) r.nodes_.emplace(e, el);
    return r;
  }

  // Branches of levels 1..n that are absent from the table.
  std::vector<MultiIndex> missing_nodes(int n) const {
    std::vector<MultiIndex> out;
    for_each_index(dim_, n, [&](const MultiIndex& e) {
      if (!e.is_zero() && !nodes_.count(e)) out.push_back(e);
    });
    return out;
  }

  bool is_complete() const { return missing_nodes(depth_).empty(); }

  friend bool operator==(const BranchedFraction&, const BranchedFraction&) = default;

 private:
  std::size_t dim_;
  int depth_;
  Nodes nodes_;
};

using AFraction = BranchedFraction<FractionForm::A>;
using JFraction = BranchedFraction<FractionForm::J>;

// Number of branches e with 1 <= |e| <= n in dimension N.
inline std::size_t branch_count(std::size_t dim, int n) {
  std::size_t count = 0;
  for_each_index(dim, n, [&](const MultiIndex& e) { count += e.is_zero() ? 0 : 1; });
  return count;
}

}  // namespace bcf

#endif  // BCF_FRACTION_HPP
