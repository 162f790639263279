#ifndef BCF_MULTI_INDEX_HPP
#define BCF_MULTI_INDEX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcf {

// Exponent vector (k_1, ..., k_N) of a monomial. Also names a branch of a
// branched continued fraction: the branch i_1 >= i_2 >= ... >= i_k is the
// sum of unit vectors e_{i_1} + ... + e_{i_k}, and that sum determines the
// branch uniquely. Variables are numbered from 0 in code.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : k_(dim, 0) {}
  MultiIndex(std::initializer_list<int> k) : k_(k) { validate(); }
  explicit MultiIndex(std::vector<int> k) : k_(std::move(k)) { validate(); }

  static MultiIndex unit(std::size_t dim, std::size_t var, int power = 1) {
    if (var >= dim) throw std::out_of_range("MultiIndex::unit: variable out of range");
    MultiIndex m(dim);
    m.k_[var] = power;
    m.validate();
    return m;
  }

  std::size_t dim() const noexcept { return k_.size(); }
  int operator[](std::size_t i) const { return k_.at(i); }
  std::span<const int> components() const noexcept { return k_; }

  int total_degree() const noexcept { return std::accumulate(k_.begin(), k_.end(), 0); }
  bool is_zero() const noexcept { return total_degree() == 0; }

  // Smallest variable with a positive exponent. For a branch index this is
  // the variable of the last step i_k.
  std::optional<std::size_t> last_var() const noexcept {
    for (std::size_t i = 0; i < k_.size(); ++i)
      if (k_[i] > 0) return i;
    return std::nullopt;
  }

  // Largest variable with a positive exponent.
  std::optional<std::size_t> top_var() const noexcept {
    for (std::size_t i = k_.size(); i-- > 0;)
      if (k_[i] > 0) return i;
    return std::nullopt;
  }

  // True when k_l = 0 for every l >= count.
  bool uses_only_first(std::size_t count) const noexcept {
    for (std::size_t i = count; i < k_.size(); ++i)
      if (k_[i] != 0) return false;
    return true;
  }

  // Componentwise k >= other.
  bool dominates(const MultiIndex& other) const {
    check_dim(other);
    for (std::size_t i = 0; i < k_.size(); ++i)
      if (k_[i] < other.k_[i]) return false;
    return true;
  }

  MultiIndex& operator+=(const MultiIndex& other) {
    check_dim(other);
    for (std::size_t i = 0; i < k_.size(); ++i) k_[i] += other.k_[i];
    return *this;
  }

  // Requires other <= *this componentwise.
  MultiIndex& operator-=(const MultiIndex& other) {
    check_dim(other);
    for (std::size_t i = 0; i < k_.size(); ++i) {
      if (k_[i] < other.k_[i]) throw std::domain_error("MultiIndex subtraction leaves a negative component");
      k_[i] -= other.k_[i];
    }
    return *this;
  }

  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  // Canonical order: total degree first, then lexicographic.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.k_.begin(), a.k_.end(), b.k_.begin(), b.k_.end());
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < k_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(k_[i]);
    }
    return s + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiIndex& m) { return os << m.str(); }

 private:
  void validate() const {
    if (std::any_of(k_.begin(), k_.end(), [](int v) { return v < 0; }))
      throw std::domain_error("MultiIndex components must be non-negative");
  }
  void check_dim(const MultiIndex& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("MultiIndex dimension mismatch");
  }

  std::vector<int> k_;
};

// Visits every multi-index of the given dimension with |k| <= max_degree in
// canonical order. Only the first `active` variables may be nonzero.
template <class Fn>
void for_each_index(std::size_t dim, int max_degree, Fn&& fn, std::size_t active = static_cast<std::size_t>(-1)) {
  active = std::min(active, dim);
  std::vector<int> k(dim, 0);
  for (int d = 0; d <= max_degree; ++d) {
    if (active == 0) {
      if (d == 0) fn(MultiIndex(dim));
      continue;
    }
    // Enumerate compositions of d into `active` parts in lexicographic order.
    std::fill(k.begin(), k.end(), 0);
    k[active - 1] = d;
    while (true) {
      fn(MultiIndex(k));
      // Next composition in lexicographic order: find the rightmost position
      // i < active-1 that can be incremented by borrowing from the tail.
      int i = static_cast<int>(active) - 2;
      while (i >= 0) {
        int tail = 0;
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < active; ++j) tail += k[j];
        if (tail > 0) break;
        --i;
      }
      if (i < 0) break;
      int tail = 0;
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < active; ++j) {
        tail += k[j];
        k[j] = 0;
      }
      ++k[static_cast<std::size_t>(i)];
      k[active - 1] = tail - 1;
    }
  }
}

}  // namespace bcf

#endif  // BCF_MULTI_INDEX_HPP
