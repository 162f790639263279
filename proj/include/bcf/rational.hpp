#ifndef BCF_RATIONAL_HPP
#define BCF_RATIONAL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace bcf {

// Exact rational scalar. mpq_class keeps values canonical after every
// arithmetic operation (positive denominator, reduced fraction).
using Rational = mpq_class;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

inline mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

inline mpz_class parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  mpz_class v(std::string(s), 10);
  return neg ? mpz_class(-v) : v;
}

}  // namespace detail

// Parses "num/den", an integer, or a decimal literal such as "-1.25e-3".
// Decimal literals are converted exactly ("0.1" is 1/10, not the double).
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = detail::parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    mpz_class den = detail::parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::string_view body = text;
  bool neg = false;
  if (body.front() == '+' || body.front() == '-') {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    mpz_class ev = detail::parse_integer(exp_text);
    if (!ev.fits_slong_p() || abs(ev) > 100000)
      throw ParseError("exponent out of range in '" + std::string(text) + "'");
    exponent = ev.get_si();
    body = body.substr(0, e);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !detail::all_digits(int_part)) ||
        (!frac_part.empty() && !detail::all_digits(frac_part)))
      throw ParseError("malformed decimal literal '" + std::string(text) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    frac_len = static_cast<long>(frac_part.size());
  } else {
    if (!detail::all_digits(body))
      throw ParseError("malformed rational literal '" + std::string(text) + "'");
    digits = std::string(body);
  }
  mpz_class num(digits, 10);
  if (neg) num = -num;
  long scale = exponent - frac_len;
  Rational r;
  if (scale >= 0) {
    r = Rational(num * detail::pow10(static_cast<unsigned long>(scale)));
  } else {
    r = Rational(num, detail::pow10(static_cast<unsigned long>(-scale)));
    r.canonicalize();
  }
  return r;
}

// Canonical "num/den" text; integers are written without a denominator.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

// Converts an exact element to the scalar type used for evaluation.
template <class T>
T scalar_cast(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return static_cast<T>(r.get_d());
  }
}

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const Rational& x) { return std::fabs(x.get_d()); }

}  // namespace bcf

#endif  // BCF_RATIONAL_HPP
