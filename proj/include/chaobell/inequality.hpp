#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace chaobell {

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// "p/q", or "p" when q == 1.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Non-empty sequence of +1/-1 outcomes.
class SignSequence {
 public:
  /// Throws UsageError on an empty list or any entry other than +1/-1.
  explicit SignSequence(std::vector<int> values);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::int8_t> values() const { return values_; }

 private:
  std::vector<std::int8_t> values_;
};

struct InequalityReport {
  Rational lhs;
  Rational bound;
  Rational margin;  // bound - lhs
  bool satisfied = false;
};

/// (sum x_i y_i) / N. Throws UsageError on a length mismatch.
Rational cross_correlation(const SignSequence& x, const SignSequence& y);

/// |C(a,b) - C(a,c)| <= 1 - C(b,c).
InequalityReport bell_three_check(const SignSequence& a, const SignSequence& b,
                                  const SignSequence& c);

/// |C(a,b) - C(a,b')| + |C(a',b) + C(a',b')| <= 2.
InequalityReport chsh_four_check(const SignSequence& a, const SignSequence& a_prime,
                                 const SignSequence& b, const SignSequence& b_prime);

/// One sequence per non-blank line; tokens separated by whitespace and/or
/// commas. Accepts "1", "+1" and "-1". Throws UsageError on anything else.
std::vector<SignSequence> parse_sign_sequences(std::istream& in);

}  // namespace chaobell
