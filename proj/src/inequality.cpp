#include "chaobell/inequality.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chaobell/errors.hpp"

namespace chaobell {
namespace {

using Wide = __int128;

Rational from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    const Wide r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX) {
    throw std::overflow_error("rational overflow");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

void require_same_length(std::initializer_list<const SignSequence*> seqs) {
  const std::size_t n = (*seqs.begin())->size();
  for (const auto* s : seqs) {
    if (s->size() != n) {
      throw UsageError("sign sequences must have equal lengths");
    }
  }
}

InequalityReport make_report(const Rational& lhs, const Rational& bound) {
  return {lhs, bound, bound - lhs, lhs <= bound};
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  std::int64_t g = std::gcd(numerator, denominator);
  if (denominator < 0) {
    g = -g;
  }
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return from_wide(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide lhs = Wide{a.num_} * b.den_;
  const Wide rhs = Wide{b.num_} * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

SignSequence::SignSequence(std::vector<int> values) {
  if (values.empty()) {
    throw UsageError("sign sequence must not be empty");
  }
  values_.reserve(values.size());
  for (const int v : values) {
    if (v != 1 && v != -1) {
      throw UsageError("sign sequence entries must be +1 or -1, got " + std::to_string(v));
    }
    values_.push_back(static_cast<std::int8_t>(v));
  }
}

Rational cross_correlation(const SignSequence& x, const SignSequence& y) {
  require_same_length({&x, &y});
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * y[i];
  }
  return Rational(sum, static_cast<std::int64_t>(x.size()));
}

InequalityReport bell_three_check(const SignSequence& a, const SignSequence& b,
                                  const SignSequence& c) {
  require_same_length({&a, &b, &c});
  const Rational lhs = abs(cross_correlation(a, b) - cross_correlation(a, c));
  const Rational bound = Rational(1) - cross_correlation(b, c);
  return make_report(lhs, bound);
}

InequalityReport chsh_four_check(const SignSequence& a, const SignSequence& a_prime,
                                 const SignSequence& b, const SignSequence& b_prime) {
  require_same_length({&a, &a_prime, &b, &b_prime});
  const Rational lhs = abs(cross_correlation(a, b) - cross_correlation(a, b_prime)) +
                       abs(cross_correlation(a_prime, b) + cross_correlation(a_prime, b_prime));
  return make_report(lhs, Rational(2));
}

std::vector<SignSequence> parse_sign_sequences(std::istream& in) {
  std::vector<SignSequence> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (auto& ch : line) {
      if (ch == ',') {
        ch = ' ';
      }
    }
    std::istringstream tokens(line);
    std::vector<int> values;
    std::string tok;
    while (tokens >> tok) {
      if (tok == "1" || tok == "+1") {
        values.push_back(1);
      } else if (tok == "-1") {
        values.push_back(-1);
      } else {
        throw UsageError("line " + std::to_string(line_no) + ": invalid token '" + tok +
                         "' (expected +1 or -1)");
      }
    }
    if (!values.empty()) {
      out.emplace_back(std::move(values));
    }
  }
  return out;
}

}  // namespace chaobell
