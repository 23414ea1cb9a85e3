#include "tpscaffold/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace tpscaffold {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);

  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!all_digits(num_digits) || !all_digits(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);

  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(value_.get_den(), value_.get_num());
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational ceil(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get().get_num_mpz_t(), x.get().get_den_mpz_t());
  return Rational(q, 1);
}

}  // namespace tpscaffold
