#include "porism/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace porism {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto p = s.substr(0, slash);
    const auto d = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(d)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class den(std::string(d), 10);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    q = mpq_class(mpz_class(std::string(p), 10), den);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto ip = s.substr(0, dot);
    const auto fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty())) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class digits(std::string(ip) + std::string(fp), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    q = mpq_class(digits, scale);
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
    q = mpq_class(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Scalar(q);
}

bool Scalar::is_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(value_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

Scalar Scalar::sqrt() const {
  if (!is_square()) throw std::domain_error("Scalar::sqrt of a non-square");
  mpz_class n = ::sqrt(value_.get_num());
  mpz_class d = ::sqrt(value_.get_den());
  return Scalar(mpq_class(n, d));
}

Scalar Scalar::reciprocal() const {
  if (is_zero()) throw std::domain_error("Scalar: reciprocal of zero");
  return Scalar(mpq_class(1 / value_));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace porism
