#include "heptaknot/rational.hpp"

#include <cctype>
#include <cmath>

#include "heptaknot/errors.hpp"

namespace heptaknot {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorCode::parse_error, "empty rational literal");

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  auto bad = [&]() -> Rational {
    fail(ErrorCode::parse_error, "invalid rational literal: '" + s + "'");
  };

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return bad();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorCode::parse_error, "zero denominator: '" + s + "'");
    value = Rational(n, d);
    value.canonicalize();
  } else if (auto point = body.find('.'); point != std::string_view::npos) {
    std::string_view whole = body.substr(0, point);
    std::string_view frac = body.substr(point + 1);
    if (whole.empty() && frac.empty()) return bad();
    if (!whole.empty() && !all_digits(whole)) return bad();
    if (!frac.empty() && !all_digits(frac)) return bad();
    mpz_class scaled(std::string(whole) + std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(scaled, scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) return bad();
    value = Rational(mpz_class(std::string(body), 10));
  }

  if (negative) value = -value;
  return value;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    fail(ErrorCode::parse_error, "non-finite number is not a rational");
  }
  return Rational(value);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace heptaknot
