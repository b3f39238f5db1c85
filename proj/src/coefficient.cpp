#include "hv/coefficient.hpp"

#include <cctype>

#include "hv/error.hpp"

namespace hv {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
    : Error(what), offset_(offset), expected_(std::move(expected)) {}

Coefficient::Coefficient(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Coefficient::Coefficient(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Coefficient Coefficient::parse(std::string_view text) {
  auto bad = [&] { return Error("malformed rational '" + std::string(text) + "'"); };
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw bad();
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (negative) n = -n;
  return Coefficient(n, d);
}

Coefficient Coefficient::inv() const {
  if (is_zero()) throw DivisionByZero();
  return Coefficient(mpq_class(1 / q_));
}

std::string Coefficient::to_string() const { return q_.get_str(); }

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  q_ += o.q_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  q_ -= o.q_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  q_ *= o.q_;
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Coefficient add(const Coefficient& a, const Coefficient& b) { return a + b; }
Coefficient mul(const Coefficient& a, const Coefficient& b) { return a * b; }
Coefficient neg(const Coefficient& a) { return -a; }
Coefficient inv(const Coefficient& a) { return a.inv(); }

}  // namespace hv
