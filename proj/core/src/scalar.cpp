#include "kcat/scalar.hpp"

#include <charconv>

namespace kcat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(const FieldSpec& spec) : spec_(spec) {
  if (spec.kind == FieldKind::Rationals) {
    if (spec.characteristic != 0)
      throw Error("NonPrimeCharacteristic", "rationals have characteristic 0");
    return;
  }
  if (spec.characteristic >= (1u << 31))
    throw Error("NonPrimeCharacteristic",
                "characteristic " + std::to_string(spec.characteristic) + " exceeds 2^31");
  if (!is_prime(spec.characteristic))
    throw Error("NonPrimeCharacteristic",
                std::to_string(spec.characteristic) + " is not prime");
}

Scalar Field::zero() const {
  if (spec_.kind == FieldKind::Rationals) return Scalar(Rational(0));
  return Scalar(std::uint32_t{0});
}

Scalar Field::one() const {
  if (spec_.kind == FieldKind::Rationals) return Scalar(Rational(1));
  return Scalar(std::uint32_t{spec_.characteristic == 1 ? 0u : 1u});
}

Scalar Field::from_integer(long long n) const {
  if (spec_.kind == FieldKind::Rationals) return Scalar(Rational(n));
  long long p = spec_.characteristic;
  long long r = n % p;
  if (r < 0) r += p;
  return Scalar(static_cast<std::uint32_t>(r));
}

void Field::check_kind(const Scalar& a) const {
  if (a.is_rational() != (spec_.kind == FieldKind::Rationals))
    throw Error("BadScalar", "scalar does not belong to this field");
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  check_kind(a);
  check_kind(b);
  if (spec_.kind == FieldKind::Rationals)
    return Scalar(Rational(a.rational() + b.rational()));
  std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
  return Scalar(static_cast<std::uint32_t>(s % spec_.characteristic));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
  check_kind(a);
  if (spec_.kind == FieldKind::Rationals) return Scalar(Rational(-a.rational()));
  if (a.residue() == 0) return a;
  return Scalar(static_cast<std::uint32_t>(spec_.characteristic - a.residue()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  check_kind(a);
  check_kind(b);
  if (spec_.kind == FieldKind::Rationals)
    return Scalar(Rational(a.rational() * b.rational()));
  std::uint64_t p = std::uint64_t{a.residue()} * b.residue();
  return Scalar(static_cast<std::uint32_t>(p % spec_.characteristic));
}

Scalar Field::inv(const Scalar& a) const {
  check_kind(a);
  if (is_zero(a)) throw Error("DivisionByZero", "inverse of zero");
  if (spec_.kind == FieldKind::Rationals)
    return Scalar(Rational(1 / a.rational()));
  // extended Euclid on (residue, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = spec_.characteristic, new_r = a.residue();
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += spec_.characteristic;
  return Scalar(static_cast<std::uint32_t>(t));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

bool Field::is_zero(const Scalar& a) const {
  check_kind(a);
  if (spec_.kind == FieldKind::Rationals) return a.rational() == 0;
  return a.residue() == 0;
}

bool Field::is_one(const Scalar& a) const { return a == one(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Scalar Field::parse(std::string_view text) const {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body, den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || (!den.empty() && !all_digits(den)))
    throw Error("BadScalar", "malformed scalar literal '" + std::string(text) + "'");
  if (spec_.kind == FieldKind::Rationals) {
    boost::multiprecision::cpp_int n(std::string(num));
    boost::multiprecision::cpp_int d = 1;
    if (!den.empty()) {
      d = boost::multiprecision::cpp_int(std::string(den));
      if (d == 0)
        throw Error("BadScalar", "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    if (negative) r = -r;
    return Scalar(std::move(r));
  }
  if (!den.empty())
    throw Error("BadScalar", "prime-field scalars are bare residues, got '" +
                                 std::string(text) + "'");
  boost::multiprecision::cpp_int n(std::string(num));
  boost::multiprecision::cpp_int p = spec_.characteristic;
  boost::multiprecision::cpp_int r = n % p;
  if (negative && r != 0) r = p - r;
  return Scalar(static_cast<std::uint32_t>(r));
}

std::string Field::str(const Scalar& a) const {
  check_kind(a);
  if (spec_.kind == FieldKind::Rationals) {
    return numerator(a.rational()).str() + "/" + denominator(a.rational()).str();
  }
  return std::to_string(a.residue());
}

std::string field_spec_to_string(const FieldSpec& spec) {
  if (spec.kind == FieldKind::Rationals) return "q";
  return "fp:" + std::to_string(spec.characteristic);
}

FieldSpec field_spec_from_string(std::string_view text) {
  if (text == "q") return FieldSpec{FieldKind::Rationals, 0};
  if (text.substr(0, 3) == "fp:") {
    std::string_view digits = text.substr(3);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size())
      return FieldSpec{FieldKind::PrimeField, p};
  }
  throw Error("BadFieldSpec", "expected 'q' or 'fp:<p>', got '" + std::string(text) + "'");
}

}  // namespace kcat
