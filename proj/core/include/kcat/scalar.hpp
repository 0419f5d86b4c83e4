#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace kcat {

/// Error with a stable machine-readable code ("NotFree", "BadScalar", ...)
/// in front of the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// One named check failure with a witness (validators return lists of these
/// instead of throwing).
struct Diagnostic {
  std::string check;
  std::string witness;
};

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t characteristic = 0;  // 0 for the rationals, a prime otherwise

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

using Rational = boost::multiprecision::cpp_rational;

/// Exact scalar: a rational in canonical form (lowest terms, positive
/// denominator) or a prime-field residue in [0, p). Which alternative is in
/// use is fixed by the owning Field; equality is structural.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  explicit Scalar(Rational r) : value_(std::move(r)) {}
  explicit Scalar(std::uint32_t residue) : value_(residue) {}

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  std::variant<Rational, std::uint32_t> value_;
};

/// Field arithmetic over the rationals or a prime field F_p, p < 2^31.
/// All operations are total on valid inputs; inv(0) throws DivisionByZero.
class Field {
 public:
  static Field rationals() { return Field(FieldSpec{FieldKind::Rationals, 0}); }
  static Field prime_field(std::uint32_t p) {
    return Field(FieldSpec{FieldKind::PrimeField, p});
  }

  /// Validates the spec (primality of the characteristic) and returns the
  /// field object. Throws NonPrimeCharacteristic.
  explicit Field(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long long n) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;

  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  /// Scalar literal grammar: optional sign, decimal integer, optionally
  /// "/" and a positive decimal integer. Prime-field literals are bare
  /// residues (no "/"); out-of-range values are reduced mod p.
  Scalar parse(std::string_view text) const;
  /// Rationals print as "num/den" (always with the denominator, e.g. "7/1");
  /// prime-field scalars print as bare residues.
  std::string str(const Scalar& a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  void check_kind(const Scalar& a) const;
  FieldSpec spec_;
};

/// Spec'd constructor name; same as Field's validating constructor.
inline Field make_field(const FieldSpec& spec) { return Field(spec); }

bool is_prime(std::uint64_t n);

std::string field_spec_to_string(const FieldSpec& spec);   // "q" or "fp:<p>"
FieldSpec field_spec_from_string(std::string_view text);   // throws BadFieldSpec

}  // namespace kcat
