#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gdta {

// Thrown when an operation would exceed a configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime_u64(std::uint64_t v);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

/// Exact element of the prime field: F_p when p > 0, Q when p == 0.
/// Values in F_p are canonical residues in [0, p).
class Scalar {
 public:
  Scalar() = default;  // zero of Q

  static Scalar zero(std::uint64_t p);
  static Scalar one(std::uint64_t p);
  /// Image of an integer under the unital ring homomorphism Z -> F_p (or Z -> Q).
  static Scalar from_integer(const mpz_class& z, std::uint64_t p);
  static Scalar from_integer(long z, std::uint64_t p);
  /// num / den; requires den nonzero in the field.
  static Scalar from_quotient(const mpz_class& num, const mpz_class& den, std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  bool is_zero() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "3/4" in characteristic 0, "2 mod 5" in characteristic 5.
  std::string str() const;

  const mpq_class& rational() const;   // requires characteristic 0
  std::uint64_t residue() const;       // requires characteristic p > 0

 private:
  Scalar(std::uint64_t p, std::uint64_t r, mpq_class q) : p_(p), r_(r), q_(std::move(q)) {}
  void check_same_field(const Scalar& o) const;

  std::uint64_t p_ = 0;
  std::uint64_t r_ = 0;  // residue when p_ > 0
  mpq_class q_ = 0;      // value when p_ == 0
};

}  // namespace gdta
