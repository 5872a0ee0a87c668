#include "gdta/scalar.hpp"

namespace gdta {

namespace {

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, p);
    b = mulmod_u64(b, b, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// Deterministic Miller-Rabin; the witness set covers all 64-bit inputs.
bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (v == q) return true;
    if (v % q == 0) return false;
  }
  std::uint64_t d = v - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, v);
      if (x == v - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // Extended Euclid on signed 128-bit accumulators.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

Scalar Scalar::zero(std::uint64_t p) { return Scalar(p, 0, 0); }

Scalar Scalar::one(std::uint64_t p) { return Scalar(p, p ? 1 % p : 0, p ? 0 : 1); }

Scalar Scalar::from_integer(const mpz_class& z, std::uint64_t p) {
  if (p == 0) return Scalar(0, 0, mpq_class(z));
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return Scalar(p, m.get_ui(), 0);
}

Scalar Scalar::from_integer(long z, std::uint64_t p) { return from_integer(mpz_class(z), p); }

Scalar Scalar::from_quotient(const mpz_class& num, const mpz_class& den, std::uint64_t p) {
  Scalar d = from_integer(den, p);
  if (d.is_zero()) throw std::domain_error("denominator vanishes in the field");
  return from_integer(num, p) * d.inverse();
}

bool Scalar::is_zero() const { return p_ ? r_ == 0 : q_ == 0; }

Scalar Scalar::operator-() const {
  if (p_) return Scalar(p_, r_ ? p_ - r_ : 0, 0);
  return Scalar(0, 0, mpq_class(-q_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_) return Scalar(p_, invmod_u64(r_, p_), 0);
  return Scalar(0, 0, mpq_class(1) / q_);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw std::logic_error("mixed-field scalar arithmetic");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (p_) {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (p_) {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (p_) {
    r_ = mulmod_u64(r_, o.r_, p_);
  } else {
    q_ *= o.q_;
  }
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::str() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(p_);
}

const mpq_class& Scalar::rational() const {
  if (p_) throw std::logic_error("rational() on a modular scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (!p_) throw std::logic_error("residue() on a rational scalar");
  return r_;
}

}  // namespace gdta
