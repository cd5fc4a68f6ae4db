#ifndef QUIVERLAB_FIELD_HPP
#define QUIVERLAB_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "quiverlab/error.hpp"

namespace quiverlab {

// Coefficient fields. Two backends: F_p for a prime p, and the rationals.
// Field objects are tiny value types handed to every arithmetic routine;
// elements are plain scalars (uint64_t reduced mod p, or mpq_class kept in
// canonical lowest terms by GMP).

class PrimeField {
 public:
  using Elt = std::uint64_t;
  static constexpr bool is_finite = true;

  // Default state is "unset" (modulus 0); arithmetic on it traps. It exists
  // so structs carrying a field can be built before the real one is known.
  PrimeField() = default;
  explicit PrimeField(std::uint64_t p);  // checks primality by trial division

  std::uint64_t modulus() const { return p_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt add(Elt a, Elt b) const { return (a + b) % p_; }
  Elt sub(Elt a, Elt b) const { return (a + p_ - b) % p_; }
  Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
  Elt mul(Elt a, Elt b) const { return (a * b) % p_; }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  bool is_zero(Elt a) const { return a == 0; }
  bool is_one(Elt a) const { return a == 1; }
  Elt from_int(long long v) const;
  Elt from_string(const std::string& s) const;
  std::string to_string(Elt a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint64_t p_ = 0;
};

class Rationals {
 public:
  using Elt = mpq_class;
  static constexpr bool is_finite = false;

  Elt zero() const { return mpq_class(0); }
  Elt one() const { return mpq_class(1); }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt inv(const Elt& a) const;
  Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elt& a) const { return sgn(a) == 0; }
  bool is_one(const Elt& a) const { return a == 1; }
  Elt from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  Elt from_string(const std::string& s) const;
  std::string to_string(const Elt& a) const { return a.get_str(); }

  bool operator==(const Rationals&) const { return true; }
  bool operator!=(const Rationals&) const { return false; }
};

// Runtime description of a field, as it appears in files and CLI flags:
// "p:<prime>" or "Q".
struct FieldDesc {
  enum class Kind { prime, rationals } kind = Kind::rationals;
  std::uint64_t p = 0;

  static FieldDesc parse(const std::string& text);
  std::string str() const;
  bool operator==(const FieldDesc& o) const { return kind == o.kind && p == o.p; }
};

bool is_prime_u64(std::uint64_t n);

}  // namespace quiverlab

#endif
