#include "quiverlab/field.hpp"

namespace quiverlab {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::bad_parameter: return "bad parameter";
    case ErrorKind::parse_error: return "parse error";
    case ErrorKind::not_admissible: return "not admissible";
    case ErrorKind::malformed_relation: return "malformed relation";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::not_dynkin: return "not Dynkin";
    case ErrorKind::not_a_root: return "not a root";
    case ErrorKind::relation_violated: return "relation violated";
    case ErrorKind::shape_mismatch: return "shape mismatch";
    case ErrorKind::algebra_mismatch: return "algebra mismatch";
    case ErrorKind::field_mismatch: return "field mismatch";
    case ErrorKind::no_such_vertex: return "no such vertex";
    case ErrorKind::not_a_node: return "not a node";
    case ErrorKind::precondition_failed: return "precondition failed";
    case ErrorKind::budget_exceeded: return "budget exceeded";
    case ErrorKind::zero_module: return "zero module";
    case ErrorKind::guard_tripped: return "guard tripped";
    case ErrorKind::undecidable: return "undecidable";
  }
  return "error";
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p))
    throw Error(ErrorKind::bad_parameter, "field modulus " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 31))
    throw Error(ErrorKind::bad_parameter, "field modulus too large (need p < 2^31)");
}

PrimeField::Elt PrimeField::inv(Elt a) const {
  if (a == 0) throw Error(ErrorKind::bad_parameter, "division by zero in F_" + std::to_string(p_));
  // extended Euclid on (a, p)
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<Elt>(t);
}

PrimeField::Elt PrimeField::from_int(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return static_cast<Elt>(m);
}

PrimeField::Elt PrimeField::from_string(const std::string& s) const {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw Error(ErrorKind::parse_error, "bad field element '" + s + "'");
    return from_int(v);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::parse_error, "bad field element '" + s + "'");
  } catch (const std::out_of_range&) {
    throw Error(ErrorKind::parse_error, "field element out of range '" + s + "'");
  }
}

Rationals::Elt Rationals::inv(const Elt& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::bad_parameter, "division by zero in Q");
  return 1 / a;
}

Rationals::Elt Rationals::from_string(const std::string& s) const {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw Error(ErrorKind::parse_error, "bad rational '" + s + "'");
  if (q.get_den() == 0)
    throw Error(ErrorKind::parse_error, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

FieldDesc FieldDesc::parse(const std::string& text) {
  if (text == "Q" || text == "q") return FieldDesc{Kind::rationals, 0};
  if (text.rfind("p:", 0) == 0) {
    const std::string num = text.substr(2);
    try {
      size_t pos = 0;
      unsigned long long p = std::stoull(num, &pos);
      if (pos != num.size()) throw std::invalid_argument("");
      PrimeField check{p};  // validates primality
      return FieldDesc{Kind::prime, p};
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "bad field spec '" + text + "'");
    }
  }
  throw Error(ErrorKind::parse_error, "bad field spec '" + text + "' (want p:<prime> or Q)");
}

std::string FieldDesc::str() const {
  return kind == Kind::prime ? "p:" + std::to_string(p) : std::string("Q");
}

}  // namespace quiverlab
