#include <doctest.h>

#include "corpus.hpp"
#include "quiverlab/field.hpp"

using namespace quiverlab;

TEST_CASE("prime field arithmetic") {
  PrimeField f(5);
  CHECK(f.modulus() == 5);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.sub(1, 3) == 3);
  CHECK(f.neg(2) == 3);
  CHECK(f.mul(2, 3) == 1);
  CHECK(f.inv(2) == 3);
  CHECK(f.div(1, 4) == 4);  // 4*4 = 16 = 1
  CHECK(f.from_int(-1) == 4);
  CHECK(f.from_int(12) == 2);
  CHECK(f.from_string("-7") == 3);
  CHECK(f.to_string(3) == "3");

  // every nonzero element has a working inverse
  for (std::uint64_t a = 1; a < 5; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("prime field rejects composites and accepts large primes") {
  CHECK(corpus::kind_of([] { PrimeField f(6); }) == ErrorKind::bad_parameter);
  CHECK(corpus::kind_of([] { PrimeField f(1); }) == ErrorKind::bad_parameter);
  CHECK(corpus::kind_of([] { PrimeField f(0); }) == ErrorKind::bad_parameter);
  PrimeField big(2147483647);  // 2^31 - 1
  CHECK(big.mul(big.modulus() - 1, big.modulus() - 1) == 1);
}

TEST_CASE("rationals") {
  Rationals q;
  CHECK(q.from_string("3/6") == q.from_string("1/2"));
  CHECK(q.to_string(q.from_string("-4/8")) == "-1/2");
  CHECK(q.is_one(q.div(q.from_int(7), q.from_int(7))));
  CHECK(q.is_zero(q.sub(q.one(), q.one())));
  CHECK(q.add(q.from_string("1/3"), q.from_string("1/6")) == q.from_string("1/2"));
  CHECK(corpus::kind_of([&] { q.inv(q.zero()); }).has_value());
  CHECK(corpus::kind_of([&] { q.from_string("x"); }).has_value());
}

TEST_CASE("field descriptions") {
  FieldDesc p = FieldDesc::parse("p:7");
  CHECK(p.kind == FieldDesc::Kind::prime);
  CHECK(p.p == 7);
  CHECK(p.str() == "p:7");
  FieldDesc r = FieldDesc::parse("Q");
  CHECK(r.kind == FieldDesc::Kind::rationals);
  CHECK(r.str() == "Q");
  CHECK(corpus::kind_of([] { FieldDesc::parse("p:9"); }).has_value());
  CHECK(corpus::kind_of([] { FieldDesc::parse("f:7"); }).has_value());
  CHECK(corpus::kind_of([] { FieldDesc::parse(""); }).has_value());
}
