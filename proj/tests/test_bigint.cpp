#include <doctest.h>

#include "hjarcs/bigint.hpp"

using hjarcs::BigUInt;

TEST_CASE("bigint basics") {
  BigUInt z;
  CHECK(z.is_zero());
  CHECK(z.to_string() == "0");

  BigUInt a(43008);
  CHECK(a.equals(43008));
  CHECK(a.to_string() == "43008");

  BigUInt b(1);
  for (int i = 0; i < 20; ++i) b.mul(10);
  CHECK(b.to_string() == "100000000000000000000");
  CHECK(!b.fits_u64());

  BigUInt c(0xffffffffffffffffull);
  CHECK(c.to_string() == "18446744073709551615");
  c.mul(2);
  CHECK(c.to_string() == "36893488147419103230");

  CHECK(BigUInt(5) < BigUInt(7));
  CHECK(BigUInt(1) < b);
  CHECK(BigUInt(42) == BigUInt(42));
}

TEST_CASE("bigint factorial") {
  BigUInt f(1);
  for (uint64_t i = 2; i <= 25; ++i) f.mul(i);
  CHECK(f.to_string() == "15511210043330985984000000");
}
