#pragma once

// The ring of integers with arbitrary-precision arithmetic (GMP).
// Canonical associates are nonnegative; factoring is plain trial division,
// which is all the desk-scale contract asks for.

#include <gmpxx.h>

#include "sifactor/ring.hpp"

namespace sif {

class IntegerRing {
 public:
  using Elem = mpz_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const;

  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem neg(const Elem& x) const { return -x; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem pow(const Elem& x, long k) const;

  bool is_zero(const Elem& x) const { return sgn(x) == 0; }
  bool is_unit(const Elem& x) const { return x == 1 || x == -1; }
  bool equal(const Elem& x, const Elem& y) const { return x == y; }
  int compare(const Elem& x, const Elem& y) const {
    int c = cmp(x, y);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }

  Normalized<Elem> normalize(const Elem& x) const;
  std::optional<Elem> divide_exact(const Elem& x, const Elem& y) const;
  BezoutCertificate<Elem> gcd_ext(const Elem& x, const Elem& y) const;

  PrimeFactorization<Elem> factor(const Elem& x) const;
  bool is_prime_elem(const Elem& x) const;
  Valuation valuation(const Elem& p, const Elem& x) const;

  std::vector<Elem> residues(const Elem& m) const;
  Elem reduce_mod(const Elem& x, const Elem& m) const;
  std::optional<std::uint64_t> quotient_size(const Elem& m) const;

  Elem nth_prime(long i) const;

  Elem parse(const std::string& text) const;
  std::string to_string(const Elem& x) const { return x.get_str(); }
};

static_assert(EffectivePid<IntegerRing>);

}  // namespace sif
