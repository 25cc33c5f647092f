#pragma once

// Univariate polynomials over a prime field F_p, p a word-size prime.
// Elements are coefficient vectors in ascending degree with no trailing
// zeros (the zero polynomial is the empty vector); the characteristic
// lives in the ring instance, so all arithmetic goes through it.
//
// Canonical associates are monic. The total order compares polynomials as
// base-p numbers, which sorts by degree first and then by coefficients;
// residues(m) enumerates D/mD in exactly that order.

#include <cstdint>

#include "sifactor/ring.hpp"

namespace sif {

class PolyModRing {
 public:
  using Elem = std::vector<std::uint32_t>;

  /// p must be prime (checked) and < 2^31.
  explicit PolyModRing(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return {}; }
  Elem one() const { return {1}; }
  Elem from_int(std::int64_t v) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem pow(const Elem& x, long k) const;

  bool is_zero(const Elem& x) const { return x.empty(); }
  bool is_unit(const Elem& x) const { return x.size() == 1; }
  bool equal(const Elem& x, const Elem& y) const { return x == y; }
  int compare(const Elem& x, const Elem& y) const;

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
  std::string to_string(const Elem& x) const;

  long degree(const Elem& x) const { return static_cast<long>(x.size()) - 1; }

 private:
  std::uint32_t p_;

  std::uint32_t inv_mod_p(std::uint32_t a) const;
  // quotient/remainder by a nonzero divisor
  std::pair<Elem, Elem> divrem(const Elem& num, const Elem& den) const;
  // polynomial with value `v` when coefficients are read as base-p digits
  Elem from_index(std::uint64_t v) const;
};

static_assert(EffectivePid<PolyModRing>);

}  // namespace sif
