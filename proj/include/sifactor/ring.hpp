#pragma once

// Contract for an effective principal ideal domain: the exact operations
// the factorization layers need from a base ring. Two models ship with the
// library, arbitrary-precision integers (integer_ring.hpp) and univariate
// polynomials over a prime field (poly_ring.hpp). Everything is exact; no
// floating point appears anywhere.

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sif {

/// Input text that does not denote an element.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A request that would exceed the configured desk-scale limits.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decomposition x = unit * canonical, where `canonical` is the fixed
/// representative of the associate class of x (nonnegative for integers,
/// monic for polynomials).
template <typename E>
struct Normalized {
  E canonical;
  E unit;
};

/// Extended gcd certificate: g = s*x + t*y, with g canonical.
template <typename E>
struct BezoutCertificate {
  E g;
  E s;
  E t;
};

template <typename E>
struct PrimePower {
  E prime;        // canonical, passes is_prime_elem
  long exponent;  // >= 1
};

/// x = unit * prod(prime_i ^ exponent_i), primes canonical, pairwise
/// distinct, sorted by the ring's total order.
template <typename E>
struct PrimeFactorization {
  E unit;
  std::vector<PrimePower<E>> factors;

  long distinct_primes() const { return static_cast<long>(factors.size()); }
  long total_exponent() const {
    long s = 0;
    for (const auto& f : factors) s += f.exponent;
    return s;
  }
};

/// Valuation of an element at a prime; disengaged means infinite
/// (the valuation of 0).
using Valuation = std::optional<long>;

/// Operations required of a base ring. All are pure; ring instances are
/// immutable and safe to share across threads.
///
/// Semantics the factorization layers rely on:
///  - equal/compare are an exact equality and a total order;
///  - normalize(x) is idempotent and picks one element per associate class;
///  - divide_exact(x, y) is the quotient when y | x, disengaged otherwise;
///  - gcd_ext(x, y) requires not both zero and returns a canonical gcd;
///  - residues(m) enumerates D/mD exactly once each, in a fixed order,
///    each entry equal to its own reduce_mod image;
///  - quotient_size(m) is |D/mD| when it fits in 64 bits;
///  - nth_prime(i) enumerates canonical primes ascending (i >= 0).
template <typename R>
concept EffectivePid = requires(const R& r, const typename R::Elem& x,
                                const typename R::Elem& y, long k,
                                std::int64_t v, const std::string& text) {
  typename R::Elem;
  { r.zero() } -> std::same_as<typename R::Elem>;
  { r.one() } -> std::same_as<typename R::Elem>;
  { r.from_int(v) } -> std::same_as<typename R::Elem>;
  { r.add(x, y) } -> std::same_as<typename R::Elem>;
  { r.sub(x, y) } -> std::same_as<typename R::Elem>;
  { r.neg(x) } -> std::same_as<typename R::Elem>;
  { r.mul(x, y) } -> std::same_as<typename R::Elem>;
  { r.pow(x, k) } -> std::same_as<typename R::Elem>;
  { r.is_zero(x) } -> std::same_as<bool>;
  { r.is_unit(x) } -> std::same_as<bool>;
  { r.equal(x, y) } -> std::same_as<bool>;
  { r.compare(x, y) } -> std::same_as<int>;
  { r.normalize(x) } -> std::same_as<Normalized<typename R::Elem>>;
  { r.divide_exact(x, y) } -> std::same_as<std::optional<typename R::Elem>>;
  { r.gcd_ext(x, y) } -> std::same_as<BezoutCertificate<typename R::Elem>>;
  { r.factor(x) } -> std::same_as<PrimeFactorization<typename R::Elem>>;
  { r.is_prime_elem(x) } -> std::same_as<bool>;
  { r.valuation(x, y) } -> std::same_as<Valuation>;
  { r.residues(x) } -> std::same_as<std::vector<typename R::Elem>>;
  { r.reduce_mod(x, y) } -> std::same_as<typename R::Elem>;
  { r.quotient_size(x) } -> std::same_as<std::optional<std::uint64_t>>;
  { r.nth_prime(k) } -> std::same_as<typename R::Elem>;
  { r.parse(text) } -> std::same_as<typename R::Elem>;
  { r.to_string(x) } -> std::same_as<std::string>;
};

template <EffectivePid R>
typename R::Elem gcd_of(const R& r, const typename R::Elem& x,
                        const typename R::Elem& y) {
  return r.gcd_ext(x, y).g;
}

/// True when 1 generates (x, y); false when both are zero.
template <EffectivePid R>
bool coprime(const R& r, const typename R::Elem& x, const typename R::Elem& y) {
  if (r.is_zero(x) && r.is_zero(y)) return false;
  return r.is_unit(gcd_of(r, x, y));
}

/// Inverse of a unit. Domain error otherwise.
template <EffectivePid R>
typename R::Elem unit_inverse(const R& r, const typename R::Elem& u) {
  auto q = r.divide_exact(r.one(), u);
  if (!q) throw std::domain_error("unit_inverse: element is not a unit");
  return *q;
}

/// unit * prod(prime^exponent); reconstructs the factored element.
template <EffectivePid R>
typename R::Elem reassemble(const R& r, const PrimeFactorization<typename R::Elem>& pf) {
  typename R::Elem acc = pf.unit;
  for (const auto& f : pf.factors) acc = r.mul(acc, r.pow(f.prime, f.exponent));
  return acc;
}

}  // namespace sif
