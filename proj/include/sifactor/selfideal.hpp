#pragma once

// Elements of the self-idealization R(D) of a base PID D: pairs (a, b)
// standing for the matrix [[a, b], [0, a]], with componentwise addition and
// the commutative product (a,b)*(x,y) = (ax, ay+bx). The first component is
// the norm; an element is a zero-divisor exactly when its norm is 0.
//
// Classification, associate testing, canonical forms and irreducibility all
// reduce to base-ring computations on the two components.

#include <utility>

#include "sifactor/ring.hpp"

namespace sif {

template <EffectivePid R>
struct SIElement {
  typename R::Elem a;  // norm component
  typename R::Elem b;  // nilpotent component
};

enum class Classification { Zero, Unit, ZeroDivisorNonunit, RegularNonunit };

enum class IrreducibleKind { ZeroDivisorPrime, PrimeNorm, CoprimePrimePower };

/// Data of a regular element whose norm is a single prime power: the
/// canonical prime, its exponent in the norm, and the valuation of the
/// nilpotent component at that prime (disengaged = infinite).
template <EffectivePid R>
struct LocalProfile {
  typename R::Elem prime;
  long exponent = 0;
  Valuation val_b;
};

template <EffectivePid R>
SIElement<R> si_make(const R& D, std::int64_t a, std::int64_t b) {
  return {D.from_int(a), D.from_int(b)};
}

template <EffectivePid R>
SIElement<R> si_one(const R& D) {
  return {D.one(), D.zero()};
}

template <EffectivePid R>
SIElement<R> si_zero(const R& D) {
  return {D.zero(), D.zero()};
}

template <EffectivePid R>
SIElement<R> mul(const R& D, const SIElement<R>& x, const SIElement<R>& y) {
  return {D.mul(x.a, y.a), D.add(D.mul(x.a, y.b), D.mul(x.b, y.a))};
}

template <EffectivePid R>
SIElement<R> si_pow(const R& D, const SIElement<R>& x, long k) {
  if (k < 0) throw std::domain_error("si_pow: negative exponent");
  SIElement<R> acc = si_one(D);
  for (long i = 0; i < k; ++i) acc = mul(D, acc, x);
  return acc;
}

template <EffectivePid R>
const typename R::Elem& norm(const SIElement<R>& x) {
  return x.a;
}

template <EffectivePid R>
bool si_equal(const R& D, const SIElement<R>& x, const SIElement<R>& y) {
  return D.equal(x.a, y.a) && D.equal(x.b, y.b);
}

/// Total order on elements: by norm, then by nilpotent component.
template <EffectivePid R>
int si_compare(const R& D, const SIElement<R>& x, const SIElement<R>& y) {
  int c = D.compare(x.a, y.a);
  return c != 0 ? c : D.compare(x.b, y.b);
}

/// Tag precedence: Zero > Unit > ZeroDivisorNonunit > RegularNonunit.
/// An element is a unit exactly when its norm is a unit of D.
template <EffectivePid R>
Classification classify(const R& D, const SIElement<R>& x) {
  if (D.is_zero(x.a))
    return D.is_zero(x.b) ? Classification::Zero
                          : Classification::ZeroDivisorNonunit;
  if (D.is_unit(x.a)) return Classification::Unit;
  return Classification::RegularNonunit;
}

template <EffectivePid R>
bool si_is_unit(const R& D, const SIElement<R>& x) {
  return D.is_unit(x.a);
}

/// Associates differ by a unit factor of R(D): there must be a unit u of D
/// with y.a = x.a * u and y.b congruent to x.b * u modulo x.a. Zero-norm
/// elements are associate exactly when their nilpotent components are.
template <EffectivePid R>
bool is_associate(const R& D, const SIElement<R>& x, const SIElement<R>& y) {
  if (D.is_zero(x.a) != D.is_zero(y.a)) return false;
  if (D.is_zero(x.a)) {
    return D.equal(D.normalize(x.b).canonical, D.normalize(y.b).canonical);
  }
  auto u = D.divide_exact(y.a, x.a);
  if (!u || !D.is_unit(*u)) return false;
  return D.is_zero(D.reduce_mod(D.sub(y.b, D.mul(x.b, *u)), x.a));
}

/// One fixed representative per associate class. For a regular element the
/// norm is replaced by its canonical associate, which forces the unit in
/// the associate relation to 1 and leaves exactly the residue of b mod a;
/// class equality then becomes pair equality.
template <EffectivePid R>
SIElement<R> canonicalize(const R& D, const SIElement<R>& x) {
  if (D.is_zero(x.a)) return {D.zero(), D.normalize(x.b).canonical};
  auto na = D.normalize(x.a);
  auto uinv = unit_inverse(D, na.unit);
  return {na.canonical, D.reduce_mod(D.mul(x.b, uinv), na.canonical)};
}

/// Kind of irreducibility, or disengaged for reducibles, units and zero:
/// zero norm with unit nilpotent part; prime norm; or a proper prime-power
/// norm coprime to the nilpotent part.
template <EffectivePid R>
std::optional<IrreducibleKind> classify_irreducible(const R& D,
                                                    const SIElement<R>& x) {
  switch (classify(D, x)) {
    case Classification::Zero:
    case Classification::Unit:
      return std::nullopt;
    case Classification::ZeroDivisorNonunit:
      return D.is_unit(x.b) ? std::optional(IrreducibleKind::ZeroDivisorPrime)
                            : std::nullopt;
    case Classification::RegularNonunit:
      break;
  }
  auto pf = D.factor(x.a);
  if (pf.distinct_primes() != 1) return std::nullopt;
  if (pf.factors[0].exponent == 1) return IrreducibleKind::PrimeNorm;
  if (coprime(D, x.a, x.b)) return IrreducibleKind::CoprimePrimePower;
  return std::nullopt;
}

/// The prime elements of R(D) are exactly the associates of (0, 1).
template <EffectivePid R>
bool is_prime(const R& D, const SIElement<R>& x) {
  return D.is_zero(x.a) && D.is_unit(x.b);
}

/// Exact division: a quotient q with x = d * q, when one exists.
/// For a regular divisor the quotient is unique. For a zero-divisor
/// divisor (0, c) quotients are not unique; the witness returned is
/// (y/c, 0) for x = (0, y).
template <EffectivePid R>
std::optional<SIElement<R>> divides(const R& D, const SIElement<R>& d,
                                    const SIElement<R>& x) {
  if (D.is_zero(d.a) && D.is_zero(d.b))
    throw std::domain_error("divides: zero divisor element");
  if (D.is_zero(d.a)) {
    if (!D.is_zero(x.a)) return std::nullopt;
    auto q = D.divide_exact(x.b, d.b);
    if (!q) return std::nullopt;
    return SIElement<R>{*q, D.zero()};
  }
  auto qa = D.divide_exact(x.a, d.a);
  if (!qa) return std::nullopt;
  auto qb = D.divide_exact(D.sub(x.b, D.mul(d.b, *qa)), d.a);
  if (!qb) return std::nullopt;
  return SIElement<R>{*qa, *qb};
}

/// Profile (p, n, val_p(b)) when the norm is a nonzero nonunit with a
/// single prime divisor; disengaged otherwise.
template <EffectivePid R>
std::optional<LocalProfile<R>> local_profile(const R& D, const SIElement<R>& x) {
  if (D.is_zero(x.a) || D.is_unit(x.a)) return std::nullopt;
  auto pf = D.factor(x.a);
  if (pf.distinct_primes() != 1) return std::nullopt;
  LocalProfile<R> lp;
  lp.prime = pf.factors[0].prime;
  lp.exponent = pf.factors[0].exponent;
  lp.val_b = D.valuation(lp.prime, x.b);
  return lp;
}

/// Element text form "a ; b" with ring-specific component literals.
template <EffectivePid R>
SIElement<R> si_parse(const R& D, const std::string& text) {
  auto pos = text.find(';');
  if (pos == std::string::npos || text.find(';', pos + 1) != std::string::npos)
    throw ParseError("element literal must be \"a ; b\": " + text);
  return {D.parse(text.substr(0, pos)), D.parse(text.substr(pos + 1))};
}

template <EffectivePid R>
std::string si_to_string(const R& D, const SIElement<R>& x) {
  return D.to_string(x.a) + " ; " + D.to_string(x.b);
}

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Zero: return "Zero";
    case Classification::Unit: return "Unit";
    case Classification::ZeroDivisorNonunit: return "ZeroDivisorNonunit";
    case Classification::RegularNonunit: return "RegularNonunit";
  }
  return "?";
}

inline const char* to_string(IrreducibleKind k) {
  switch (k) {
    case IrreducibleKind::ZeroDivisorPrime: return "ZeroDivisorPrime";
    case IrreducibleKind::PrimeNorm: return "PrimeNorm";
    case IrreducibleKind::CoprimePrimePower: return "CoprimePrimePower";
  }
  return "?";
}

}  // namespace sif
