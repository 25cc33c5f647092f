#pragma once

// Factorization into irreducibles in R(D): a constructive witness, and
// exhaustive enumeration of all factorizations up to order and associates.
//
// Everything works on canonical forms. Once the target of a prime-power
// component is canonicalized to (p^n, b) with p the canonical prime, a
// multiset of canonical factors {(p^l, r)} is a factorization exactly when
// sum p^(n-l) * r == b (mod p^n), with every residue belonging to a part
// l >= 2 coprime to p. Zero-divisor targets (0, b) take one factor (0, 1)
// and prime-power factors multiplying to the canonical associate of b, with
// unconstrained residues on parts of size 1.

#include <algorithm>
#include <functional>

#include "sifactor/selfideal.hpp"

namespace sif {

template <EffectivePid R>
struct Factorization {
  SIElement<R> target;
  std::vector<SIElement<R>> factors;  // canonical irreducibles, sorted

  long length() const { return static_cast<long>(factors.size()); }
};

template <EffectivePid R>
SIElement<R> si_product(const R& D, const std::vector<SIElement<R>>& factors) {
  SIElement<R> acc = si_one(D);
  for (const auto& f : factors) acc = mul(D, acc, f);
  return acc;
}

/// Split a regular element along a coprime factorization of its norm:
/// returns (g, h) with x = g*h, norm(g) = c, norm(h) = d, built from a
/// Bezout certificate for (c, d). Unique up to associates.
template <EffectivePid R>
std::pair<SIElement<R>, SIElement<R>> coprime_split(const R& D,
                                                    const SIElement<R>& x,
                                                    const typename R::Elem& c,
                                                    const typename R::Elem& d) {
  if (D.is_zero(x.a)) throw std::domain_error("coprime_split: zero norm");
  if (!D.equal(x.a, D.mul(c, d)))
    throw std::domain_error("coprime_split: norm is not c*d");
  if (!coprime(D, c, d)) throw std::domain_error("coprime_split: c, d not coprime");
  auto bez = D.gcd_ext(c, d);  // 1 = s*c + t*d
  // b = c*(s*b) + (t*b)*d
  typename R::Elem e = D.mul(bez.t, x.b);
  typename R::Elem f = D.mul(bez.s, x.b);
  return {SIElement<R>{c, e}, SIElement<R>{d, f}};
}

/// Exact decomposition of a regular nonunit into pairwise coprime factors
/// of prime-power norm, one per prime of the norm, primes ascending. The
/// last factor absorbs the unit of the norm, so the product is exactly x.
template <EffectivePid R>
std::vector<SIElement<R>> prime_power_decompose(const R& D, const SIElement<R>& x) {
  if (classify(D, x) != Classification::RegularNonunit)
    throw std::domain_error("prime_power_decompose: element must be a regular nonunit");
  auto pf = D.factor(x.a);
  std::vector<SIElement<R>> out;
  SIElement<R> rest = x;
  for (std::size_t i = 0; i + 1 < pf.factors.size(); ++i) {
    typename R::Elem c = D.pow(pf.factors[i].prime, pf.factors[i].exponent);
    typename R::Elem d = *D.divide_exact(rest.a, c);
    auto [g, h] = coprime_split(D, rest, c, d);
    out.push_back(g);
    rest = h;
  }
  out.push_back(rest);
  return out;
}

/// One factorization of a nonzero nonunit into irreducibles.
///
/// A zero-divisor (0, b) with b = u * prod(p_i^e_i) factors as (0, 1) times
/// e_i copies of each (p_i, 0). A regular element splits off the gcd of its
/// components as prime factors (p_i, 0) and then divides the coprime rest
/// along its prime-power norms; each of those pieces has nilpotent part
/// coprime to its prime, hence is irreducible.
template <EffectivePid R>
Factorization<R> factor_irreducibles(const R& D, const SIElement<R>& x) {
  Factorization<R> out;
  out.target = x;
  switch (classify(D, x)) {
    case Classification::Zero:
      throw std::domain_error("factor_irreducibles: zero element");
    case Classification::Unit:
      throw std::domain_error("factor_irreducibles: unit element");
    case Classification::ZeroDivisorNonunit: {
      out.factors.push_back({D.zero(), D.one()});
      auto pf = D.factor(x.b);
      for (const auto& f : pf.factors)
        for (long i = 0; i < f.exponent; ++i)
          out.factors.push_back({f.prime, D.zero()});
      break;
    }
    case Classification::RegularNonunit: {
      auto bez = D.gcd_ext(x.a, x.b);
      const auto& c = bez.g;  // canonical gcd; c = x.a when b = 0
      typename R::Elem a1 = *D.divide_exact(x.a, c);
      typename R::Elem b1 = *D.divide_exact(x.b, c);
      if (!D.is_unit(c)) {
        auto pf = D.factor(c);
        for (const auto& f : pf.factors)
          for (long i = 0; i < f.exponent; ++i)
            out.factors.push_back({f.prime, D.zero()});
      }
      if (!D.is_unit(a1)) {
        SIElement<R> rest{a1, b1};
        for (const auto& piece : prime_power_decompose(D, rest))
          out.factors.push_back(piece);
      }
      break;
    }
  }
  for (auto& f : out.factors) f = canonicalize(D, f);
  std::sort(out.factors.begin(), out.factors.end(),
            [&](const auto& u, const auto& v) { return si_compare(D, u, v) < 0; });
  return out;
}

namespace detail {

/// Partitions of n into descending parts, visited in descending-part
/// lexicographic order ([n] first, [1,...,1] last).
template <typename F>
void for_each_partition(long n, F&& fn) {
  std::vector<long> parts;
  auto rec = [&](auto&& self, long remaining, long max_part) -> void {
    if (remaining == 0) {
      fn(const_cast<const std::vector<long>&>(parts));
      return;
    }
    for (long l = std::min(remaining, max_part); l >= 1; --l) {
      parts.push_back(l);
      self(self, remaining - l, l);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
}

/// Enumerates the multisets {(l, r)} of part sizes and residues that make a
/// factorization of one prime-power component. With `target_b` engaged the
/// component is regular with canonical target (p^n, target_b) and the last
/// residue of each partition is solved from the congruence instead of
/// searched; disengaged means a zero-divisor block p^n of the nilpotent
/// part, where residues are free.
///
/// sink receives (l, r) lists with l descending and residues ascending
/// within equal l; every factorization class is visited exactly once.
template <EffectivePid R, typename Sink>
void prime_power_multisets(const R& D, const typename R::Elem& p, long n,
                           const std::optional<typename R::Elem>& target_b,
                           Sink&& sink) {
  using E = typename R::Elem;
  std::vector<E> ppow(n + 1);
  ppow[0] = D.one();
  for (long i = 1; i <= n; ++i) ppow[i] = D.mul(ppow[i - 1], p);

  // residue candidates per part size; parts >= 2 must be coprime to p
  std::vector<std::vector<E>> cand(n + 1);
  std::vector<bool> ready(n + 1, false);
  auto candidates = [&](long l) -> const std::vector<E>& {
    if (!ready[l]) {
      for (auto& r : D.residues(ppow[l]))
        if (l == 1 || !D.divide_exact(r, p).has_value()) cand[l].push_back(r);
      ready[l] = true;
    }
    return cand[l];
  };

  std::vector<std::pair<long, E>> chosen;
  for_each_partition(n, [&](const std::vector<long>& parts) {
    std::vector<std::pair<long, long>> groups;  // (part size, multiplicity)
    for (long l : parts) {
      if (!groups.empty() && groups.back().first == l)
        ++groups.back().second;
      else
        groups.emplace_back(l, 1);
    }
    // Walk groups, keeping the running value of sum p^(n-l) * r mod p^n.
    auto rec = [&](auto&& self, std::size_t gi, long j, std::optional<E> prev,
                   const E& acc) -> void {
      const auto [l, m] = groups[gi];
      const bool solve_here =
          target_b && gi + 1 == groups.size() && j == m - 1;
      if (solve_here) {
        E need = D.reduce_mod(D.sub(*target_b, acc), ppow[n]);
        auto r = D.divide_exact(need, ppow[n - l]);
        if (!r) return;
        if (prev && D.compare(*prev, *r) > 0) return;
        if (l >= 2 && D.divide_exact(*r, p).has_value()) return;
        chosen.emplace_back(l, *r);
        sink(const_cast<const std::vector<std::pair<long, E>>&>(chosen));
        chosen.pop_back();
        return;
      }
      for (const E& r : candidates(l)) {
        if (prev && D.compare(*prev, r) > 0) continue;
        E acc2 = D.reduce_mod(D.add(acc, D.mul(ppow[n - l], r)), ppow[n]);
        chosen.emplace_back(l, r);
        if (j == m - 1) {
          if (gi + 1 == groups.size())
            sink(const_cast<const std::vector<std::pair<long, E>>&>(chosen));
          else
            self(self, gi + 1, 0, std::nullopt, acc2);
        } else {
          self(self, gi, j + 1, r, acc2);
        }
        chosen.pop_back();
      }
    };
    rec(rec, 0, 0, std::nullopt, D.zero());
  });
}

/// Independent blocks of a nonzero nonunit: one per prime, each either a
/// regular component with its canonical target or a free zero-divisor
/// block. Factorizations of x are exactly the products of one choice per
/// block (plus the (0,1) factor for zero-divisors).
template <EffectivePid R>
struct ComponentSplit {
  struct Block {
    typename R::Elem prime;
    long exponent;
    std::optional<typename R::Elem> target_b;
  };
  std::vector<Block> blocks;
  bool zero_divisor = false;
};

template <EffectivePid R>
ComponentSplit<R> component_split(const R& D, const SIElement<R>& x) {
  ComponentSplit<R> out;
  switch (classify(D, x)) {
    case Classification::Zero:
      throw std::domain_error("enumerate_factorizations: zero element");
    case Classification::Unit:
      throw std::domain_error("enumerate_factorizations: unit element");
    case Classification::ZeroDivisorNonunit: {
      out.zero_divisor = true;
      auto pf = D.factor(D.normalize(x.b).canonical);
      for (const auto& f : pf.factors)
        out.blocks.push_back({f.prime, f.exponent, std::nullopt});
      break;
    }
    case Classification::RegularNonunit: {
      SIElement<R> xc = canonicalize(D, x);
      auto pf = D.factor(xc.a);
      for (const auto& piece : prime_power_decompose(D, xc)) {
        SIElement<R> pc = canonicalize(D, piece);
        auto ppf = D.factor(pc.a);
        out.blocks.push_back({ppf.factors[0].prime, ppf.factors[0].exponent, pc.b});
      }
      (void)pf;
      break;
    }
  }
  return out;
}

}  // namespace detail

/// All factorizations of x into irreducibles, each a canonical sorted
/// multiset, the whole list sorted; duplicate-free, complete up to order
/// and associates. Requires a nonzero nonunit over a finite-quotient ring.
template <EffectivePid R>
std::vector<Factorization<R>> enumerate_factorizations(const R& D,
                                                       const SIElement<R>& x) {
  using E = typename R::Elem;
  auto split = detail::component_split(D, x);

  std::vector<std::vector<std::vector<SIElement<R>>>> lists;  // per block
  for (const auto& blk : split.blocks) {
    std::vector<std::vector<SIElement<R>>> list;
    detail::prime_power_multisets(
        D, blk.prime, blk.exponent, blk.target_b,
        [&](const std::vector<std::pair<long, E>>& parts) {
          std::vector<SIElement<R>> fs;
          fs.reserve(parts.size());
          for (const auto& [l, r] : parts)
            fs.push_back({D.pow(blk.prime, l), r});
          list.push_back(std::move(fs));
        });
    lists.push_back(std::move(list));
  }

  std::vector<Factorization<R>> out;
  std::vector<SIElement<R>> current;
  if (split.zero_divisor) current.push_back({D.zero(), D.one()});
  auto combine = [&](auto&& self, std::size_t bi) -> void {
    if (bi == lists.size()) {
      Factorization<R> fz;
      fz.target = x;
      fz.factors = current;
      std::sort(fz.factors.begin(), fz.factors.end(),
                [&](const auto& u, const auto& v) { return si_compare(D, u, v) < 0; });
      out.push_back(std::move(fz));
      return;
    }
    for (const auto& choice : lists[bi]) {
      std::size_t mark = current.size();
      current.insert(current.end(), choice.begin(), choice.end());
      self(self, bi + 1);
      current.resize(mark);
    }
  };
  combine(combine, 0);

  std::sort(out.begin(), out.end(), [&](const auto& u, const auto& v) {
    return std::lexicographical_compare(
        u.factors.begin(), u.factors.end(), v.factors.begin(), v.factors.end(),
        [&](const auto& s, const auto& t) { return si_compare(D, s, t) < 0; });
  });
  return out;
}

/// Number of factorization classes, without materializing them: the blocks
/// are independent, so the count is the product of streamed per-block
/// counts.
template <EffectivePid R>
std::uint64_t count_factorizations(const R& D, const SIElement<R>& x) {
  using E = typename R::Elem;
  auto split = detail::component_split(D, x);
  std::uint64_t total = 1;
  for (const auto& blk : split.blocks) {
    std::uint64_t n = 0;
    detail::prime_power_multisets(
        D, blk.prime, blk.exponent, blk.target_b,
        [&](const std::vector<std::pair<long, E>>&) { ++n; });
    if (n != 0 && total > std::numeric_limits<std::uint64_t>::max() / n)
      throw BudgetError("count_factorizations: count overflows 64 bits");
    total *= n;
  }
  return total;
}

/// The factor multiset with one designated factor replaced by an associate
/// so that the product is exactly the target: the zero-norm factor for
/// zero-divisor targets, the first factor otherwise.
template <EffectivePid R>
std::vector<SIElement<R>> exact_factor_adjustment(const R& D,
                                                  const Factorization<R>& fz) {
  using E = typename R::Elem;
  if (fz.factors.empty())
    throw std::domain_error("exact_factor_adjustment: empty factorization");
  SIElement<R> prod = si_product(D, fz.factors);
  const SIElement<R>& t = fz.target;
  std::vector<SIElement<R>> out = fz.factors;
  std::size_t designated = 0;
  E u, v;
  if (D.is_zero(t.a)) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& f) { return D.is_zero(f.a); });
    if (it == out.end() || D.is_zero(prod.b))
      throw std::domain_error("exact_factor_adjustment: product not associate to target");
    designated = static_cast<std::size_t>(it - out.begin());
    auto q = D.divide_exact(t.b, prod.b);
    if (!q || !D.is_unit(*q))
      throw std::domain_error("exact_factor_adjustment: product not associate to target");
    u = *q;
    v = D.zero();
  } else {
    auto q = D.divide_exact(t.a, prod.a);
    if (!q || !D.is_unit(*q))
      throw std::domain_error("exact_factor_adjustment: product not associate to target");
    u = *q;
    auto w = D.divide_exact(D.sub(t.b, D.mul(u, prod.b)), prod.a);
    if (!w)
      throw std::domain_error("exact_factor_adjustment: product not associate to target");
    v = *w;
  }
  out[designated] = mul(D, SIElement<R>{u, v}, out[designated]);
  return out;
}

}  // namespace sif
