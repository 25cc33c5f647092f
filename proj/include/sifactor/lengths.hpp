#pragma once

// Sets of lengths and the invariants derived from them: closed-form
// evaluation per prime-power component, sumset composition across coprime
// components, a brute-force oracle over the enumerated factorizations,
// distance and catenary degree, unions of sets of lengths, and the
// classification of sets of lengths into the closed family realized over a
// PID with infinitely many primes, together with witness construction.

#include <numeric>

#include "sifactor/factor.hpp"

namespace sif {

/// Finite sorted set of non-negative integers.
class LengthSet {
 public:
  LengthSet() = default;
  explicit LengthSet(std::vector<long> vals) : v_(std::move(vals)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }
  static LengthSet interval(long lo, long hi) {
    LengthSet s;
    for (long v = lo; v <= hi; ++v) s.v_.push_back(v);
    return s;
  }

  void insert(long v) {
    auto it = std::lower_bound(v_.begin(), v_.end(), v);
    if (it == v_.end() || *it != v) v_.insert(it, v);
  }
  bool contains(long v) const {
    return std::binary_search(v_.begin(), v_.end(), v);
  }
  bool empty() const { return v_.empty(); }
  std::size_t size() const { return v_.size(); }
  long min() const { return v_.front(); }
  long max() const { return v_.back(); }
  const std::vector<long>& values() const { return v_; }

  friend bool operator==(const LengthSet&, const LengthSet&) = default;
  friend auto operator<=>(const LengthSet&, const LengthSet&) = default;

 private:
  std::vector<long> v_;  // sorted, unique
};

inline LengthSet sumset(const LengthSet& a, const LengthSet& b) {
  std::vector<long> out;
  out.reserve(a.size() * b.size());
  for (long x : a.values())
    for (long y : b.values()) out.push_back(x + y);
  return LengthSet(std::move(out));
}

/// Successive gaps of a sorted set.
inline LengthSet gaps_of(const LengthSet& s) {
  std::vector<long> out;
  const auto& v = s.values();
  for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i] - v[i - 1]);
  return LengthSet(std::move(out));
}

/// Set of lengths of one prime-power component with norm exponent n and
/// nilpotent valuation k (disengaged = infinite, which behaves like
/// k >= n-1 in every branch):
///   {1}                      if k == 0 or n == 1,
///   [3, n-2] u {n} (u {2} iff n even)            if k >= n-1,
///   [3, k+1]       (u {2} iff n even or 2k < n)  if 1 <= k <= n-2.
inline LengthSet length_block(long n, Valuation k) {
  if (n == 1 || (k && *k == 0)) return LengthSet({1});
  const bool high = !k || *k >= n - 1;
  LengthSet out = LengthSet::interval(3, high ? n - 2 : *k + 1);
  if (n % 2 == 0 || (k && 2 * *k < n)) out.insert(2);
  if (high) out.insert(n);
  return out;
}

/// Closed-form set of lengths. Units give {0}; a zero-divisor (0, b) with b
/// having n distinct primes and total exponent E gives [1+n, 1+E]; a
/// regular element is the sumset of its prime-power component blocks.
template <EffectivePid R>
LengthSet length_set(const R& D, const SIElement<R>& x) {
  switch (classify(D, x)) {
    case Classification::Zero:
      throw std::domain_error("length_set: zero element");
    case Classification::Unit:
      return LengthSet({0});
    case Classification::ZeroDivisorNonunit: {
      auto pf = D.factor(x.b);
      return LengthSet::interval(1 + pf.distinct_primes(), 1 + pf.total_exponent());
    }
    case Classification::RegularNonunit:
      break;
  }
  auto pf = D.factor(x.a);
  LengthSet acc({0});
  for (const auto& f : pf.factors)
    acc = sumset(acc, length_block(f.exponent, D.valuation(f.prime, x.b)));
  return acc;
}

/// Brute-force counterpart of length_set: the lengths that actually occur
/// among the enumerated factorizations.
template <EffectivePid R>
LengthSet length_set_oracle(const R& D, const SIElement<R>& x) {
  std::vector<long> lens;
  for (const auto& fz : enumerate_factorizations(D, x)) lens.push_back(fz.length());
  return LengthSet(std::move(lens));
}

template <EffectivePid R>
LengthSet delta_set(const R& D, const SIElement<R>& x) {
  auto c = classify(D, x);
  if (c == Classification::Zero || c == Classification::Unit)
    throw std::domain_error("delta_set: element must be a nonzero nonunit");
  return gaps_of(length_set(D, x));
}

/// Exact nonnegative rational, reduced, positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

inline std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num)
                    : std::to_string(r.num) + "/" + std::to_string(r.den);
}

/// max L / min L.
template <EffectivePid R>
Rational elasticity(const R& D, const SIElement<R>& x) {
  auto c = classify(D, x);
  if (c == Classification::Zero || c == Classification::Unit)
    throw std::domain_error("elasticity: element must be a nonzero nonunit");
  LengthSet L = length_set(D, x);
  return make_rational(L.max(), L.min());
}

/// Distance between two factorizations of the same element: remove the
/// common part (multiset intersection of canonical factors, counted with
/// multiplicity) and take the larger remaining length.
template <EffectivePid R>
long distance(const R& D, const Factorization<R>& z1, const Factorization<R>& z2) {
  if (!si_equal(D, canonicalize(D, z1.target), canonicalize(D, z2.target)))
    throw std::domain_error("distance: factorizations of different elements");
  std::size_t i = 0, j = 0;
  long common = 0;
  while (i < z1.factors.size() && j < z2.factors.size()) {
    int c = si_compare(D, z1.factors[i], z2.factors[j]);
    if (c == 0) {
      ++common, ++i, ++j;
    } else if (c < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::max(z1.length() - common, z2.length() - common);
}

/// Smallest N such that any two factorizations of x are linked by a chain
/// with successive distances at most N; 0 when there is at most one
/// factorization. Computed as the bottleneck of a minimum spanning tree
/// over the complete distance graph.
template <EffectivePid R>
long catenary_degree(const R& D, const SIElement<R>& x) {
  auto fs = enumerate_factorizations(D, x);
  const std::size_t n = fs.size();
  if (n <= 1) return 0;

  struct Edge {
    long w;
    std::uint32_t u, v;
  };
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({distance(D, fs[i], fs[j]), static_cast<std::uint32_t>(i),
                       static_cast<std::uint32_t>(j)});
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.w < b.w; });

  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::size_t components = n;
  long bottleneck = 0;
  for (const auto& e : edges) {
    auto ru = find(e.u), rv = find(e.v);
    if (ru == rv) continue;
    parent[ru] = rv;
    bottleneck = std::max(bottleneck, e.w);
    if (--components == 1) break;
  }
  return bottleneck;
}

/// Union of the sets of lengths containing k, over all elements whose norm
/// is a prime power with exponent at most `bound`, closed under sumsets of
/// coprime products, clipped to [0, bound]. A budgeted lower approximation
/// of the true (infinite) union; requires k >= 2.
inline LengthSet union_lengths(long k, long bound) {
  if (k < 2) throw std::domain_error("union_lengths: k must be at least 2");
  if (bound < k || bound > 24) throw BudgetError("union_lengths: bound out of budget");

  auto clip = [&](const LengthSet& s) {
    std::vector<long> out;
    for (long v : s.values())
      if (v <= bound) out.push_back(v);
    return LengthSet(std::move(out));
  };

  std::vector<LengthSet> pool;
  auto add = [&](const LengthSet& s) {
    if (s.empty()) return false;
    if (std::find(pool.begin(), pool.end(), s) != pool.end()) return false;
    pool.push_back(s);
    return true;
  };
  for (long n = 1; n <= bound; ++n)
    for (long kk = 0; kk <= n - 1; ++kk) add(clip(length_block(n, kk)));

  // sumset closure; every set is a subset of [1, bound], so this terminates
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t frozen = pool.size();
    for (std::size_t i = 0; i < frozen; ++i)
      for (std::size_t j = i; j < frozen; ++j)
        if (add(clip(sumset(pool[i], pool[j])))) grew = true;
    if (pool.size() > 20000) throw BudgetError("union_lengths: pool exceeds budget");
  }

  LengthSet out;
  for (const auto& s : pool)
    if (s.contains(k))
      for (long v : s.values()) out.insert(v);
  return out;
}

enum class FamilyClause {
  Singleton0,
  Singleton1,
  Interval,
  IntervalPlusTwo,
  ArithmeticProgression,
};

/// One clause of the closed family of sets of lengths:
///   {0}; {1}; [m, n] with 2 <= m <= n; [m, n] u {n+2} with 2 <= m <= n and
///   m == n (mod 2); m + 2*[0, n] with n >= 1 and m >= 2n.
///
/// The parity constraint on the plus-two clause is forced: a sum of
/// prime-power blocks keeps the top gap of size two only when every other
/// summand is a singleton, which pins m to the parity of n.
struct FamilyDescriptor {
  FamilyClause clause;
  long m = 0;
  long n = 0;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

inline const char* to_string(FamilyClause c) {
  switch (c) {
    case FamilyClause::Singleton0: return "singleton0";
    case FamilyClause::Singleton1: return "singleton1";
    case FamilyClause::Interval: return "interval";
    case FamilyClause::IntervalPlusTwo: return "interval_plus_two";
    case FamilyClause::ArithmeticProgression: return "arithmetic_progression";
  }
  return "?";
}

/// The set described by a descriptor.
inline LengthSet family_set(const FamilyDescriptor& f) {
  switch (f.clause) {
    case FamilyClause::Singleton0:
      return LengthSet({0});
    case FamilyClause::Singleton1:
      return LengthSet({1});
    case FamilyClause::Interval:
      return LengthSet::interval(f.m, f.n);
    case FamilyClause::IntervalPlusTwo: {
      LengthSet s = LengthSet::interval(f.m, f.n);
      s.insert(f.n + 2);
      return s;
    }
    case FamilyClause::ArithmeticProgression: {
      std::vector<long> v;
      for (long i = 0; i <= f.n; ++i) v.push_back(f.m + 2 * i);
      return LengthSet(std::move(v));
    }
  }
  throw std::domain_error("family_set: bad clause");
}

inline bool family_valid(const FamilyDescriptor& f) {
  switch (f.clause) {
    case FamilyClause::Singleton0:
    case FamilyClause::Singleton1:
      return true;
    case FamilyClause::Interval:
      return 2 <= f.m && f.m <= f.n;
    case FamilyClause::IntervalPlusTwo:
      return 2 <= f.m && f.m <= f.n && (f.n - f.m) % 2 == 0;
    case FamilyClause::ArithmeticProgression:
      return f.n >= 1 && f.m >= 2 * f.n;
  }
  return false;
}

/// Matches a set of lengths against the family, trying the clauses in
/// order; disengaged when the set lies outside all of them.
inline std::optional<FamilyDescriptor> family_classify(const LengthSet& L) {
  if (L.empty()) return std::nullopt;
  const auto& v = L.values();
  if (L == LengthSet({0})) return FamilyDescriptor{FamilyClause::Singleton0};
  if (L == LengthSet({1})) return FamilyDescriptor{FamilyClause::Singleton1};
  if (v.front() < 2) return std::nullopt;

  auto contiguous_prefix = [&](std::size_t count) {
    for (std::size_t i = 1; i < count; ++i)
      if (v[i] != v[i - 1] + 1) return false;
    return true;
  };
  if (contiguous_prefix(v.size()))
    return FamilyDescriptor{FamilyClause::Interval, v.front(), v.back()};
  if (v.size() >= 2 && contiguous_prefix(v.size() - 1) &&
      v.back() == v[v.size() - 2] + 2) {
    FamilyDescriptor f{FamilyClause::IntervalPlusTwo, v.front(), v[v.size() - 2]};
    if (family_valid(f)) return f;
  }
  if (v.size() >= 2) {
    bool ap = true;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] != v[i - 1] + 2) ap = false;
    if (ap) {
      FamilyDescriptor f{FamilyClause::ArithmeticProgression, v.front(),
                         static_cast<long>(v.size()) - 1};
      if (family_valid(f)) return f;
    }
  }
  return std::nullopt;
}

/// Builds an element whose set of lengths is exactly the described set,
/// out of prime-power blocks with pairwise distinct primes (so the blocks
/// compose by sumset). Throws for invalid descriptors or when the prime
/// budget runs out.
template <EffectivePid R>
SIElement<R> witness_for(const R& D, const FamilyDescriptor& f) {
  if (!family_valid(f)) throw std::domain_error("witness_for: invalid descriptor");
  if (f.m > 64 || f.n > 64) throw BudgetError("witness_for: descriptor out of budget");

  long next_prime = 0;
  auto fresh_prime = [&] { return D.nth_prime(next_prime++); };

  // (p^n', p^k) realizing [2, t] for t >= 2: even n' with k = t-1 <= n'-2
  auto interval_block = [&](long t) {
    auto p = fresh_prime();
    long np = (t % 2 == 1) ? t + 1 : t + 2;
    return SIElement<R>{D.pow(p, np), D.pow(p, t - 1)};
  };
  // (p^n', 0) realizing [2, t] u {t+2} for even t, [3, t] u {t+2} for odd t
  auto plus_two_block = [&](long t) {
    auto p = fresh_prime();
    return SIElement<R>{D.pow(p, t + 2), D.zero()};
  };

  SIElement<R> w = si_one(D);
  long shift = 0;  // number of extra irreducible factors to append
  switch (f.clause) {
    case FamilyClause::Singleton0:
      return w;
    case FamilyClause::Singleton1:
      shift = 1;
      break;
    case FamilyClause::Interval:
      if (f.m == f.n) {
        shift = f.m;  // {m} as a product of m irreducibles of distinct primes
      } else {
        w = mul(D, w, interval_block(f.n - f.m + 2));
        shift = f.m - 2;
      }
      break;
    case FamilyClause::IntervalPlusTwo:
      if (f.m % 2 == 0) {
        w = mul(D, w, plus_two_block(f.n - f.m + 2));  // even block
        shift = f.m - 2;
      } else {
        w = mul(D, w, plus_two_block(f.n - f.m + 3));  // odd block
        shift = f.m - 3;
      }
      break;
    case FamilyClause::ArithmeticProgression:
      for (long i = 0; i < f.n; ++i) w = mul(D, w, plus_two_block(2));
      shift = f.m - 2 * f.n;
      break;
  }
  for (long i = 0; i < shift; ++i)
    w = mul(D, w, SIElement<R>{fresh_prime(), D.zero()});

  if (!(length_set(D, w) == family_set(f)))
    throw std::domain_error("witness_for: descriptor not realizable over this ring");
  return w;
}

}  // namespace sif
