#include "sifactor/poly_ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <utility>

namespace sif {

namespace {

constexpr std::uint64_t kResidueBudget = std::uint64_t(1) << 22;

void trim(std::vector<std::uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

bool is_word_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PolyModRing::PolyModRing(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t(1) << 31) || !is_word_prime(p))
    throw std::domain_error("PolyModRing: characteristic must be a word-size prime");
}

PolyModRing::Elem PolyModRing::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  if (r == 0) return {};
  return {static_cast<std::uint32_t>(r)};
}

PolyModRing::Elem PolyModRing::add(const Elem& x, const Elem& y) const {
  Elem r(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < x.size() ? x[i] : 0u) + std::uint64_t(i < y.size() ? y[i] : 0u);
    r[i] = static_cast<std::uint32_t>(s % p_);
  }
  trim(r);
  return r;
}

PolyModRing::Elem PolyModRing::sub(const Elem& x, const Elem& y) const {
  Elem r(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < x.size() ? x[i] : 0u) + std::uint64_t(p_) -
                      std::uint64_t(i < y.size() ? y[i] : 0u);
    r[i] = static_cast<std::uint32_t>(s % p_);
  }
  trim(r);
  return r;
}

PolyModRing::Elem PolyModRing::neg(const Elem& x) const { return sub({}, x); }

PolyModRing::Elem PolyModRing::mul(const Elem& x, const Elem& y) const {
  if (x.empty() || y.empty()) return {};
  Elem r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      std::uint64_t s = r[i + j] + std::uint64_t(x[i]) * y[j] % p_;
      r[i + j] = static_cast<std::uint32_t>(s % p_);
    }
  }
  trim(r);
  return r;
}

PolyModRing::Elem PolyModRing::pow(const Elem& x, long k) const {
  if (k < 0) throw std::domain_error("pow: negative exponent");
  Elem acc = one();
  Elem base = x;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return acc;
}

int PolyModRing::compare(const Elem& x, const Elem& y) const {
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  return 0;
}

std::uint32_t PolyModRing::inv_mod_p(std::uint32_t a) const {
  // extended Euclid on word-size values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("inv_mod_p: not invertible");
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

std::pair<PolyModRing::Elem, PolyModRing::Elem> PolyModRing::divrem(
    const Elem& num, const Elem& den) const {
  if (den.empty()) throw std::domain_error("divrem: division by zero");
  if (num.size() < den.size()) return {{}, num};
  Elem rem = num;
  Elem quo(num.size() - den.size() + 1, 0);
  const std::uint32_t lc_inv = inv_mod_p(den.back());
  for (std::size_t shift = quo.size(); shift-- > 0;) {
    std::size_t top = shift + den.size() - 1;
    std::uint32_t coeff =
        static_cast<std::uint32_t>(std::uint64_t(rem[top]) * lc_inv % p_);
    quo[shift] = coeff;
    if (coeff == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) {
      std::uint64_t borrow = std::uint64_t(coeff) * den[j] % p_;
      std::uint64_t s = rem[shift + j] + std::uint64_t(p_) - borrow;
      rem[shift + j] = static_cast<std::uint32_t>(s % p_);
    }
  }
  trim(rem);
  trim(quo);
  return {quo, rem};
}

Normalized<PolyModRing::Elem> PolyModRing::normalize(const Elem& x) const {
  if (x.empty()) return {{}, one()};
  std::uint32_t lc = x.back();
  if (lc == 1) return {x, one()};
  std::uint32_t inv = inv_mod_p(lc);
  Elem canon(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    canon[i] = static_cast<std::uint32_t>(std::uint64_t(x[i]) * inv % p_);
  return {canon, Elem{lc}};
}

std::optional<PolyModRing::Elem> PolyModRing::divide_exact(const Elem& x,
                                                           const Elem& y) const {
  if (y.empty()) throw std::domain_error("divide_exact: division by zero");
  auto [q, r] = divrem(x, y);
  if (!r.empty()) return std::nullopt;
  return q;
}

BezoutCertificate<PolyModRing::Elem> PolyModRing::gcd_ext(const Elem& x,
                                                          const Elem& y) const {
  if (x.empty() && y.empty())
    throw std::domain_error("gcd_ext: both arguments are zero");
  // invariant: r0 = s0*x + t0*y, r1 = s1*x + t1*y
  Elem r0 = x, r1 = y;
  Elem s0 = one(), s1 = zero();
  Elem t0 = zero(), t1 = one();
  while (!r1.empty()) {
    auto [q, rem] = divrem(r0, r1);
    r0 = std::exchange(r1, rem);
    Elem s2 = sub(s0, mul(q, s1));
    s0 = std::exchange(s1, s2);
    Elem t2 = sub(t0, mul(q, t1));
    t0 = std::exchange(t1, t2);
  }
  auto norm = normalize(r0);
  Elem inv = {inv_mod_p(norm.unit[0])};
  return {norm.canonical, mul(s0, inv), mul(t0, inv)};
}

PrimeFactorization<PolyModRing::Elem> PolyModRing::factor(const Elem& x) const {
  if (x.empty()) throw std::domain_error("factor: zero has no factorization");
  PrimeFactorization<Elem> out;
  auto norm = normalize(x);
  out.unit = norm.unit;
  Elem f = norm.canonical;
  // Trial division by monic polynomials in increasing value order; smaller
  // factors are removed first, so any divisor encountered is irreducible.
  for (long d = 1; 2 * d <= degree(f); ++d) {
    std::uint64_t block = 1;
    for (long i = 0; i < d; ++i) {
      block *= p_;
      if (block > kResidueBudget)
        throw BudgetError("factor: polynomial degree exceeds the budget");
    }
    for (std::uint64_t v = block; v < 2 * block; ++v) {  // monic of degree d
      Elem cand = from_index(v);
      long e = 0;
      for (;;) {
        auto [q, r] = divrem(f, cand);
        if (!r.empty()) break;
        f = q;
        ++e;
      }
      if (e > 0) out.factors.push_back({cand, e});
      if (2 * d > degree(f)) break;
    }
  }
  if (degree(f) >= 1) out.factors.push_back({f, 1});
  std::sort(out.factors.begin(), out.factors.end(),
            [&](const auto& a, const auto& b) { return compare(a.prime, b.prime) < 0; });
  return out;
}

bool PolyModRing::is_prime_elem(const Elem& x) const {
  if (degree(x) < 1) return false;
  Elem f = normalize(x).canonical;
  for (long d = 1; 2 * d <= degree(f); ++d) {
    std::uint64_t block = 1;
    for (long i = 0; i < d; ++i) {
      block *= p_;
      if (block > kResidueBudget)
        throw BudgetError("is_prime_elem: degree exceeds the budget");
    }
    for (std::uint64_t v = block; v < 2 * block; ++v)
      if (divrem(f, from_index(v)).second.empty()) return false;
  }
  return true;
}

Valuation PolyModRing::valuation(const Elem& p, const Elem& x) const {
  if (!is_prime_elem(p)) throw std::domain_error("valuation: p is not prime");
  if (x.empty()) return std::nullopt;
  Elem f = x;
  long k = 0;
  for (;;) {
    auto [q, r] = divrem(f, p);
    if (!r.empty()) return k;
    f = q;
    ++k;
  }
}

std::vector<PolyModRing::Elem> PolyModRing::residues(const Elem& m) const {
  auto card = quotient_size(m);
  if (!card || *card > kResidueBudget)
    throw BudgetError("residues: quotient too large to enumerate");
  std::vector<Elem> out;
  out.reserve(*card);
  for (std::uint64_t v = 0; v < *card; ++v) out.push_back(from_index(v));
  return out;
}

PolyModRing::Elem PolyModRing::reduce_mod(const Elem& x, const Elem& m) const {
  if (m.empty()) throw std::domain_error("reduce_mod: zero modulus");
  return divrem(x, m).second;
}

std::optional<std::uint64_t> PolyModRing::quotient_size(const Elem& m) const {
  if (m.empty()) throw std::domain_error("quotient_size: zero modulus");
  std::uint64_t card = 1;
  for (long i = 0; i < degree(m); ++i) {
    if (card > std::numeric_limits<std::uint64_t>::max() / p_) return std::nullopt;
    card *= p_;
  }
  return card;
}

PolyModRing::Elem PolyModRing::nth_prime(long i) const {
  if (i < 0) throw std::domain_error("nth_prime: negative index");
  long seen = 0;
  for (long d = 1;; ++d) {
    std::uint64_t block = 1;
    for (long j = 0; j < d; ++j) {
      block *= p_;
      if (block > kResidueBudget)
        throw BudgetError("nth_prime: index exceeds the budget");
    }
    for (std::uint64_t v = block; v < 2 * block; ++v) {
      Elem cand = from_index(v);
      if (is_prime_elem(cand)) {
        if (seen == i) return cand;
        ++seen;
      }
    }
  }
}

PolyModRing::Elem PolyModRing::from_index(std::uint64_t v) const {
  Elem c;
  while (v > 0) {
    c.push_back(static_cast<std::uint32_t>(v % p_));
    v /= p_;
  }
  return c;
}

PolyModRing::Elem PolyModRing::parse(const std::string& text) const {
  std::istringstream in(text);
  std::string tok;
  Elem c;
  bool any = false;
  while (in >> tok) {
    any = true;
    std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (i == tok.size()) throw ParseError("bad coefficient: " + tok);
    for (std::size_t j = i; j < tok.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(tok[j])))
        throw ParseError("bad coefficient: " + tok);
    long long v = 0;
    try {
      v = std::stoll(tok);
    } catch (const std::exception&) {
      throw ParseError("coefficient out of range: " + tok);
    }
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    c.push_back(static_cast<std::uint32_t>(r));
  }
  if (!any) throw ParseError("empty polynomial literal");
  trim(c);
  return c;
}

std::string PolyModRing::to_string(const Elem& x) const {
  if (x.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ' ';
    out << x[i];
  }
  return out.str();
}

}  // namespace sif
