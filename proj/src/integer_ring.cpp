#include "sifactor/integer_ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace sif {

namespace {

// Trial division stops here; composites with no factor below the limit are
// outside the supported desk scale.
const mpz_class kTrialLimit("10000000");           // 1e7
const mpz_class kPrimeCutoff("100000000000000");   // (1e7)^2

// Residue enumeration caps |D/mD|.
constexpr std::uint64_t kResidueBudget = std::uint64_t(1) << 22;

}  // namespace

IntegerRing::Elem IntegerRing::from_int(std::int64_t v) const {
  mpz_class z;
  // mpz_class has no int64 constructor on LLP64-safe paths; go through string
  // only when the value does not fit a long.
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
    z = static_cast<long>(v);
  else
    z = mpz_class(std::to_string(v));
  return z;
}

IntegerRing::Elem IntegerRing::pow(const Elem& x, long k) const {
  if (k < 0) throw std::domain_error("pow: negative exponent");
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Normalized<IntegerRing::Elem> IntegerRing::normalize(const Elem& x) const {
  if (sgn(x) < 0) return {-x, Elem(-1)};
  return {x, Elem(1)};
}

std::optional<IntegerRing::Elem> IntegerRing::divide_exact(const Elem& x,
                                                           const Elem& y) const {
  if (sgn(y) == 0) throw std::domain_error("divide_exact: division by zero");
  if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) return std::nullopt;
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}

BezoutCertificate<IntegerRing::Elem> IntegerRing::gcd_ext(const Elem& x,
                                                          const Elem& y) const {
  if (sgn(x) == 0 && sgn(y) == 0)
    throw std::domain_error("gcd_ext: both arguments are zero");
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(),
             y.get_mpz_t());
  // mpz_gcdext already returns g > 0, the canonical associate.
  return {g, s, t};
}

PrimeFactorization<IntegerRing::Elem> IntegerRing::factor(const Elem& x) const {
  if (sgn(x) == 0) throw std::domain_error("factor: zero has no factorization");
  PrimeFactorization<Elem> out;
  out.unit = sgn(x) < 0 ? Elem(-1) : Elem(1);
  mpz_class n = abs(x);
  for (mpz_class d = 2; d <= kTrialLimit && d * d <= n; ++d) {
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) continue;
    long e = 0;
    do {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      ++e;
    } while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()));
    out.factors.push_back({d, e});
  }
  if (n > 1) {
    // No factor below the trial limit: prime if small enough to certify.
    if (n > kPrimeCutoff)
      throw BudgetError("factor: cofactor " + n.get_str() +
                        " exceeds the trial-division budget");
    out.factors.push_back({n, 1});
  }
  return out;
}

bool IntegerRing::is_prime_elem(const Elem& x) const {
  mpz_class n = abs(x);
  if (n < 2) return false;
  if (n > kPrimeCutoff)
    throw BudgetError("is_prime_elem: " + n.get_str() +
                      " exceeds the trial-division budget");
  for (mpz_class d = 2; d * d <= n; ++d)
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  return true;
}

Valuation IntegerRing::valuation(const Elem& p, const Elem& x) const {
  if (!is_prime_elem(p)) throw std::domain_error("valuation: p is not prime");
  if (sgn(x) == 0) return std::nullopt;
  mpz_class n = x;
  long k = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

std::vector<IntegerRing::Elem> IntegerRing::residues(const Elem& m) const {
  auto card = quotient_size(m);
  if (!card || *card > kResidueBudget)
    throw BudgetError("residues: quotient too large to enumerate");
  std::vector<Elem> out;
  out.reserve(*card);
  for (std::uint64_t i = 0; i < *card; ++i) out.push_back(from_int(i));
  return out;
}

IntegerRing::Elem IntegerRing::reduce_mod(const Elem& x, const Elem& m) const {
  if (sgn(m) == 0) throw std::domain_error("reduce_mod: zero modulus");
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());  // nonnegative
  return r;
}

std::optional<std::uint64_t> IntegerRing::quotient_size(const Elem& m) const {
  if (sgn(m) == 0) throw std::domain_error("quotient_size: zero modulus");
  mpz_class a = abs(m);
  if (!a.fits_ulong_p()) return std::nullopt;
  return static_cast<std::uint64_t>(a.get_ui());
}

IntegerRing::Elem IntegerRing::nth_prime(long i) const {
  if (i < 0) throw std::domain_error("nth_prime: negative index");
  mpz_class p = 2;
  for (long seen = 0;; ++p) {
    if (is_prime_elem(p)) {
      if (seen == i) return p;
      ++seen;
    }
  }
}

IntegerRing::Elem IntegerRing::parse(const std::string& text) const {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw ParseError("empty integer literal");
  std::string body = text.substr(begin, end - begin + 1);
  std::size_t i = (body[0] == '+' || body[0] == '-') ? 1 : 0;
  if (i == body.size()) throw ParseError("bad integer literal: " + text);
  for (std::size_t j = i; j < body.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(body[j])))
      throw ParseError("bad integer literal: " + text);
  return mpz_class(body, 10);
}

}  // namespace sif
