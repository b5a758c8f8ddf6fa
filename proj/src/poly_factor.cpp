#include <algorithm>
#include <random>

#include "lpa/error.hpp"
#include "lpa/poly.hpp"

namespace lpa {

namespace {

mpz_class random_below(const mpz_class& p, std::mt19937_64& rng) {
  const std::size_t words = mpz_sizeinbase(p.get_mpz_t(), 2) / 64 + 2;
  mpz_class r = 0;
  for (std::size_t i = 0; i < words; ++i) {
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(rng()));
  }
  return r % p;
}

Poly random_poly(const Field& f, int degree_below, std::mt19937_64& rng) {
  std::vector<mpq_class> c(static_cast<std::size_t>(degree_below));
  for (auto& a : c) a = mpq_class(random_below(f.characteristic(), rng));
  return Poly(f, std::move(c));
}

// Distinct-degree factorization of a monic square-free polynomial over F_p.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  const Field& fld = f.field();
  const mpz_class& p = fld.characteristic();
  const Poly x = Poly::x(fld);
  std::vector<std::pair<Poly, int>> out;
  Poly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, p, f);
    Poly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

// Splits a monic square-free product of irreducibles of degree d.
void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const Field& fld = f.field();
  const mpz_class& p = fld.characteristic();
  const Poly one = Poly::one(fld);
  mpz_class e;
  if (p != 2) {
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
  }
  while (true) {
    const Poly a = random_poly(fld, f.degree(), rng);
    if (a.is_constant()) continue;
    Poly b(fld);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      Poly t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      b = powmod(a, e, f) - one;
    }
    Poly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

std::vector<Poly> factor_squarefree_mod_p(const Poly& f, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (auto& [g, d] : distinct_degree(monic(f))) equal_degree(g, d, rng, out);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

mpz_class content_lcm_den(const Poly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

// Primitive integer multiple of f over Q.
Poly primitive(const Poly& f) {
  const mpz_class l = content_lcm_den(f);
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_class n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return f.scaled(mpq_class(l, g));
}

mpz_class max_abs_coeff(const Poly& f) {
  mpz_class m = 0;
  for (const auto& c : f.coeffs()) m = std::max(m, mpz_class(abs(c.get_num())));
  return m;
}

Poly to_field(const Poly& f, const Field& target) { return Poly(target, f.coeffs()); }

// Symmetric lift of an F_P polynomial to Z.
Poly lift_symmetric(const Poly& f) {
  const mpz_class& p = f.field().characteristic();
  const mpz_class half = p / 2;
  std::vector<mpq_class> c;
  for (const auto& a : f.coeffs()) {
    mpz_class n = a.get_num();
    if (n > half) n -= p;
    c.emplace_back(n);
  }
  return Poly(Field::rationals(), std::move(c));
}

// Irreducible factors over Q of a square-free polynomial (Zassenhaus recombination over one large prime).
std::vector<Poly> factor_squarefree_q(const Poly& f, std::mt19937_64& rng) {
  if (f.degree() <= 1) return {monic(f)};
  Poly big = primitive(f);
  const int n = big.degree();
  const mpz_class lc = abs(big.leading().get_num());
  mpz_class bound = 2 * lc * (mpz_class(1) << n) * (n + 1) * max_abs_coeff(big) + 1;

  // Try a few primes above the bound and keep the one giving the fewest modular factors.
  std::vector<Poly> best;
  Field best_field = Field::rationals();
  mpz_class p = bound;
  int good = 0;
  for (int attempt = 0; attempt < 40 && good < 3; ++attempt) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    const Field fp = Field::large_prime(p);
    const Poly fm = to_field(big, fp);
    if (fm.degree() != n || !gcd(fm, fm.derivative()).is_one()) continue;
    ++good;
    auto facs = factor_squarefree_mod_p(fm, rng);
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_field = fp;
    }
    if (best.size() == 1) break;
  }
  if (best.empty()) throw Error("no good prime found for rational factorization");
  if (best.size() == 1) return {monic(f)};

  std::vector<Poly> result;
  std::vector<Poly> remaining = std::move(best);
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      Poly prod = Poly::constant(best_field, big.leading());
      for (auto i : idx) prod = prod * remaining[i];
      const Poly cand = primitive(lift_symmetric(prod));
      auto [q, r] = divmod(big, cand);
      if (r.is_zero()) {
        result.push_back(monic(cand));
        big = primitive(q);
        for (std::size_t k = s; k-- > 0;) remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx[k]));
        found = true;
        break;
      }
      // Next s-combination of remaining indices.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == remaining.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (big.degree() > 0) result.push_back(monic(big));
  return result;
}

}  // namespace

std::vector<FactorPower> factor(const Poly& f, const FactorOptions& opts) {
  if (f.degree() < 1) throw InputError("factor: polynomial must have degree at least 1");
  const bool rational = f.field().is_rational();
  if (rational && f.degree() > static_cast<int>(opts.q_degree_bound)) {
    throw DegreeBoundExceeded("degree " + std::to_string(f.degree()) + " exceeds the rational factorization bound " +
                              std::to_string(opts.q_degree_bound));
  }
  std::mt19937_64 rng(opts.seed);
  std::vector<FactorPower> out;
  for (const auto& [g, e] : squarefree_decomposition(monic(f))) {
    const auto parts = rational ? factor_squarefree_q(g, rng) : factor_squarefree_mod_p(g, rng);
    for (const auto& h : parts) out.push_back({h, e});
  }
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (!(a.poly == b.poly)) return poly_less(a.poly, b.poly);
    return a.exponent < b.exponent;
  });
  return out;
}

bool is_irreducible(const Poly& f, const FactorOptions& opts) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const auto fs = factor(f, opts);
  return fs.size() == 1 && fs.front().exponent == 1;
}

}  // namespace lpa
