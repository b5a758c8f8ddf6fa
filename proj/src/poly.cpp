#include "lpa/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpa/error.hpp"

namespace lpa {

Poly::Poly(Field f, std::vector<mpq_class> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = field_.reduce(c);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Field& f, const mpq_class& c, std::size_t k) {
  std::vector<mpq_class> v(k + 1, mpq_class(0));
  v[k] = c;
  return Poly(f, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = field_.add(coeff(i), o.coeff(i));
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = field_.sub(coeff(i), o.coeff(i));
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(field_);
  for (const auto& c : c_) r.c_.push_back(field_.neg(c));
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(field_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, mpq_class(0));
  if (field_.is_rational()) {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
  } else {
    // Accumulate integers and reduce once per coefficient.
    const mpz_class& p = field_.characteristic();
    std::vector<mpz_class> acc(r.c_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += c_[i].get_num() * o.c_[j].get_num();
    }
    for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = mpq_class(mpz_class(acc[k] % p));
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const mpq_class& c) const {
  Poly r(field_);
  const auto k = field_.reduce(c);
  if (k == 0) return r;
  for (const auto& a : c_) r.c_.push_back(field_.mul(a, k));
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly r = one(field_), b = *this;
  for (; n != 0; n >>= 1) {
    if (n & 1U) r = r * b;
    if (n > 1) b = b * b;
  }
  return r;
}

Poly Poly::derivative() const {
  Poly r(field_);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(field_.mul(c_[i], field_.from_int(static_cast<long>(i))));
  r.trim();
  return r;
}

Poly Poly::deflate(std::size_t k) const {
  Poly r(field_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i % k == 0) {
      r.c_.push_back(c_[i]);
    } else if (c_[i] != 0) {
      throw std::invalid_argument("deflate: exponent not a multiple of k");
    }
  }
  r.trim();
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const mpq_class& c = c_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(f), a};
  std::vector<mpq_class> quo(static_cast<std::size_t>(a.degree() - db + 1), mpq_class(0));
  const mpq_class inv_lead = f.inv(b.leading());
  for (int k = a.degree(); k >= db; --k) {
    const mpq_class c = f.mul(rem[static_cast<std::size_t>(k)], inv_lead);
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(k - db + j)];
      r = f.sub(r, f.mul(c, b.coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool divides(const Poly& d, const Poly& f) {
  if (d.is_zero()) return f.is_zero();
  return (f % d).is_zero();
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod) {
  Poly r = Poly::one(base.field()) % mod;
  Poly b = base % mod;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % mod;
  }
  return r;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    const int c = cmp(a.coeffs()[k], b.coeffs()[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

Poly monic(const Poly& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.field().inv(f.leading()));
}

Poly normalize(const Poly& f) {
  if (f.is_zero()) throw InputError("the zero polynomial has no normal form");
  std::size_t k = 0;
  while (f.coeffs()[k] == 0) ++k;
  std::vector<mpq_class> shifted(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end());
  return monic(Poly(f.field(), std::move(shifted)));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return monic((a * b) / gcd(a, b));
}

bool conjugate(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return normalize(f) == normalize(g);
}

std::vector<FactorPower> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw InputError("square-free decomposition of zero");
  std::vector<FactorPower> out;
  const Poly one = Poly::one(f.field());
  Poly c = gcd(f, f.derivative());
  Poly w = monic(f) / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (!z.is_one()) out.push_back({monic(z), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_constant()) {
    // c is a p-th power: c(x) = h(x^p) = h(x)^p because a^p = a in F_p.
    const unsigned long p = f.field().characteristic().get_ui();
    for (auto& [g, j] : squarefree_decomposition(c.deflate(p))) out.push_back({g, j * static_cast<unsigned>(p)});
  }
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return poly_less(a.poly, b.poly);
  });
  return out;
}

Poly squarefree_part(const Poly& f) {
  Poly r = Poly::one(f.field());
  for (const auto& fp : squarefree_decomposition(f)) r = r * fp.poly;
  return r;
}

bool is_squarefree(const Poly& f) {
  const auto d = squarefree_decomposition(f);
  return std::all_of(d.begin(), d.end(), [](const FactorPower& fp) { return fp.exponent == 1; });
}

}  // namespace lpa
