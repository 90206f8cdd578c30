#include "rigidity/laurent.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace rigidity {

namespace {

// Dense ordinary polynomial, index = degree, no trailing zeros.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exponents of p shifted by -offset; all must land at >= 0.
Dense to_dense(const LaurentPolynomial& p, Exponent offset) {
  Dense out;
  if (p.is_zero()) return out;
  out.resize(static_cast<std::size_t>(p.max_exponent() - offset) + 1);
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - offset)] = c;
  return out;
}

LaurentPolynomial from_dense(const Dense& p, Exponent offset) {
  LaurentPolynomial::TermMap terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) terms.emplace(static_cast<Exponent>(i) + offset, p[i]);
  }
  return LaurentPolynomial(std::move(terms));
}

// a = q * b + r, deg r < deg b. b must be nonzero.
void divmod(Dense a, const Dense& b, Dense* quotient, Dense* remainder) {
  assert(!b.empty());
  Dense q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational factor = a.back() / lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    q[shift] = std::move(factor);
    a.pop_back();  // leading term cancels exactly
    trim(a);
  }
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  if (remainder) *remainder = std::move(a);
}

void make_monic(Dense& p) {
  if (p.empty()) return;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

Dense dense_gcd(Dense a, Dense b) {
  while (!b.empty()) {
    Dense r;
    divmod(std::move(a), b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPolynomial::LaurentPolynomial(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, Exponent e) {
  LaurentPolynomial p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

Rational LaurentPolynomial::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Exponent LaurentPolynomial::min_exponent() const {
  if (is_zero()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

Exponent LaurentPolynomial::max_exponent() const {
  if (is_zero()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& LaurentPolynomial::lowest_coefficient() const {
  if (is_zero()) throw std::domain_error("lowest_coefficient of zero polynomial");
  return terms_.begin()->second;
}

const Rational& LaurentPolynomial::leading_coefficient() const {
  if (is_zero()) throw std::domain_error("leading_coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

bool LaurentPolynomial::is_constant() const {
  return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent e) const {
  if (e == 0) return *this;
  LaurentPolynomial out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& s) const {
  if (s == 0) return {};
  LaurentPolynomial out = *this;
  for (auto& [k, c] : out.terms_) c *= s;
  return out;
}

Rational LaurentPolynomial::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (min_exponent() < 0) throw std::domain_error("evaluating a negative power at 0");
    return coefficient(0);
  }
  // Horner over the ordinary polynomial g^{-min} p, then rescale.
  const Exponent lo = min_exponent();
  Rational acc = 0;
  Exponent prev = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= pow(x, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  return acc * pow(x, lo);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
  a += b;
  return a;
}

LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
  a -= b;
  return a;
}

LaurentPolynomial operator-(LaurentPolynomial a) { return a.scaled(-1); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPolynomial::TermMap acc;
  Rational prod;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      prod = ca * cb;
      auto [it, inserted] = acc.try_emplace(ea + eb, prod);
      if (!inserted) it->second += prod;
    }
  }
  return LaurentPolynomial(std::move(acc));
}

LaurentPolynomial primitive_part(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  // For c = a/b in lowest terms, c * lcm(b) / gcd(a) gives coprime integers.
  Rational scale = make_rational(den_lcm, num_gcd);
  if (p.lowest_coefficient() < 0) scale = -scale;
  return p.scaled(scale);
}

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  auto clear = [](const LaurentPolynomial& p) -> Dense {
    if (p.is_zero()) return {};
    return to_dense(p, std::min<Exponent>(p.min_exponent(), 0));
  };
  return primitive_part(from_dense(dense_gcd(clear(a), clear(b)), 0));
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a,
                                              const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return LaurentPolynomial{};
  const Exponent ma = a.min_exponent();
  const Exponent mb = b.min_exponent();
  Dense q, r;
  divmod(to_dense(a, ma), to_dense(b, mb), &q, &r);
  if (!r.empty()) return std::nullopt;
  return from_dense(q, ma - mb);
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    const Rational a = out.empty() ? c : Rational(abs(c));
    const std::string g = e == 1 ? "g" : "g^" + std::to_string(e);
    if (e == 0) {
      out += to_string(a);
    } else if (a == 1) {
      out += g;
    } else if (a == -1) {
      out += "-" + g;
    } else {
      out += to_string(a) + "*" + g;
    }
  }
  return out;
}

}  // namespace rigidity
