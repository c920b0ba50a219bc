#include "stacky/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "stacky/error.hpp"

namespace stacky::cyclo {

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorCode::Internal, "zero denominator");
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact quotient of integer polynomials; `den` is monic.
std::vector<long long> divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return quot;
}

std::vector<long long> compute_cyclotomic(std::size_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
  return poly;
}

// Reduce a dense polynomial in place modulo Phi_e and truncate.
std::vector<Rational> reduce(std::vector<Rational> a, std::size_t e) {
  const auto& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  if (a.size() < deg) a.resize(deg);
  for (std::size_t k = a.size(); k-- > deg;) {
    if (sgn(a[k]) == 0) continue;
    const Rational c = a[k];
    for (std::size_t i = 0; i < deg; ++i)
      if (phi[i] != 0) a[k - deg + i] -= c * static_cast<long>(phi[i]);
    a[k] = 0;
  }
  a.resize(deg);
  return a;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<long long>> cache;
  if (n == 0) fail(ErrorCode::Internal, "cyclotomic polynomial of index 0");
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(n);  // recursion takes the lock itself
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
Cyclotomic::Cyclotomic(long long value) : conductor_(1), coeffs_{Rational(static_cast<long>(value))} {}
Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} {}

Cyclotomic Cyclotomic::zeta(std::size_t conductor, long long power) {
  const auto e = static_cast<long long>(conductor);
  const auto k = static_cast<std::size_t>(((power % e) + e) % e);
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = 1;
  return from_powers(conductor, std::move(c));
}

Cyclotomic Cyclotomic::from_powers(std::size_t conductor, std::vector<Rational> coeffs) {
  if (conductor == 0) fail(ErrorCode::Internal, "conductor 0");
  return Cyclotomic(conductor, reduce(std::move(coeffs), conductor));
}

Cyclotomic Cyclotomic::promote(std::size_t target) const {
  if (target == conductor_) return *this;
  if (target % conductor_ != 0) fail(ErrorCode::Internal, "promotion to a non-multiple conductor");
  const std::size_t step = target / conductor_;
  std::vector<Rational> c(step * (coeffs_.size() - 1) + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
  return from_powers(target, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return false;
  return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const std::size_t l = std::lcm(conductor_, rhs.conductor_);
  if (l != conductor_) *this = promote(l);
  if (l == rhs.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  } else {
    const Cyclotomic r = rhs.promote(l);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += r.coeffs_[k];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  const std::size_t l = std::lcm(conductor_, rhs.conductor_);
  const Cyclotomic a = promote(l);
  const Cyclotomic b = rhs.promote(l);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (sgn(b.coeffs_[j]) != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  *this = from_powers(l, std::move(prod));
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const std::size_t l = std::lcm(a.conductor_, b.conductor_);
  return a.promote(l).coeffs_ == b.promote(l).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "E(" << conductor_ << ')';
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

Cyclotomic conj(const Cyclotomic& x) {
  const std::size_t e = x.conductor();
  if (e <= 2) return x;
  std::vector<Rational> c(e, Rational(0));
  const auto& src = x.coefficients();
  for (std::size_t k = 0; k < src.size(); ++k) c[(e - k) % e] += src[k];
  return Cyclotomic::from_powers(e, std::move(c));
}

int compare_at(const Cyclotomic& a, const Cyclotomic& b, std::size_t conductor) {
  const auto pa = a.promote(conductor);
  const auto pb = b.promote(conductor);
  for (std::size_t k = 0; k < pa.coefficients().size(); ++k) {
    const int c = cmp(pa.coefficients()[k], pb.coefficients()[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace stacky::cyclo
