#include "bredonk/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "bredonk/errors.hpp"

namespace bredonk {

namespace {

using Poly = std::vector<mpz_class>;

Poly divide_exact(Poly num, const Poly& den) {
  // Both monic; degree(num) >= degree(den).
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const mpz_class c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return quot;
}

Poly compute_cyclotomic(unsigned e) {
  Poly p(e + 1, 0);
  p[0] = -1;
  p[e] = 1;
  for (unsigned d = 1; d < e; ++d) {
    if (e % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned e) {
  if (e == 0) throw DimensionMismatch("cyclotomic conductor must be positive");
  static std::mutex mutex;
  static std::map<unsigned, Poly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  Poly p = compute_cyclotomic(e);
  std::lock_guard lock(mutex);
  return cache.emplace(e, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(unsigned conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(conductor) {
  if (conductor == 0) throw DimensionMismatch("cyclotomic conductor must be positive");
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs_[k % conductor] += coeffs[k];
  reduce();
}

Cyclotomic Cyclotomic::root_of_unity(unsigned conductor, unsigned k) {
  std::vector<mpq_class> c(conductor);
  c[k % conductor] = 1;
  return Cyclotomic(conductor, std::move(c));
}

void Cyclotomic::reduce() {
  const Poly phi = cyclotomic_polynomial(conductor_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = conductor_; k-- > deg;) {
    const mpq_class c = coeffs_[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) coeffs_[k - deg + i] -= c * phi[i];
  }
}

Cyclotomic Cyclotomic::lift_to(unsigned target) const {
  if (target == conductor_) return *this;
  if (target % conductor_ != 0) {
    throw DimensionMismatch("cannot lift conductor " + std::to_string(conductor_) + " to " +
                            std::to_string(target));
  }
  const unsigned step = target / conductor_;
  std::vector<mpq_class> c(target);
  for (unsigned k = 0; k < conductor_; ++k) c[k * step] = coeffs_[k];
  return Cyclotomic(target, std::move(c));
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<mpq_class> c(conductor_);
  for (unsigned k = 0; k < conductor_; ++k) c[(conductor_ - k) % conductor_] = coeffs_[k];
  return Cyclotomic(conductor_, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational_integer() const {
  return is_rational() && coeffs_[0].get_den() == 1;
}

mpq_class Cyclotomic::to_rational() const {
  if (!is_rational()) throw NonRationalProduct(to_string() + " is not rational");
  return coeffs_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const unsigned l = std::lcm(conductor_, o.conductor_);
  if (l != conductor_) *this = lift_to(l);
  const Cyclotomic rhs = o.lift_to(l);
  for (unsigned k = 0; k < l; ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const unsigned l = std::lcm(conductor_, o.conductor_);
  const Cyclotomic a = lift_to(l);
  const Cyclotomic b = o.lift_to(l);
  std::vector<mpq_class> c(l);
  for (unsigned i = 0; i < l; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < l; ++j) {
      if (b.coeffs_[j] == 0) continue;
      c[(i + j) % l] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = Cyclotomic(l, std::move(c));
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

int Cyclotomic::compare(const Cyclotomic& o) const {
  const unsigned l = std::lcm(conductor_, o.conductor_);
  const Cyclotomic a = lift_to(l);
  const Cyclotomic b = o.lift_to(l);
  for (unsigned k = 0; k < l; ++k) {
    const int c = cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 0; k < conductor_; ++k) {
    mpq_class c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 'z' << conductor_;
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace bredonk
