#include "okada/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace okada {

namespace {

int exponent_at(const std::vector<int>& v, int k) {
  return (k >= 1 && k <= static_cast<int>(v.size())) ? v[k - 1] : 0;
}

void trim_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void add_into(std::vector<int>& into, const std::vector<int>& from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

std::string variable_power(char name, int k, int e) {
  std::string s(1, name);
  s += std::to_string(k);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

Monomial Monomial::x(int k, int exponent) {
  if (k < 1 || exponent < 0) throw std::invalid_argument("bad x variable");
  Monomial m;
  m.x_.assign(k, 0);
  m.x_[k - 1] = exponent;
  m.trim();
  return m;
}

Monomial Monomial::y(int k, int exponent) {
  if (k < 1 || exponent < 0) throw std::invalid_argument("bad y variable");
  Monomial m;
  m.y_.assign(k, 0);
  m.y_[k - 1] = exponent;
  m.trim();
  return m;
}

int Monomial::x_exponent(int k) const noexcept { return exponent_at(x_, k); }
int Monomial::y_exponent(int k) const noexcept { return exponent_at(y_, k); }

int Monomial::degree() const noexcept {
  return std::accumulate(x_.begin(), x_.end(), 0) + std::accumulate(y_.begin(), y_.end(), 0);
}

bool Monomial::divisible_by(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < other.x_.size(); ++i)
    if (other.x_[i] > exponent_at(x_, static_cast<int>(i) + 1)) return false;
  for (std::size_t i = 0; i < other.y_.size(); ++i)
    if (other.y_[i] > exponent_at(y_, static_cast<int>(i) + 1)) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  add_into(x_, other.x_);
  add_into(y_, other.y_);
  return *this;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!divisible_by(other)) throw std::invalid_argument("monomial not divisible");
  Monomial q = *this;
  for (std::size_t i = 0; i < other.x_.size(); ++i) q.x_[i] -= other.x_[i];
  for (std::size_t i = 0; i < other.y_.size(); ++i) q.y_[i] -= other.y_[i];
  q.trim();
  return q;
}

void Monomial::trim() {
  trim_zeros(x_);
  trim_zeros(y_);
}

std::string Monomial::to_string() const {
  std::string out;
  auto append = [&](char name, const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += variable_power(name, static_cast<int>(i) + 1, v[i]);
    }
  };
  append('x', x_);
  append('y', y_);
  return out.empty() ? "1" : out;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const auto nx = std::max(a.x_exponents().size(), b.x_exponents().size());
  for (std::size_t i = 1; i <= nx; ++i) {
    const int ea = a.x_exponent(static_cast<int>(i)), eb = b.x_exponent(static_cast<int>(i));
    if (ea != eb) return ea < eb;
  }
  const auto ny = std::max(a.y_exponents().size(), b.y_exponents().size());
  for (std::size_t i = 1; i <= ny; ++i) {
    const int ea = a.y_exponent(static_cast<int>(i)), eb = b.y_exponent(static_cast<int>(i));
    if (ea != eb) return ea < eb;
  }
  return false;
}

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, mpz_class(constant));
}

Polynomial::Polynomial(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const mpz_class& coefficient) {
  if (coefficient != 0) terms_.emplace(m, coefficient);
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  auto it = other.terms_.begin();
  for (auto& [m, c] : terms_) {
    if (!(it->first == m) || it->second != c) return false;
    ++it;
  }
  return true;
}

Polynomial Polynomial::substitute(const ParameterValues<mpz_class>& values) const {
  Polynomial out;
  for (auto& [m, c] : terms_) {
    mpz_class coeff = c;
    std::vector<int> xs = m.x_exponents(), ys = m.y_exponents();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (auto it = values.x.find(static_cast<int>(i) + 1); it != values.x.end() && xs[i] > 0) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), static_cast<unsigned long>(xs[i]));
        coeff *= p;
        xs[i] = 0;
      }
    }
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (auto it = values.y.find(static_cast<int>(i) + 1); it != values.y.end() && ys[i] > 0) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), static_cast<unsigned long>(ys[i]));
        coeff *= p;
        ys[i] = 0;
      }
    }
    Monomial rest;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (xs[i]) rest *= Monomial::x(static_cast<int>(i) + 1, xs[i]);
    for (std::size_t i = 0; i < ys.size(); ++i)
      if (ys[i]) rest *= Monomial::y(static_cast<int>(i) + 1, ys[i]);
    out.add_term(rest, coeff);
  }
  return out;
}

mpq_class Polynomial::evaluate(const ParameterValues<mpq_class>& values) const {
  mpq_class total = 0;
  auto power = [](const mpq_class& base, int e) {
    mpq_class r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  for (auto& [m, c] : terms_) {
    mpq_class term = c;
    for (std::size_t i = 0; i < m.x_exponents().size(); ++i) {
      if (m.x_exponents()[i] == 0) continue;
      auto it = values.x.find(static_cast<int>(i) + 1);
      if (it == values.x.end()) throw std::invalid_argument("no value for x" + std::to_string(i + 1));
      term *= power(it->second, m.x_exponents()[i]);
    }
    for (std::size_t i = 0; i < m.y_exponents().size(); ++i) {
      if (m.y_exponents()[i] == 0) continue;
      auto it = values.y.find(static_cast<int>(i) + 1);
      if (it == values.y.end()) throw std::invalid_argument("no value for y" + std::to_string(i + 1));
      term *= power(it->second, m.y_exponents()[i]);
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::at_y_one() const {
  Polynomial out;
  for (auto& [m, c] : terms_) {
    Monomial xs_only;
    for (std::size_t i = 0; i < m.x_exponents().size(); ++i)
      if (m.x_exponents()[i]) xs_only *= Monomial::x(static_cast<int>(i) + 1, m.x_exponents()[i]);
    out.add_term(xs_only, c);
  }
  return out;
}

std::optional<Polynomial> Polynomial::exact_quotient(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial quotient, remainder = *this;
  const auto& [lead_m, lead_c] = *divisor.terms_.begin();
  while (!remainder.is_zero()) {
    const auto& [m, c] = *remainder.terms_.begin();
    if (!m.divisible_by(lead_m) || !mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    Polynomial step(m / lead_m, mpz_class(c / lead_c));
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

}  // namespace okada
