#ifndef INDPOLY_POLYNOMIAL_HPP
#define INDPOLY_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace indpoly {

using Integer = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored ascending and always trimmed (the zero polynomial has no coefficients).
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> cs) {
    for (long c : cs)
      coeffs_.emplace_back(c);
    trim();
  }
  explicit Polynomial(std::vector<Integer> cs) : coeffs_(std::move(cs)) { trim(); }

  static Polynomial constant(const Integer &c) { return Polynomial(std::vector<Integer>{c}); }
  static Polynomial one() { return constant(1); }
  /// x^k
  static Polynomial monomial(std::size_t k, const Integer &c = 1) {
    std::vector<Integer> cs(k + 1);
    cs[k] = c;
    return Polynomial(std::move(cs));
  }

  const std::vector<Integer> &coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k (zero past the degree).
  Integer operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  Polynomial &operator+=(const Polynomial &o) {
    if (o.coeffs_.size() > coeffs_.size())
      coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) {
    if (o.coeffs_.size() > coeffs_.size())
      coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto &c : a.coeffs_)
      c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  Polynomial scaled(const Integer &c) const {
    Polynomial p = *this;
    for (auto &x : p.coeffs_)
      x *= c;
    p.trim();
    return p;
  }

  /// p(x) * x^k
  Polynomial shifted(std::size_t k) const {
    if (is_zero())
      return {};
    std::vector<Integer> cs(k);
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(cs));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = one(), base = *this;
    while (e) {
      if (e & 1U)
        result *= base;
      e >>= 1U;
      if (e)
        base *= base;
    }
    return result;
  }

  /// Horner evaluation, exact.
  Integer eval(const Integer &t) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * t + *it;
    return acc;
  }

  /// "1 + 5x + 5x^2 + x^3"
  std::string pretty() const {
    if (is_zero())
      return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Integer &c = coeffs_[k];
      if (c == 0)
        continue;
      Integer mag = abs(c);
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (k == 0 || mag != 1)
        out += mag.get_str();
      if (k >= 1)
        out += "x";
      if (k >= 2)
        out += "^" + std::to_string(k);
    }
    return out;
  }

  /// "[1, 5, 5, 1]"
  std::string coefficient_list() const {
    std::string out = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k)
        out += ", ";
      out += coeffs_[k].get_str();
    }
    return out + "]";
  }

  friend std::ostream &operator<<(std::ostream &os, const Polynomial &p) {
    return os << p.pretty();
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline Polynomial add(const Polynomial &p, const Polynomial &q) { return p + q; }
inline Polynomial sub(const Polynomial &p, const Polynomial &q) { return p - q; }
inline Polynomial mul(const Polynomial &p, const Polynomial &q) { return p * q; }
inline Polynomial scale(const Polynomial &p, const Integer &c) { return p.scaled(c); }
inline Polynomial shift_mul_x(const Polynomial &p, std::size_t k) { return p.shifted(k); }
inline Integer eval_int(const Polynomial &p, const Integer &t) { return p.eval(t); }

// ---------------------------------------------------------------------------
// Closed forms

/// F_0 = F_1 = 1, F_n = F_{n-1} + x F_{n-2}.
inline Polynomial fibonacci_poly(int n) {
  if (n < 0)
    throw std::invalid_argument("fibonacci_poly: negative index");
  Polynomial prev = Polynomial::one(), cur = Polynomial::one();
  for (int k = 2; k <= n; ++k) {
    Polynomial next = cur + prev.shifted(1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// I(P_n; x) = F_{n+1}(x)
inline Polynomial path_poly(int n) {
  if (n < 1)
    throw std::invalid_argument("path_poly: n must be >= 1");
  return fibonacci_poly(n + 1);
}

/// I(C_n; x) = F_{n-1}(x) + 2x F_{n-2}(x)
inline Polynomial cycle_poly(int n) {
  if (n < 3)
    throw std::invalid_argument("cycle_poly: n must be >= 3");
  return fibonacci_poly(n - 1) + fibonacci_poly(n - 2).shifted(1).scaled(2);
}

namespace detail {
/// F_k(-1) has period 6: 1, 1, 0, -1, -1, 0.
inline int fibonacci_at_minus_one(std::int64_t k) {
  static constexpr int kPeriod[6] = {1, 1, 0, -1, -1, 0};
  return kPeriod[k % 6];
}
}  // namespace detail

inline int value_at_minus_one_path(std::int64_t n) {
  if (n < 1)
    throw std::invalid_argument("value_at_minus_one_path: n must be >= 1");
  return detail::fibonacci_at_minus_one(n + 1);
}

inline int value_at_minus_one_cycle(std::int64_t n) {
  if (n < 3)
    throw std::invalid_argument("value_at_minus_one_cycle: n must be >= 3");
  return detail::fibonacci_at_minus_one(n - 1) - 2 * detail::fibonacci_at_minus_one(n - 2);
}

/// I(K_{a,...,a}; x) for p parts of size a: p (1+x)^a - (p-1).
inline Polynomial equal_multipartite_poly(int parts, int part_size) {
  if (parts < 1 || part_size < 1)
    throw std::invalid_argument("equal_multipartite_poly: parts and part size must be >= 1");
  return Polynomial{1, 1}.pow(static_cast<unsigned>(part_size)).scaled(parts) -
         Polynomial::constant(parts - 1);
}

}  // namespace indpoly

#endif
