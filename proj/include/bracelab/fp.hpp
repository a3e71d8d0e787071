#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bracelab/errors.hpp"

namespace bracelab {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in the prime field F_p. Scalars are canonical representatives
/// in [0, p); no negative values are ever stored or returned.
class PrimeField {
 public:
  explicit PrimeField(int p) : p_(p) {
    if (!is_prime(p))
      throw std::invalid_argument("modulus " + std::to_string(p) +
                                  " is not prime");
  }

  int p() const { return p_; }

  int canon(long long x) const {
    long long r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }

  int add(int a, int b) const {
    int s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  int sub(int a, int b) const {
    int s = a - b;
    return s < 0 ? s + p_ : s;
  }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int mul(int a, int b) const {
    return static_cast<int>(static_cast<long long>(a) * b % p_);
  }

  int pow(int a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    long long base = a % p_, acc = 1;
    while (e > 0) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<int>(acc);
  }

  int inv(int a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

 private:
  int p_;
};

/// Polynomial over F_p, coefficients ascending by degree. The leading
/// coefficient is nonzero unless the polynomial is zero.
struct FpPoly {
  int p;
  std::vector<int> coeffs;

  static FpPoly make(int p, std::vector<int> cs) {
    PrimeField field(p);
    for (int& c : cs) c = field.canon(c);
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
    return FpPoly{p, std::move(cs)};
  }

  bool is_zero() const { return coeffs.empty(); }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  int eval(int x) const {
    PrimeField field(p);
    int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = field.add(field.mul(acc, x), *it);
    return acc;
  }
};

/// Exact root set of f in F_p by evaluating at every field element.
/// The zero polynomial is rejected (every element would be a root).
inline std::vector<int> poly_roots(const FpPoly& f) {
  if (f.is_zero())
    throw std::invalid_argument("root set of the zero polynomial is all of F_p");
  std::vector<int> roots;
  for (int x = 0; x < f.p; ++x)
    if (f.eval(x) == 0) roots.push_back(x);
  return roots;
}

}  // namespace bracelab
