#pragma once

// Finite fields GF(p^m) with elements encoded as integers 0..q-1 whose base-p
// digits are polynomial coefficients (least significant digit = constant
// term).  Addition is digitwise mod p, so the encoding agrees with
// elementary_abelian(p, m).  Multiplication goes through log tables built
// from the lexicographically least monic primitive polynomial of degree m.

#include <cstdint>
#include <optional>
#include <vector>

#include "schur/error.hpp"

namespace schur {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// (p, m) with q = p^m, or nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(
    std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), m};
}

class GaloisField {
 public:
  using elem = std::uint32_t;

  explicit GaloisField(std::uint32_t q, std::uint32_t size_cap = 1u << 20) {
    auto pp = prime_power(q);
    require(pp.has_value(), "GaloisField: order is not a prime power");
    require(q <= size_cap, "GaloisField: order exceeds cap");
    q_ = q;
    p_ = pp->first;
    m_ = pp->second;
    build_logs();
  }

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  elem add(elem a, elem b) const {
    if (m_ == 1) return (a + b) % p_;
    elem r = 0, w = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r += ((a % p_ + b % p_) % p_) * w;
      a /= p_;
      b /= p_;
      w *= p_;
    }
    return r;
  }

  elem neg(elem a) const {
    if (m_ == 1) return (p_ - a) % p_;
    elem r = 0, w = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r += ((p_ - a % p_) % p_) * w;
      a /= p_;
      w *= p_;
    }
    return r;
  }

  elem sub(elem a, elem b) const { return add(a, neg(b)); }

  elem mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  elem inv(elem a) const {
    require(a != 0, "GaloisField: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  elem pow(elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * e) % (q_ - 1)];
  }

  // The fixed primitive element (the class of x, or the least primitive root
  // when m == 1).
  elem primitive() const noexcept { return exp_[1 % (q_ - 1)]; }
  elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  std::uint32_t log(elem a) const {
    require(a != 0, "GaloisField: log of zero");
    return log_[a];
  }

  bool is_square(elem a) const { return a == 0 || log_[a] % 2 == 0 || p_ == 2; }

 private:
  void build_logs() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    if (m_ == 1) {
      if (q_ == 2) {
        exp_[0] = 1;
        log_[1] = 0;
        modulus_ = {1};
        return;
      }
      for (elem g = 2; g < q_; ++g) {
        if (try_generator_prime(g)) return;
      }
      throw Error("GaloisField: no primitive root found");
    }
    // Monic polynomials x^m + c_{m-1}x^{m-1} + ... + c_0, coefficient vector
    // enumerated lexicographically from (c_0, ..., c_{m-1}) = 0.
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < m_; ++i) count *= p_;
    for (std::uint32_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> c(m_);
      std::uint32_t t = code;
      for (std::uint32_t i = 0; i < m_; ++i) {
        c[i] = t % p_;
        t /= p_;
      }
      if (c[0] == 0) continue;
      if (try_modulus(c)) {
        modulus_ = c;
        return;
      }
    }
    throw Error("GaloisField: no primitive polynomial found");
  }

  bool try_generator_prime(elem g) {
    std::vector<bool> seen(q_, false);
    elem x = 1;
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      if (seen[x]) return false;
      seen[x] = true;
      exp_[k] = x;
      log_[x] = k;
      x = static_cast<elem>((static_cast<std::uint64_t>(x) * g) % q_);
    }
    modulus_ = {(p_ - g) % p_};
    return x == 1;
  }

  // Powers of x modulo the polynomial with low coefficients c; succeeds when
  // x has multiplicative order q - 1.
  bool try_modulus(const std::vector<std::uint32_t>& c) {
    std::vector<std::uint32_t> cur(m_, 0);
    cur[0] = 1;
    std::vector<bool> seen(q_, false);
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      elem code = 0, w = 1;
      for (std::uint32_t i = 0; i < m_; ++i) {
        code += cur[i] * w;
        w *= p_;
      }
      if (seen[code]) return false;
      seen[code] = true;
      exp_[k] = code;
      log_[code] = k;
      // multiply by x
      std::uint32_t top = cur[m_ - 1];
      for (std::uint32_t i = m_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (std::uint32_t i = 0; i < m_; ++i) {
        cur[i] = (cur[i] + (p_ - c[i]) % p_ * top) % p_;
      }
    }
    bool back_to_one = cur[0] == 1;
    for (std::uint32_t i = 1; i < m_; ++i) back_to_one = back_to_one && cur[i] == 0;
    return back_to_one;
  }

  std::uint32_t q_ = 0, p_ = 0, m_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<elem> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace schur
