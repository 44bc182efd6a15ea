// Copyright 2026 The Kakeya-Fq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite field arithmetic over F_q, q = p^k <= 2^16.
//
// Elements are plain integers in [0, q). For k = 1 the integer is the
// residue mod p; for k > 1 it is the polynomial c_0 + c_1 x + ... whose
// base-p digits are the coefficients, reduced modulo the field's monic
// irreducible modulus. The modulus is the lexicographically least monic
// irreducible of degree k (compared from the leading coefficient down),
// so a given q always produces the same representation.
//
// Multiplication and inversion in extension fields go through log/antilog
// tables built once per field. A Field is immutable after construction and
// can be shared across threads.

#ifndef KAKEYA_GF_HPP_
#define KAKEYA_GF_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kakeya {

using Rep = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

// Dense polynomials over F_p, coefficients low to high. Only used while a
// Field is being built; afterwards everything runs on the tables.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f divided by g (g nonzero) over F_p.
inline PrimePoly poly_mod(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor =
        static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

inline PrimePoly digits_of(std::uint32_t rep, std::uint32_t p, unsigned k) {
  PrimePoly f(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    f[i] = rep % p;
    rep /= p;
  }
  return f;
}

inline std::uint32_t rep_of(const PrimePoly& f, std::uint32_t p) {
  std::uint32_t rep = 0;
  for (std::size_t i = f.size(); i-- > 0;) rep = rep * p + f[i];
  return rep;
}

// Irreducible iff no monic divisor of degree 1..k/2 divides it.
inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    std::uint32_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      PrimePoly g = digits_of(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class Field {
 public:
  // Builds F_q. Throws std::invalid_argument unless q is a prime power
  // with 2 <= q <= 2^16.
  static FieldPtr make(std::uint32_t q) {
    return std::shared_ptr<const Field>(new Field(q));
  }

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t q() const { return q_; }
  bool is_prime_field() const { return k_ == 1; }
  bool characteristic_two() const { return p_ == 2; }

  // Monic modulus, coefficients low to high (length k + 1). Empty for k = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // Generator of the multiplicative group used for the log tables.
  Rep primitive_element() const { return exp_[1]; }

  bool contains(Rep a) const { return a < q_; }

  // Image of an integer in the prime subfield.
  Rep from_int(std::int64_t v) const {
    const std::int64_t r = ((v % static_cast<std::int64_t>(p_)) + p_) % p_;
    return static_cast<Rep>(r);
  }

  Rep add(Rep a, Rep b) const {
    if (k_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    Rep out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  Rep neg(Rep a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    return neg_[a];
  }

  Rep sub(Rep a, Rep b) const { return add(a, neg(b)); }

  Rep mul(Rep a, Rep b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) {
      return static_cast<Rep>(static_cast<std::uint64_t>(a) * b % p_);
    }
    return exp_[log_[a] + log_[b]];
  }

  Rep inv(Rep a) const {
    if (a == 0) throw std::domain_error("gf: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Rep div(Rep a, Rep b) const {
    if (b == 0) throw std::domain_error("gf: division by zero");
    return mul(a, inv(b));
  }

  Rep pow(Rep a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = q_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
  }

  Rep square(Rep a) const { return mul(a, a); }

  // Euler's criterion: a^((q-1)/2) is 0 or 1 exactly for squares.
  bool is_square(Rep a) const {
    if (p_ == 2) {
      throw std::domain_error("gf: is_square needs odd characteristic");
    }
    const Rep r = pow(a, (q_ - 1) / 2);
    return r == 0 || r == 1;
  }

  // The unique square root in characteristic 2, a^(q/2).
  Rep sqrt_char2(Rep a) const {
    if (p_ != 2) {
      throw std::domain_error("gf: sqrt_char2 needs characteristic 2");
    }
    return pow(a, q_ / 2);
  }

  // {gamma^2 + beta*gamma : gamma in F_q}, sorted. Characteristic 2 only.
  std::vector<Rep> artin_schreier_image(Rep beta) const {
    if (p_ != 2) {
      throw std::domain_error(
          "gf: artin_schreier_image needs characteristic 2");
    }
    std::vector<char> hit(q_, 0);
    for (Rep g = 0; g < q_; ++g) hit[add(square(g), mul(beta, g))] = 1;
    std::vector<Rep> out;
    for (Rep a = 0; a < q_; ++a) {
      if (hit[a]) out.push_back(a);
    }
    return out;
  }

  std::string describe() const {
    std::string s = "F_" + std::to_string(q_);
    if (k_ > 1) {
      s += " = F_" + std::to_string(p_) + "[x]/(";
      bool first = true;
      for (std::size_t i = modulus_.size(); i-- > 0;) {
        if (modulus_[i] == 0) continue;
        if (!first) s += " + ";
        first = false;
        if (modulus_[i] != 1 || i == 0) s += std::to_string(modulus_[i]);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
      }
      s += ")";
    }
    return s;
  }

 private:
  explicit Field(std::uint32_t q) : q_(q) {
    if (q < 2 || q > (1u << 16)) {
      throw std::invalid_argument("gf: field order " + std::to_string(q) +
                                  " outside supported range [2, 65536]");
    }
    const auto factors = detail::prime_factors(q);
    if (factors.size() != 1) {
      throw std::invalid_argument("gf: field order " + std::to_string(q) +
                                  " is not a prime power");
    }
    p_ = factors.front();
    k_ = 0;
    for (std::uint32_t v = q; v > 1; v /= p_) ++k_;

    if (k_ > 1) choose_modulus();
    build_tables();
  }

  void choose_modulus() {
    // Monic candidates ordered by their lower coefficients read as a base-p
    // number with the x^(k-1) digit most significant.
    const std::uint32_t count = q_;
    for (std::uint32_t low = 0; low < count; ++low) {
      detail::PrimePoly f = detail::digits_of(low, p_, k_);
      f.push_back(1);
      if (f[0] == 0) continue;  // divisible by x
      if (detail::is_irreducible(f, p_)) {
        modulus_ = f;
        return;
      }
    }
    throw std::logic_error("gf: no irreducible modulus found");
  }

  Rep slow_mul(Rep a, Rep b) const {
    if (k_ == 1) {
      return static_cast<Rep>(static_cast<std::uint64_t>(a) * b % p_);
    }
    const auto fa = detail::digits_of(a, p_, k_);
    const auto fb = detail::digits_of(b, p_, k_);
    detail::PrimePoly prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      for (unsigned j = 0; j < k_; ++j) {
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(fa[i]) * fb[j]) % p_);
      }
    }
    return detail::rep_of(detail::poly_mod(prod, modulus_, p_), p_);
  }

  Rep slow_pow(Rep a, std::uint64_t e) const {
    Rep result = 1;
    while (e) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  }

  void build_tables() {
    const std::uint32_t order = q_ - 1;
    const auto divisors = detail::prime_factors(order);
    Rep generator = 0;
    for (Rep g = 1; g < q_ && generator == 0; ++g) {
      bool primitive = true;
      for (auto r : divisors) {
        if (slow_pow(g, order / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) generator = g;
    }
    if (q_ == 2) generator = 1;

    // exp_ is doubled so mul can skip the reduction of log a + log b.
    exp_.assign(2 * order + 1, 0);
    log_.assign(q_, 0);
    Rep x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = slow_mul(x, generator);
    }
    for (std::uint32_t i = order; i <= 2 * order; ++i) exp_[i] = exp_[i - order];

    if (k_ > 1 && p_ != 2) {
      neg_.assign(q_, 0);
      for (Rep a = 0; a < q_; ++a) {
        auto f = detail::digits_of(a, p_, k_);
        for (auto& c : f) c = (p_ - c) % p_;
        neg_[a] = detail::rep_of(f, p_);
      }
    }
  }

  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Rep> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Rep> neg_;
};

inline FieldPtr field_make(std::uint32_t q) { return Field::make(q); }

// Value wrapper for code that prefers operators over Field calls. Holds a
// non-owning pointer: the Field must outlive the element.
class FieldElement {
 public:
  FieldElement(const Field& field, Rep rep) : field_(&field), rep_(rep) {
    if (!field.contains(rep)) {
      throw std::invalid_argument("gf: representative " + std::to_string(rep) +
                                  " out of range for q = " +
                                  std::to_string(field.q()));
    }
  }

  Rep rep() const { return rep_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return rep_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return {*a.field_, a.field_->add(a.rep_, b.rep_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return {*a.field_, a.field_->sub(a.rep_, b.rep_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return {*a.field_, a.field_->mul(a.rep_, b.rep_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return {*a.field_, a.field_->div(a.rep_, b.rep_)};
  }
  FieldElement operator-() const { return {*field_, field_->neg(rep_)}; }

  FieldElement pow(std::uint64_t e) const { return {*field_, field_->pow(rep_, e)}; }
  FieldElement inv() const { return {*field_, field_->inv(rep_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->q() == b.field_->q() && a.rep_ == b.rep_ &&
           a.field_->modulus() == b.field_->modulus();
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    return os << a.rep_;
  }

 private:
  void check_same(const FieldElement& other) const {
    if (field_ != other.field_ && (field_->q() != other.field_->q() ||
                                   field_->modulus() != other.field_->modulus())) {
      throw std::invalid_argument("gf: operands from different fields");
    }
  }

  const Field* field_;
  Rep rep_;
};

}  // namespace kakeya

#endif  // KAKEYA_GF_HPP_
