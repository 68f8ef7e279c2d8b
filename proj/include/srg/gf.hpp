#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srg {

/// Index of a field element in [0, q). The index encodes the polynomial
/// representation in base p: sum c_i p^i stands for sum c_i x^i.
using felem = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace detail

/// Exact arithmetic in GF(p^k), q = p^k <= 2^20. Multiplication runs on
/// log/antilog tables relative to the field's primitive element; addition is
/// digit-wise mod p on the base-p index encoding (plain XOR when p = 2).
///
/// The modulus defaults to the lexicographically least monic irreducible
/// polynomial of degree k whose root x is primitive, where polynomials are
/// ordered by their non-leading coefficient tuple (c_{k-1}, ..., c_0).
/// The primitive element defaults to the least element index of
/// multiplicative order q-1. Callers may pin either one (the constructions
/// over GF(529) need a specific eta).
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  Field(std::uint32_t p, std::uint32_t k,
        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
        std::optional<felem> eta = std::nullopt)
      : p_(p), k_(k) {
    if (!detail::is_prime(p)) throw std::invalid_argument("field: p must be prime");
    if (k < 1) throw std::invalid_argument("field: degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxOrder) throw std::invalid_argument("field: order exceeds 2^20");
    }
    q_ = static_cast<std::uint32_t>(q);
    pow_p_.resize(k_ + 1);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i <= k_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

    if (modulus) {
      mod_ = *modulus;
      for (auto& c : mod_) c %= p_;
      if (mod_.size() != k_ + 1 || mod_.back() != 1)
        throw std::invalid_argument("field: modulus must be monic of degree k");
      if (!poly_irreducible(mod_))
        throw std::invalid_argument("field: modulus is reducible");
    } else {
      mod_ = default_modulus();
    }

    if (eta) {
      if (*eta == 0 || *eta >= q_)
        throw std::invalid_argument("field: eta out of range");
      if (!is_primitive_raw(*eta))
        throw std::invalid_argument("field: eta is not primitive");
      eta_ = *eta;
    } else {
      eta_ = least_primitive();
    }

    build_tables();
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t q() const { return q_; }
  felem eta() const { return eta_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  /// Fields are interchangeable exactly when (p, k, modulus) agree.
  bool operator==(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  felem add(felem a, felem b) const {
    if (p_ == 2) return a ^ b;
    felem r = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint32_t d = (a % p_) + (b % p_);
      if (d >= p_) d -= p_;
      r += d * pow_p_[i];
      a /= p_;
      b /= p_;
    }
    return r;
  }

  felem neg(felem a) const {
    if (p_ == 2) return a;
    felem r = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint32_t d = a % p_;
      if (d) d = p_ - d;
      r += d * pow_p_[i];
      a /= p_;
    }
    return r;
  }

  felem sub(felem a, felem b) const { return add(a, neg(b)); }

  felem mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return antilog_[s];
  }

  felem inv(felem a) const {
    if (a == 0) throw std::domain_error("field: inversion of zero");
    std::uint32_t l = log_[a];
    return antilog_[l == 0 ? 0 : q_ - 1 - l];
  }

  felem pow(felem a, std::int64_t e) const {
    if (a == 0) {
      if (e < 0) throw std::domain_error("field: inversion of zero");
      return e == 0 ? 1 : 0;
    }
    std::int64_t m = q_ - 1;
    std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % m)) % m;
    if (r < 0) r += m;
    return antilog_[r];
  }

  /// Discrete log base eta; a != 0.
  std::uint32_t log(felem a) const {
    if (a == 0) throw std::domain_error("field: log of zero");
    return log_[a];
  }

  /// eta^e for any e >= 0.
  felem eta_pow(std::uint64_t e) const { return antilog_[e % (q_ - 1)]; }

  /// Quadratic residue test, odd characteristic only. Squares are exactly
  /// the even powers of a generator.
  bool is_square(felem a) const {
    if (p_ == 2) throw std::domain_error("field: is_square needs odd characteristic");
    if (a == 0) throw std::domain_error("field: is_square of zero");
    return log_[a] % 2 == 0;
  }

  std::uint64_t mult_order(felem a) const {
    if (a == 0) throw std::domain_error("field: order of zero");
    std::uint64_t n = q_ - 1, l = log_[a];
    std::uint64_t g = gcd(n, l == 0 ? n : l);
    return n / g;
  }

  bool is_primitive(felem a) const { return a != 0 && mult_order(a) == q_ - 1; }

  felem from_coeffs(const std::vector<std::uint32_t>& c) const {
    felem r = 0;
    for (std::uint32_t i = 0; i < k_ && i < c.size(); ++i)
      r += (c[i] % p_) * pow_p_[i];
    return r;
  }

  std::vector<std::uint32_t> to_coeffs(felem a) const {
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

 private:
  using Poly = std::vector<std::uint32_t>;  // coefficients c0.., possibly with high zeros

  static std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
      std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static std::uint32_t poly_deg(const Poly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
      if (f[i]) return static_cast<std::uint32_t>(i);
    return 0;
  }

  std::uint32_t inv_mod_p(std::uint32_t a) const {
    // p is small; brute scan is fine at construction time
    for (std::uint32_t x = 1; x < p_; ++x)
      if (a * x % p_ == 1) return x;
    throw std::logic_error("field: no inverse mod p");
  }

  // f mod g over GF(p), g nonzero
  Poly poly_mod(Poly f, const Poly& g) const {
    std::uint32_t dg = poly_deg(g);
    std::uint32_t lead_inv = inv_mod_p(g[dg]);
    for (std::size_t i = f.size(); i-- > 0;) {
      if (i < dg || f[i] == 0) continue;
      std::uint32_t c = f[i] * lead_inv % p_;
      for (std::uint32_t j = 0; j <= dg; ++j) {
        std::uint64_t t = f[i - dg + j] + static_cast<std::uint64_t>(p_ - 1) * c % p_ * g[j];
        f[i - dg + j] = static_cast<std::uint32_t>(t % p_);
      }
    }
    f.resize(dg, 0);
    return f;
  }

  Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) const {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
    }
    return poly_mod(std::move(r), m);
  }

  // Exhaustive trial division by all monic polynomials of degree 1..k/2.
  bool poly_irreducible(const Poly& f) const {
    std::uint32_t d = poly_deg(f);
    if (d == 0) return false;
    if (d == 1) return true;
    for (std::uint32_t dd = 1; dd <= d / 2; ++dd) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < dd; ++i) count *= p_;
      for (std::uint64_t e = 0; e < count; ++e) {
        Poly g(dd + 1, 0);
        std::uint64_t t = e;
        for (std::uint32_t i = 0; i < dd; ++i) {
          g[i] = static_cast<std::uint32_t>(t % p_);
          t /= p_;
        }
        g[dd] = 1;
        Poly r = poly_mod(f, g);
        bool zero = true;
        for (auto c : r)
          if (c) zero = false;
        if (zero) return false;
      }
    }
    return true;
  }

  // order of the residue class of `a` modulo m, via prime factors of q-1
  bool has_full_order(const Poly& a, const Poly& m) const {
    if (q_ == 2) {
      // q-1 = 1: every nonzero element qualifies
      for (auto c : a)
        if (c) return true;
      return false;
    }
    auto powmod = [&](Poly base, std::uint64_t e) {
      Poly r(1, 1);
      while (e) {
        if (e & 1) r = poly_mulmod(r, base, m);
        base = poly_mulmod(base, base, m);
        e >>= 1;
      }
      return r;
    };
    for (auto r : detail::prime_factors(q_ - 1)) {
      Poly t = powmod(a, (q_ - 1) / r);
      if (poly_deg(t) == 0 && t[0] == 1) return false;
    }
    return true;
  }

  bool is_primitive_raw(felem a) const {
    Poly pa(k_, 0);
    felem t = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
      pa[i] = t % p_;
      t /= p_;
    }
    return has_full_order(pa, mod_);
  }

  Poly default_modulus() const {
    if (k_ == 1) {
      // x + c whose root -c is primitive mod p
      for (std::uint32_t c = 0; c < p_; ++c) {
        Poly f = {c, 1};
        std::uint32_t r = (p_ - c) % p_;  // the root of f
        if (q_ == 2) {
          if (r == 1) return f;
          continue;
        }
        if (r == 0) continue;
        bool prim = true;
        for (auto pr : detail::prime_factors(q_ - 1)) {
          std::uint64_t e = (q_ - 1) / pr, acc = 1, base = r;
          while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
          }
          if (acc == 1) {
            prim = false;
            break;
          }
        }
        if (prim) return f;
      }
      throw std::logic_error("field: no primitive root found");
    }
    // scan non-leading coefficient tuples in ascending base-p encoding
    Poly x = {0, 1};
    for (std::uint32_t e = 0; e < q_; ++e) {
      Poly f(k_ + 1, 0);
      std::uint32_t t = e;
      for (std::uint32_t i = 0; i < k_; ++i) {
        f[i] = t % p_;
        t /= p_;
      }
      f[k_] = 1;
      if (!poly_irreducible(f)) continue;
      if (has_full_order(x, f)) return f;
    }
    throw std::logic_error("field: no primitive irreducible modulus found");
  }

  felem least_primitive() const {
    for (felem a = 1; a < q_; ++a)
      if (is_primitive_raw(a)) return a;
    throw std::logic_error("field: no primitive element found");
  }

  void build_tables() {
    antilog_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Poly e(k_, 0);
    felem t = eta_;
    for (std::uint32_t i = 0; i < k_; ++i) {
      e[i] = t % p_;
      t /= p_;
    }
    Poly acc(1, 1);
    std::vector<bool> seen(q_, false);
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      felem v = 0;
      for (std::uint32_t j = 0; j < acc.size() && j < k_; ++j) v += acc[j] * pow_p_[j];
      if (v == 0 || seen[v])
        throw std::logic_error("field: eta does not generate the multiplicative group");
      seen[v] = true;
      antilog_[i] = v;
      log_[v] = i;
      acc = poly_mulmod(acc, e, mod_);
    }
  }

  std::uint32_t p_, k_, q_;
  felem eta_ = 0;
  std::vector<std::uint32_t> mod_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<felem> antilog_;
  std::vector<std::uint32_t> log_;
};

}  // namespace srg
