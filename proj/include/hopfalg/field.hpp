#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace hopfalg {

using json = nlohmann::ordered_json;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runtime field descriptor; scalars are mpq_class for Q and Fp for GF(p).
struct Field {
  enum Kind { Rationals, PrimeField };
  Kind kind = Rationals;
  uint32_t p = 0;

  static Field rationals() { return {Rationals, 0}; }
  static Field prime(uint32_t p) {
    if (p < 2) throw InvalidInput("GF(p) needs a prime p");
    for (uint32_t d = 2; uint64_t(d) * d <= p; ++d)
      if (p % d == 0) throw InvalidInput("GF(" + std::to_string(p) + "): not prime");
    return {PrimeField, p};
  }
  bool operator==(const Field&) const = default;

  std::string name() const { return kind == Rationals ? "Q" : "GF(" + std::to_string(p) + ")"; }
  static Field parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
      try {
        return prime(uint32_t(std::stoul(s.substr(3, s.size() - 4))));
      } catch (const std::logic_error&) {
      }
    }
    throw InvalidInput("unknown field \"" + s + "\"");
  }
};

class Fp {
 public:
  Fp() = default;
  Fp(uint32_t p, int64_t x) : v_(uint32_t(((x % int64_t(p)) + int64_t(p)) % int64_t(p))), p_(p) {}

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }

  friend Fp operator+(Fp a, Fp b) {
    uint32_t p = a.mod(b);
    return p ? raw(uint32_t((uint64_t(a.v_) + b.v_) % p), p) : Fp();
  }
  friend Fp operator-(Fp a, Fp b) {
    uint32_t p = a.mod(b);
    return p ? raw(uint32_t((uint64_t(a.v_) + p - b.v_) % p), p) : Fp();
  }
  friend Fp operator*(Fp a, Fp b) {
    uint32_t p = a.mod(b);
    return p ? raw(uint32_t(uint64_t(a.v_) * b.v_ % p), p) : Fp();
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m) {
      int64_t q = a / m;
      a -= q * m;
      std::swap(a, m);
      x0 -= q * x1;
      std::swap(x0, x1);
    }
    return Fp(p_, x0);
  }

 private:
  static Fp raw(uint32_t v, uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  // A default-constructed Fp is a zero with p = 0; the other operand supplies p.
  uint32_t mod(Fp o) const { return p_ ? p_ : o.p_; }

  uint32_t v_ = 0;
  uint32_t p_ = 0;
};

template <class K>
struct Scalar;

template <>
struct Scalar<mpq_class> {
  static mpq_class from_int(const Field&, long n) { return mpq_class(n); }
  static bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

  static json to_json(const mpq_class& x) { return x.get_str(); }

  static mpq_class from_json(const Field&, const json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) throw InvalidInput("rational must be a string \"p/q\" or an integer");
    mpq_class x;
    if (x.set_str(j.get<std::string>(), 10) != 0 || x.get_den() == 0)
      throw InvalidInput("bad rational \"" + j.get<std::string>() + "\"");
    x.canonicalize();
    return x;
  }

  template <class Rng>
  static mpq_class random(const Field&, Rng& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    mpq_class x(num(rng), den(rng));
    x.canonicalize();
    return x;
  }
};

template <>
struct Scalar<Fp> {
  static Fp from_int(const Field& f, long n) { return f.p ? Fp(f.p, n) : Fp(); }
  static bool is_zero(const Fp& x) { return x.value() == 0; }

  static json to_json(const Fp& x) { return x.value(); }

  static Fp from_json(const Field& f, const json& j) {
    if (j.is_number_integer()) return Fp(f.p, j.get<int64_t>() % int64_t(f.p));
    if (j.is_string()) {
      mpq_class q = Scalar<mpq_class>::from_json(f, j);
      mpz_class num = q.get_num() % f.p, den = q.get_den() % f.p;
      if (den == 0) throw InvalidInput("denominator divisible by p");
      return Fp(f.p, num.get_si()) / Fp(f.p, den.get_si());
    }
    throw InvalidInput("GF(p) scalar must be an integer");
  }

  template <class Rng>
  static Fp random(const Field& f, Rng& rng) {
    std::uniform_int_distribution<uint32_t> d(0, f.p - 1);
    return Fp(f.p, d(rng));
  }
};

template <class K>
K from_int(const Field& f, long n) {
  return Scalar<K>::from_int(f, n);
}
template <class K>
bool is_zero(const K& x) {
  return Scalar<K>::is_zero(x);
}

}  // namespace hopfalg
