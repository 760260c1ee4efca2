#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "skewalex/int_matrix.hpp"
#include "skewalex/mpoly.hpp"

namespace skewalex {

enum class FieldKind { rationals, prime_field, rat_fun };

/// Description of the coefficient field K together with its automorphism
/// gamma. Three families are supported: Q, F_p, and Q(x_1..x_m) where gamma
/// acts monomially through a matrix A in GL(m,Z): gamma(x^v) = x^{Av}.
class FieldSpec {
public:
  static FieldSpec rationals();
  static FieldSpec prime_field(std::int64_t p);
  static FieldSpec rat_fun(int vars, IntMat automorphism);

  FieldKind kind() const { return data_->kind; }
  std::int64_t prime() const { return data_->p; }
  int vars() const { return data_->vars; }
  const IntMat& automorphism() const { return data_->aut; }

  /// True when gamma is the identity, i.e. the skew ring is an ordinary
  /// commutative Laurent polynomial ring.
  bool commutative() const;

  bool operator==(const FieldSpec& o) const;
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string describe() const;

private:
  struct Data {
    FieldKind kind;
    std::int64_t p = 0;
    int vars = 0;
    IntMat aut;
  };
  explicit FieldSpec(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// An element of the coefficient field, in canonical form. Rational function
/// values keep numerator/denominator gcd-reduced with the denominator's
/// grlex-leading coefficient positive, so equality is representational.
class Scalar {
public:
  struct RatFun {
    MPoly num, den;
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
  };

  static Scalar zero(const FieldSpec& spec);
  static Scalar one(const FieldSpec& spec);
  static Scalar from_int(const FieldSpec& spec, std::int64_t n);
  static Scalar rational(const FieldSpec& spec, const mpq_class& q);
  static Scalar fraction(const FieldSpec& spec, const MPoly& num, const MPoly& den);
  /// Laurent monomial x^v (components of v may be negative).
  static Scalar laurent_monomial(const FieldSpec& spec, const IntVec& v);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;

  /// gamma^k applied to this scalar; identity for commutative kinds.
  Scalar automorphism(std::int64_t k) const;

  const mpq_class& rational_value() const;
  std::int64_t residue_value() const;
  const RatFun& ratfun_value() const;

  std::string to_string() const;

private:
  Scalar(FieldSpec spec, std::variant<mpq_class, std::int64_t, RatFun> v)
      : spec_(std::move(spec)), v_(std::move(v)) {}
  void check_same(const Scalar& o) const;

  FieldSpec spec_;
  std::variant<mpq_class, std::int64_t, RatFun> v_;
};

}  // namespace skewalex
