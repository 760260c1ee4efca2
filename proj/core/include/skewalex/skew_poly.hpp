#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "skewalex/field.hpp"

namespace skewalex {

/// Degree of a Laurent polynomial: the span between highest and lowest
/// exponent. The zero polynomial has the distinguished infinite degree and is
/// rejected by all degree arithmetic.
struct Degree {
  bool finite = false;
  std::int64_t value = 0;

  static Degree infinite() { return Degree{false, 0}; }
  static Degree of(std::int64_t v) { return Degree{true, v}; }
  bool operator==(const Degree& o) const = default;
};

/// Element of the skew Laurent polynomial ring K_gamma[t^+-1]; finite map
/// from exponent to nonzero coefficient, with t^i a = gamma^i(a) t^i.
class SkewPoly {
public:
  explicit SkewPoly(FieldSpec spec) : spec_(std::move(spec)) {}
  static SkewPoly zero(const FieldSpec& spec) { return SkewPoly(spec); }
  static SkewPoly one(const FieldSpec& spec);
  static SkewPoly constant(const Scalar& c);
  static SkewPoly monomial(const Scalar& c, std::int64_t e);
  static SkewPoly t(const FieldSpec& spec, std::int64_t e = 1);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Single-term polynomials k t^e are exactly the units of the ring.
  bool is_unit() const { return coeffs_.size() == 1; }
  size_t term_count() const { return coeffs_.size(); }
  const std::map<std::int64_t, Scalar>& coeffs() const { return coeffs_; }

  std::int64_t min_exp() const;
  std::int64_t max_exp() const;
  Degree degree() const;
  Scalar coefficient(std::int64_t e) const;
  const Scalar& leading_coefficient() const;   // at max_exp
  const Scalar& trailing_coefficient() const;  // at min_exp

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator*(const SkewPoly& o) const;
  SkewPoly operator-() const;
  bool operator==(const SkewPoly& o) const;
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

  /// c * f (coefficientwise from the left).
  SkewPoly scaled_left(const Scalar& c) const;
  /// f * t^e: exponents shift, coefficients untouched.
  SkewPoly times_t_right(std::int64_t e) const;
  /// t^e * f: exponents shift, coefficients pass through gamma^e.
  SkewPoly times_t_left(std::int64_t e) const;
  /// gamma^k applied to every coefficient (equals t^k f t^-k).
  SkewPoly twisted(std::int64_t k) const;

  void add_term(std::int64_t e, const Scalar& c);

  std::string to_string() const;

private:
  FieldSpec spec_;
  std::map<std::int64_t, Scalar> coeffs_;
};

struct DivisionResult {
  SkewPoly quotient, remainder;
};

/// f = g*q + r with r = 0 or deg(r) < deg(g).
DivisionResult right_divide(const SkewPoly& f, const SkewPoly& g);
/// f = q*g + r with r = 0 or deg(r) < deg(g).
DivisionResult left_divide(const SkewPoly& f, const SkewPoly& g);

struct LeftMultiple {
  SkewPoly u, v;  // u*a = v*b
};

/// Common left multiple of nonzero a, b: u*a = v*b with u,v nonzero and
/// deg(u*a) <= deg(a) + deg(b).
LeftMultiple common_left_multiple(const SkewPoly& a, const SkewPoly& b);

/// Scalar content of a batch of polynomials: the fraction gcd of all their
/// coefficients (gcd of numerators over lcm of denominators). Dividing every
/// coefficient by it clears denominators and joint integer content. Returns
/// 1 over prime fields and for all-zero input.
Scalar coefficient_content(const FieldSpec& spec, const std::vector<const SkewPoly*>& polys);

}  // namespace skewalex
