#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewalex/skew_poly.hpp"

namespace skewalex {

/// Element of K_gamma(t)^x_ab represented as a formal multiset fraction of
/// nonzero skew Laurent polynomials. The degree is well-defined for every
/// representative; reduction to a normal form exists only over commutative
/// specs. Two indeterminacy flags travel with the value: the torsion sign
/// (+-1) and the kt^e unit class of Theorem-style statements.
class AbelianizedUnit {
public:
  explicit AbelianizedUnit(FieldSpec spec) : spec_(std::move(spec)) {}
  static AbelianizedUnit one(const FieldSpec& spec) { return AbelianizedUnit(spec); }

  const FieldSpec& spec() const { return spec_; }
  const std::vector<SkewPoly>& numerators() const { return num_; }
  const std::vector<SkewPoly>& denominators() const { return den_; }
  bool sign_ambiguous() const { return sign_ambiguous_; }
  bool unit_ambiguous() const { return unit_ambiguous_; }
  void set_sign_ambiguous(bool b) { sign_ambiguous_ = b; }
  void set_unit_ambiguous(bool b) { unit_ambiguous_ = b; }

  void push_numerator(const SkewPoly& p);
  void push_denominator(const SkewPoly& p);
  /// Multiplies by o (or by 1/o when inverted is true).
  void multiply_by(const AbelianizedUnit& o, bool inverted = false);

  std::int64_t degree() const;

  struct Fraction {
    SkewPoly num, den;
  };
  /// Commutative specs only: the value as a reduced coprime fraction, exact
  /// (no unit slack). Throws SkewEqualityUndecidable otherwise.
  Fraction reduced() const;
  /// Canonical representative of the kt^e class: numerator and denominator
  /// separately shifted to minimum exponent 0 and scaled to trailing
  /// coefficient 1.
  Fraction reduced_normalized() const;
  /// True when the reduced value is a single term k t^e.
  bool is_monomial() const;
  /// Equality in K_gamma(t)^x_ab up to kt^e (commutative specs only).
  bool equal_up_to_unit(const AbelianizedUnit& o) const;

  std::string to_string() const;

private:
  FieldSpec spec_;
  std::vector<SkewPoly> num_, den_;
  bool sign_ambiguous_ = false;
  bool unit_ambiguous_ = false;
};

}  // namespace skewalex
