#include "skewalex/abelian_unit.hpp"

#include <sstream>

#include "skewalex/errors.hpp"

namespace skewalex {

void AbelianizedUnit::push_numerator(const SkewPoly& p) {
  if (p.is_zero()) throw DivisionByZero("zero factor in abelianized unit");
  if (p.spec() != spec_) throw FieldMismatch("factor over a different field");
  if (!p.is_one()) num_.push_back(p);
}

void AbelianizedUnit::push_denominator(const SkewPoly& p) {
  if (p.is_zero()) throw DivisionByZero("zero factor in abelianized unit");
  if (p.spec() != spec_) throw FieldMismatch("factor over a different field");
  if (!p.is_one()) den_.push_back(p);
}

void AbelianizedUnit::multiply_by(const AbelianizedUnit& o, bool inverted) {
  const auto& n = inverted ? o.den_ : o.num_;
  const auto& d = inverted ? o.num_ : o.den_;
  num_.insert(num_.end(), n.begin(), n.end());
  den_.insert(den_.end(), d.begin(), d.end());
  sign_ambiguous_ = sign_ambiguous_ || o.sign_ambiguous_;
  unit_ambiguous_ = unit_ambiguous_ || o.unit_ambiguous_;
}

std::int64_t AbelianizedUnit::degree() const {
  std::int64_t d = 0;
  for (const auto& p : num_) d += p.degree().value;
  for (const auto& p : den_) d -= p.degree().value;
  return d;
}

namespace {

// Monic univariate gcd over the (commutative) coefficient field.
SkewPoly poly_gcd_commutative(SkewPoly a, SkewPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = right_divide(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.times_t_right(-a.min_exp()).scaled_left(a.trailing_coefficient().inverse());
}

}  // namespace

AbelianizedUnit::Fraction AbelianizedUnit::reduced() const {
  if (!spec_.commutative())
    throw SkewEqualityUndecidable(
        "no canonical fraction form over a genuinely skew coefficient field");
  SkewPoly n = SkewPoly::one(spec_), d = SkewPoly::one(spec_);
  for (const auto& p : num_) n = n * p;
  for (const auto& p : den_) d = d * p;
  const SkewPoly g = poly_gcd_commutative(n, d);
  n = right_divide(n, g).quotient;
  d = right_divide(d, g).quotient;
  // Shift both by the same power of t so the denominator starts at t^0.
  const std::int64_t e = d.min_exp();
  return {n.times_t_right(-e), d.times_t_right(-e)};
}

AbelianizedUnit::Fraction AbelianizedUnit::reduced_normalized() const {
  Fraction f = reduced();
  f.num = f.num.times_t_right(-f.num.min_exp());
  f.num = f.num.scaled_left(f.num.trailing_coefficient().inverse());
  f.den = f.den.times_t_right(-f.den.min_exp());
  f.den = f.den.scaled_left(f.den.trailing_coefficient().inverse());
  return f;
}

bool AbelianizedUnit::is_monomial() const {
  const Fraction f = reduced();
  return f.num.is_unit() && f.den.is_unit();
}

bool AbelianizedUnit::equal_up_to_unit(const AbelianizedUnit& o) const {
  const Fraction a = reduced_normalized();
  const Fraction b = o.reduced_normalized();
  return a.num == b.num && a.den == b.den;
}

std::string AbelianizedUnit::to_string() const {
  std::ostringstream os;
  if (num_.empty()) os << "{1}";
  else {
    os << "{";
    for (size_t i = 0; i < num_.size(); ++i) os << (i ? " , " : "") << num_[i].to_string();
    os << "}";
  }
  os << " / ";
  if (den_.empty()) os << "{1}";
  else {
    os << "{";
    for (size_t i = 0; i < den_.size(); ++i) os << (i ? " , " : "") << den_[i].to_string();
    os << "}";
  }
  return os.str();
}

}  // namespace skewalex
