#include "skewalex/skew_poly.hpp"

#include <sstream>

#include "skewalex/errors.hpp"

namespace skewalex {

SkewPoly SkewPoly::one(const FieldSpec& spec) { return constant(Scalar::one(spec)); }

SkewPoly SkewPoly::constant(const Scalar& c) { return monomial(c, 0); }

SkewPoly SkewPoly::monomial(const Scalar& c, std::int64_t e) {
  SkewPoly p(c.spec());
  p.add_term(e, c);
  return p;
}

SkewPoly SkewPoly::t(const FieldSpec& spec, std::int64_t e) {
  return monomial(Scalar::one(spec), e);
}

bool SkewPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_one();
}

std::int64_t SkewPoly::min_exp() const {
  if (is_zero()) throw PreconditionError("exponent range of zero polynomial");
  return coeffs_.begin()->first;
}

std::int64_t SkewPoly::max_exp() const {
  if (is_zero()) throw PreconditionError("exponent range of zero polynomial");
  return coeffs_.rbegin()->first;
}

Degree SkewPoly::degree() const {
  if (is_zero()) return Degree::infinite();
  return Degree::of(max_exp() - min_exp());
}

Scalar SkewPoly::coefficient(std::int64_t e) const {
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) return Scalar::zero(spec_);
  return it->second;
}

const Scalar& SkewPoly::leading_coefficient() const {
  if (is_zero()) throw PreconditionError("leading coefficient of zero polynomial");
  return coeffs_.rbegin()->second;
}

const Scalar& SkewPoly::trailing_coefficient() const {
  if (is_zero()) throw PreconditionError("trailing coefficient of zero polynomial");
  return coeffs_.begin()->second;
}

void SkewPoly::add_term(std::int64_t e, const Scalar& c) {
  if (c.spec() != spec_) throw FieldMismatch("coefficient from a different field");
  if (c.is_zero()) return;
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    coeffs_.emplace(e, c);
  } else {
    Scalar s = it->second + c;
    if (s.is_zero()) coeffs_.erase(it);
    else it->second = std::move(s);
  }
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  if (spec_ != o.spec_) throw FieldMismatch("polynomials over different fields");
  SkewPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
  return r;
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator-() const {
  SkewPoly r(spec_);
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  if (spec_ != o.spec_) throw FieldMismatch("polynomials over different fields");
  SkewPoly r(spec_);
  // (a t^i)(b t^j) = a gamma^i(b) t^{i+j}; twist o once per distinct i.
  for (const auto& [i, a] : coeffs_) {
    const SkewPoly g = o.twisted(i);
    for (const auto& [j, b] : g.coeffs_) r.add_term(i + j, a * b);
  }
  return r;
}

bool SkewPoly::operator==(const SkewPoly& o) const {
  return spec_ == o.spec_ && coeffs_ == o.coeffs_;
}

SkewPoly SkewPoly::scaled_left(const Scalar& c) const {
  SkewPoly r(spec_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : coeffs_) r.coeffs_.emplace(e, c * a);
  return r;
}

SkewPoly SkewPoly::times_t_right(std::int64_t e) const {
  SkewPoly r(spec_);
  for (const auto& [i, a] : coeffs_) r.coeffs_.emplace(i + e, a);
  return r;
}

SkewPoly SkewPoly::times_t_left(std::int64_t e) const {
  SkewPoly r(spec_);
  for (const auto& [i, a] : coeffs_) r.coeffs_.emplace(i + e, a.automorphism(e));
  return r;
}

SkewPoly SkewPoly::twisted(std::int64_t k) const {
  if (spec_.commutative() || k == 0) return *this;
  SkewPoly r(spec_);
  for (const auto& [i, a] : coeffs_) r.coeffs_.emplace(i, a.automorphism(k));
  return r;
}

namespace {

// Division of ordinary skew polynomials (all exponents >= 0, nonzero
// constant term in the divisor is not required). Top-down elimination.
// side = false: f = g q + r (quotient terms multiply g on the right);
// side = true:  f = q g + r.
DivisionResult divide_shifted(const SkewPoly& f, const SkewPoly& g, bool left) {
  SkewPoly q(f.spec()), rem = f;
  const std::int64_t dg = g.max_exp();
  const Scalar& lg = g.leading_coefficient();
  while (!rem.is_zero() && rem.max_exp() >= dg) {
    const std::int64_t k = rem.max_exp();
    const Scalar& lc = rem.leading_coefficient();
    if (left) {
      // (u t^{k-dg}) (lg t^{dg}) = u gamma^{k-dg}(lg) t^k
      const Scalar u = lc * lg.automorphism(k - dg).inverse();
      const SkewPoly term = SkewPoly::monomial(u, k - dg);
      q = q + term;
      rem = rem - term * g;
    } else {
      // (lg t^{dg}) (u t^{k-dg}) = lg gamma^{dg}(u) t^k
      const Scalar u = (lg.inverse() * lc).automorphism(-dg);
      const SkewPoly term = SkewPoly::monomial(u, k - dg);
      q = q + term;
      rem = rem - g * term;
    }
  }
  return {q, rem};
}

}  // namespace

DivisionResult right_divide(const SkewPoly& f, const SkewPoly& g) {
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (f.is_zero()) return {SkewPoly::zero(f.spec()), SkewPoly::zero(f.spec())};
  const std::int64_t mf = f.min_exp(), mg = g.min_exp();
  // Shift supports to ordinary polynomials: f~ = f t^{-mf}, g~ = g t^{-mg}.
  const SkewPoly fs = f.times_t_right(-mf);
  const SkewPoly gs = g.times_t_right(-mg);
  auto [q, r] = divide_shifted(fs, gs, /*left=*/false);
  // f = g (t^{-mg} q t^{mf}) + r t^{mf}
  return {q.times_t_left(-mg).times_t_right(mf), r.times_t_right(mf)};
}

DivisionResult left_divide(const SkewPoly& f, const SkewPoly& g) {
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (f.is_zero()) return {SkewPoly::zero(f.spec()), SkewPoly::zero(f.spec())};
  const std::int64_t mf = f.min_exp(), mg = g.min_exp();
  // f^ = t^{-mf} f, g^ = t^{-mg} g.
  const SkewPoly fs = f.times_t_left(-mf);
  const SkewPoly gs = g.times_t_left(-mg);
  auto [q, r] = divide_shifted(fs, gs, /*left=*/true);
  // f = (t^{mf} q t^{-mg}) g + t^{mf} r
  return {q.times_t_left(mf).times_t_right(-mg), r.times_t_left(mf)};
}

LeftMultiple common_left_multiple(const SkewPoly& a, const SkewPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw DivisionByZero("common left multiple of a zero polynomial");
  // Euclidean chain with left quotients; cofactors track r_i = s_i a + t_i b.
  SkewPoly r0 = a, r1 = b;
  SkewPoly s0 = SkewPoly::one(a.spec()), s1 = SkewPoly::zero(a.spec());
  SkewPoly t0 = SkewPoly::zero(a.spec()), t1 = SkewPoly::one(a.spec());
  while (!r1.is_zero()) {
    auto [q, r] = left_divide(r0, r1);
    SkewPoly s2 = s0 - q * s1;
    SkewPoly t2 = t0 - q * t1;
    // Left-scaling the whole triple preserves r = s a + t b; dividing out the
    // joint coefficient content keeps the chain from swelling.
    const Scalar c = coefficient_content(a.spec(), {&r, &s2, &t2});
    if (!c.is_zero() && !c.is_one()) {
      const Scalar ci = c.inverse();
      r = r.scaled_left(ci);
      s2 = s2.scaled_left(ci);
      t2 = t2.scaled_left(ci);
    }
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  // r1 = 0 = s1 a + t1 b
  if (s1.is_zero() || t1.is_zero())
    throw InternalInvariantError("degenerate cofactors in common left multiple");
  return {s1, -t1};
}

Scalar coefficient_content(const FieldSpec& spec, const std::vector<const SkewPoly*>& polys) {
  if (spec.kind() == FieldKind::prime_field) return Scalar::one(spec);
  if (spec.kind() == FieldKind::rationals) {
    mpz_class g = 0, l = 1;
    for (const SkewPoly* p : polys)
      for (const auto& [e, c] : p->coeffs()) {
        const mpq_class& q = c.rational_value();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
      }
    if (g == 0) return Scalar::one(spec);
    return Scalar::rational(spec, mpq_class(g) / mpq_class(l));
  }
  MPoly g(spec.vars()), l = MPoly::constant(spec.vars(), 1);
  bool any = false;
  for (const SkewPoly* p : polys)
    for (const auto& [e, c] : p->coeffs()) {
      any = true;
      const auto& f = c.ratfun_value();
      l = mpoly_div_exact(l * f.den, mpoly_gcd(l, f.den));
    }
  if (!any) return Scalar::one(spec);
  for (const SkewPoly* p : polys)
    for (const auto& [e, c] : p->coeffs()) {
      const auto& f = c.ratfun_value();
      g = mpoly_gcd(g, f.num * mpoly_div_exact(l, f.den));
    }
  return Scalar::fraction(spec, g, l);
}

std::string SkewPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e == 1) os << "t";
    else if (e != 0) os << "t^" << e;
  }
  return os.str();
}

}  // namespace skewalex
