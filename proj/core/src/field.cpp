#include "skewalex/field.hpp"

#include <sstream>

#include "skewalex/errors.hpp"

namespace skewalex {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw DivisionByZero("inverse of zero residue");
  return mod_reduce(t, p);
}

}  // namespace

FieldSpec FieldSpec::rationals() {
  static const auto data = std::make_shared<const Data>(Data{FieldKind::rationals, 0, 0, IntMat()});
  return FieldSpec(data);
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw PreconditionError("prime field modulus must be prime");
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::prime_field;
  d->p = p;
  return FieldSpec(std::move(d));
}

FieldSpec FieldSpec::rat_fun(int vars, IntMat automorphism) {
  if (vars < 1) throw PreconditionError("rational function field needs at least one variable");
  if (automorphism.rows() != vars || automorphism.cols() != vars)
    throw PreconditionError("automorphism matrix shape must match variable count");
  const auto det = automorphism.determinant();
  if (det != 1 && det != -1)
    throw PreconditionError("automorphism matrix must lie in GL(m,Z)");
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::rat_fun;
  d->vars = vars;
  d->aut = std::move(automorphism);
  return FieldSpec(std::move(d));
}

bool FieldSpec::commutative() const {
  return kind() != FieldKind::rat_fun || data_->aut.is_identity();
}

bool FieldSpec::operator==(const FieldSpec& o) const {
  if (data_ == o.data_) return true;
  if (data_->kind != o.data_->kind) return false;
  switch (data_->kind) {
    case FieldKind::rationals: return true;
    case FieldKind::prime_field: return data_->p == o.data_->p;
    case FieldKind::rat_fun: return data_->vars == o.data_->vars && data_->aut == o.data_->aut;
  }
  return false;
}

std::string FieldSpec::describe() const {
  switch (kind()) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime_field: return "F" + std::to_string(prime());
    case FieldKind::rat_fun: return "Q(x1..x" + std::to_string(vars()) + ")";
  }
  return "?";
}

void Scalar::check_same(const Scalar& o) const {
  if (spec_ != o.spec_) throw FieldMismatch("scalars belong to different fields");
}

Scalar Scalar::zero(const FieldSpec& spec) { return from_int(spec, 0); }
Scalar Scalar::one(const FieldSpec& spec) { return from_int(spec, 1); }

Scalar Scalar::from_int(const FieldSpec& spec, std::int64_t n) {
  switch (spec.kind()) {
    case FieldKind::rationals: return Scalar(spec, mpq_class(n));
    case FieldKind::prime_field: return Scalar(spec, mod_reduce(n, spec.prime()));
    case FieldKind::rat_fun:
      return Scalar(spec, RatFun{MPoly::constant(spec.vars(), n),
                                 MPoly::constant(spec.vars(), 1)});
  }
  throw PreconditionError("unknown field kind");
}

Scalar Scalar::rational(const FieldSpec& spec, const mpq_class& q) {
  switch (spec.kind()) {
    case FieldKind::rationals: {
      mpq_class c = q;
      c.canonicalize();
      return Scalar(spec, c);
    }
    case FieldKind::prime_field: {
      const std::int64_t p = spec.prime();
      mpz_class num = q.get_num() % p, den = q.get_den() % p;
      const std::int64_t n = mod_reduce(num.get_si(), p);
      const std::int64_t d = mod_reduce(den.get_si(), p);
      if (d == 0) throw DivisionByZero("denominator vanishes in the prime field");
      return Scalar(spec, mod_mul(n, mod_inv(d, p), p));
    }
    case FieldKind::rat_fun:
      return fraction(spec, MPoly::constant(spec.vars(), q.get_num()),
                      MPoly::constant(spec.vars(), q.get_den()));
  }
  throw PreconditionError("unknown field kind");
}

Scalar Scalar::fraction(const FieldSpec& spec, const MPoly& num, const MPoly& den) {
  if (spec.kind() != FieldKind::rat_fun)
    throw FieldMismatch("fraction values require a rational function field");
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  if (num.is_zero())
    return Scalar(spec, RatFun{MPoly(spec.vars()), MPoly::constant(spec.vars(), 1)});
  const MPoly g = mpoly_gcd(num, den);
  MPoly n = mpoly_div_exact(num, g);
  MPoly d = mpoly_div_exact(den, g);
  if (d.leading_coefficient() < 0) {
    n = -n;
    d = -d;
  }
  return Scalar(spec, RatFun{std::move(n), std::move(d)});
}

Scalar Scalar::laurent_monomial(const FieldSpec& spec, const IntVec& v) {
  if (spec.kind() != FieldKind::rat_fun)
    throw FieldMismatch("monomial values require a rational function field");
  if (static_cast<int>(v.size()) != spec.vars())
    throw ShapeError("monomial exponent vector has wrong length");
  Exponents en(spec.vars(), 0), ed(spec.vars(), 0);
  for (int i = 0; i < spec.vars(); ++i) {
    if (v[i] >= 0) en[i] = v[i];
    else ed[i] = -v[i];
  }
  return Scalar(spec, RatFun{MPoly::monomial(spec.vars(), en), MPoly::monomial(spec.vars(), ed)});
}

bool Scalar::is_zero() const {
  switch (spec_.kind()) {
    case FieldKind::rationals: return std::get<mpq_class>(v_) == 0;
    case FieldKind::prime_field: return std::get<std::int64_t>(v_) == 0;
    case FieldKind::rat_fun: return std::get<RatFun>(v_).num.is_zero();
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(spec_); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  switch (spec_.kind()) {
    case FieldKind::rationals:
      return Scalar(spec_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
    case FieldKind::prime_field:
      return Scalar(spec_,
                    mod_reduce(std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_),
                               spec_.prime()));
    case FieldKind::rat_fun: {
      const RatFun& a = std::get<RatFun>(v_);
      const RatFun& b = std::get<RatFun>(o.v_);
      return fraction(spec_, a.num * b.den + b.num * a.den, a.den * b.den);
    }
  }
  throw PreconditionError("unknown field kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  switch (spec_.kind()) {
    case FieldKind::rationals: return Scalar(spec_, mpq_class(-std::get<mpq_class>(v_)));
    case FieldKind::prime_field:
      return Scalar(spec_, mod_reduce(-std::get<std::int64_t>(v_), spec_.prime()));
    case FieldKind::rat_fun: {
      const RatFun& a = std::get<RatFun>(v_);
      return Scalar(spec_, RatFun{-a.num, a.den});
    }
  }
  throw PreconditionError("unknown field kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  switch (spec_.kind()) {
    case FieldKind::rationals:
      return Scalar(spec_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    case FieldKind::prime_field:
      return Scalar(spec_, mod_mul(std::get<std::int64_t>(v_), std::get<std::int64_t>(o.v_),
                                   spec_.prime()));
    case FieldKind::rat_fun: {
      const RatFun& a = std::get<RatFun>(v_);
      const RatFun& b = std::get<RatFun>(o.v_);
      return fraction(spec_, a.num * b.num, a.den * b.den);
    }
  }
  throw PreconditionError("unknown field kind");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  switch (spec_.kind()) {
    case FieldKind::rationals: return Scalar(spec_, mpq_class(1 / std::get<mpq_class>(v_)));
    case FieldKind::prime_field:
      return Scalar(spec_, mod_inv(std::get<std::int64_t>(v_), spec_.prime()));
    case FieldKind::rat_fun: {
      const RatFun& a = std::get<RatFun>(v_);
      return fraction(spec_, a.den, a.num);
    }
  }
  throw PreconditionError("unknown field kind");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (spec_ != o.spec_) return false;
  return v_ == o.v_;
}

Scalar Scalar::automorphism(std::int64_t k) const {
  if (spec_.commutative() || k == 0) return *this;
  const IntMat m = spec_.automorphism().power(k);
  const int vars = spec_.vars();
  // Map each monomial x^v to x^{Mv}; negative image exponents are cleared by
  // a monomial denominator.
  auto map_poly = [&](const MPoly& p) -> std::pair<MPoly, Exponents> {
    std::vector<std::pair<IntVec, mpz_class>> mapped;
    IntVec mins(vars, 0);
    for (const auto& [e, c] : p.terms()) {
      IntVec img = m * IntVec(e.begin(), e.end());
      for (int i = 0; i < vars; ++i)
        if (img[i] < mins[i]) mins[i] = img[i];
      mapped.emplace_back(std::move(img), c);
    }
    MPoly out(vars);
    for (auto& [img, c] : mapped) {
      Exponents e(vars);
      for (int i = 0; i < vars; ++i) e[i] = img[i] - mins[i];
      out.add_term(e, c);
    }
    Exponents shift(vars);
    for (int i = 0; i < vars; ++i) shift[i] = -mins[i];
    return {out, shift};
  };
  const RatFun& a = std::get<RatFun>(v_);
  auto [pn, sn] = map_poly(a.num);
  auto [pd, sd] = map_poly(a.den);
  // (pn/x^sn)/(pd/x^sd) = pn*x^sd / (pd*x^sn)
  return fraction(spec_, pn * MPoly::monomial(vars, sd), pd * MPoly::monomial(vars, sn));
}

const mpq_class& Scalar::rational_value() const { return std::get<mpq_class>(v_); }
std::int64_t Scalar::residue_value() const { return std::get<std::int64_t>(v_); }
const Scalar::RatFun& Scalar::ratfun_value() const { return std::get<RatFun>(v_); }

std::string Scalar::to_string() const {
  switch (spec_.kind()) {
    case FieldKind::rationals: return std::get<mpq_class>(v_).get_str();
    case FieldKind::prime_field: return std::to_string(std::get<std::int64_t>(v_));
    case FieldKind::rat_fun: {
      const RatFun& a = std::get<RatFun>(v_);
      if (a.den.is_constant() && a.den.constant_value() == 1) return a.num.to_string();
      std::ostringstream os;
      const bool wrap = a.num.term_count() > 1;
      os << (wrap ? "(" : "") << a.num.to_string() << (wrap ? ")" : "") << "/";
      const bool wrapd = a.den.term_count() > 1;
      os << (wrapd ? "(" : "") << a.den.to_string() << (wrapd ? ")" : "");
      return os.str();
    }
  }
  return "?";
}

}  // namespace skewalex
