#include "skewalex/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "skewalex/errors.hpp"

namespace skewalex {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::int64_t ta = 0, tb = 0;
  for (auto e : a) ta += e;
  for (auto e : b) tb += e;
  if (ta != tb) return ta < tb;
  return a < b;
}

MPoly MPoly::constant(int vars, const mpz_class& c) {
  MPoly p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

MPoly MPoly::monomial(int vars, const Exponents& e, const mpz_class& c) {
  MPoly p(vars);
  p.add_term(e, c);
  return p;
}

MPoly MPoly::variable(int vars, int index) {
  Exponents e(vars, 0);
  e[index] = 1;
  return monomial(vars, e);
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

mpz_class MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

void MPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, mpz_class(-c));
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, mpz_class(-c));
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(vars_);
      for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

bool MPoly::operator==(const MPoly& o) const { return terms_ == o.terms_; }

MPoly MPoly::multiplied_by(const mpz_class& c) const {
  MPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, mpz_class(k * c));
  return r;
}

const Exponents& MPoly::leading_exponents() const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const mpz_class& MPoly::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

std::int64_t MPoly::degree_in(int v) const {
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_)
    if (e[v] > d) d = e[v];
  return d;
}

std::int64_t MPoly::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t t = 0;
    for (auto x : e) t += x;
    if (t > d) d = t;
  }
  return d;
}

MPoly MPoly::coefficient_of(int v, std::int64_t k) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (e[v] == k) {
      Exponents e2 = e;
      e2[v] = 0;
      r.add_term(e2, c);
    }
  return r;
}

mpz_class MPoly::content_z() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

// x_v-degree aware helpers for the primitive PRS below.

// Content of p viewed as a polynomial in x_v with coefficients in the other
// variables.
MPoly content_in(const MPoly& p, int v) {
  MPoly g(p.vars());
  for (std::int64_t k = 0; k <= p.degree_in(v); ++k) {
    MPoly c = p.coefficient_of(v, k);
    if (!c.is_zero()) g = mpoly_gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

MPoly shift_in(const MPoly& p, int v, std::int64_t k) {
  MPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponents e2 = e;
    e2[v] += k;
    r.add_term(e2, c);
  }
  return r;
}

// Pseudo-remainder of f by g in the variable v: lc_v(g)^(df-dg+1) f = q g + r.
MPoly pseudo_rem(MPoly f, const MPoly& g, int v) {
  const std::int64_t dg = g.degree_in(v);
  const MPoly lcg = g.coefficient_of(v, dg);
  std::int64_t df = f.degree_in(v);
  while (!f.is_zero() && (df = f.degree_in(v)) >= dg) {
    const MPoly lcf = f.coefficient_of(v, df);
    if (lcf.is_zero()) break;
    f = f * lcg - shift_in(lcf * g, v, df - dg);
    if (!f.is_zero() && f.degree_in(v) >= df && !f.coefficient_of(v, df).is_zero())
      throw InternalInvariantError("pseudo-division failed to reduce degree");
  }
  return f;
}

MPoly normalize_sign(MPoly p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

int pick_main_var(const MPoly& a, const MPoly& b) {
  for (int v = a.vars() - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

}  // namespace

namespace {

// gcd when at least one side is a single term: min exponents, integer content.
MPoly monomial_gcd(const MPoly& mono, const MPoly& other) {
  Exponents e = mono.leading_exponents();
  for (const auto& [oe, oc] : other.terms())
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], oe[i]);
  mpz_class c = mono.content_z();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), other.content_z().get_mpz_t());
  return MPoly::monomial(mono.vars(), e, c);
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  if (a.term_count() == 1) return monomial_gcd(a, b);
  if (b.term_count() == 1) return monomial_gcd(b, a);
  if (a == b) return normalize_sign(a);
  const int v = pick_main_var(a, b);
  if (v < 0) {
    // Both are integer constants.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.constant_value().get_mpz_t(), b.constant_value().get_mpz_t());
    return MPoly::constant(a.vars(), g);
  }
  const MPoly ca = content_in(a, v);
  const MPoly cb = content_in(b, v);
  const MPoly c = mpoly_gcd(ca, cb);
  MPoly f = mpoly_div_exact(a, ca);
  MPoly g = mpoly_div_exact(b, cb);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  // Primitive polynomial remainder sequence.
  while (true) {
    MPoly r = pseudo_rem(f, g, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      g = MPoly::constant(a.vars(), 1);
      break;
    }
    f = g;
    g = mpoly_div_exact(r, content_in(r, v));
  }
  return normalize_sign(c * g);
}

MPoly mpoly_div_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  MPoly rem = a;
  MPoly q(a.vars());
  const Exponents& lb = b.leading_exponents();
  const mpz_class& cb = b.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponents& la = rem.leading_exponents();
    Exponents e(a.vars());
    bool ok = true;
    for (int i = 0; i < a.vars(); ++i) {
      e[i] = la[i] - lb[i];
      if (e[i] < 0) ok = false;
    }
    mpz_class cq, crem;
    mpz_fdiv_qr(cq.get_mpz_t(), crem.get_mpz_t(), rem.leading_coefficient().get_mpz_t(),
                cb.get_mpz_t());
    if (!ok || crem != 0) throw PreconditionError("inexact polynomial division");
    const MPoly t = MPoly::monomial(a.vars(), e, cq);
    q = q + t;
    rem = rem - t * b;
  }
  return q;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    mpz_class ac = abs(c);
    bool printed = false;
    bool has_vars = false;
    for (auto x : e)
      if (x != 0) has_vars = true;
    if (ac != 1 || !has_vars) {
      os << ac.get_str();
      printed = true;
    }
    for (int i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      if (static_cast<size_t>(i) < names.size()) os << names[i];
      else os << "x" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace skewalex
