#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skewalex {

/// Exponent vector of a monomial; one entry per variable, all >= 0.
using Exponents = std::vector<std::int64_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// x_1 heaviest.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Z with arbitrary-precision
/// coefficients. The term map never stores zero coefficients.
class MPoly {
public:
  MPoly() = default;
  explicit MPoly(int vars) : vars_(vars) {}
  static MPoly constant(int vars, const mpz_class& c);
  static MPoly monomial(int vars, const Exponents& e, const mpz_class& c = 1);
  static MPoly variable(int vars, int index);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpz_class constant_value() const;  // requires is_constant()
  size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, mpz_class, GrlexLess>& terms() const { return terms_; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly multiplied_by(const mpz_class& c) const;

  /// Leading term under grlex.
  const Exponents& leading_exponents() const;
  const mpz_class& leading_coefficient() const;

  /// Highest power of variable v occurring (0 for polynomials without v).
  std::int64_t degree_in(int v) const;
  std::int64_t total_degree() const;

  /// Coefficient of x_v^k, a polynomial in the remaining variables (the
  /// entry for v in its exponent vectors is zero).
  MPoly coefficient_of(int v, std::int64_t k) const;

  /// gcd of all integer coefficients, positive; 0 for the zero polynomial.
  mpz_class content_z() const;

  void add_term(const Exponents& e, const mpz_class& c);

  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  int vars_ = 0;
  std::map<Exponents, mpz_class, GrlexLess> terms_;
};

/// Full polynomial gcd over Z[x_1..x_m] (integer content included), with
/// grlex-leading coefficient normalized positive. gcd(0,0) = 0.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

/// Exact quotient a/b; throws if b does not divide a.
MPoly mpoly_div_exact(const MPoly& a, const MPoly& b);

}  // namespace skewalex
