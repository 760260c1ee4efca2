#include "oracle.hpp"

#include <stdexcept>

namespace oracle {

QPoly QPoly::constant(const mpq_class& c) { return t_power(0, c); }

QPoly QPoly::t_power(std::int64_t e, const mpq_class& c) {
  QPoly p;
  p.set(e, c);
  return p;
}

mpq_class QPoly::coeff(std::int64_t e) const {
  if (is_zero() || e < lo_ || e > hi()) return 0;
  return c_[static_cast<size_t>(e - lo_)];
}

void QPoly::set(std::int64_t e, const mpq_class& c) {
  if (c == 0 && is_zero()) return;
  if (is_zero()) {
    lo_ = e;
    c_ = {c};
  } else if (e < lo_) {
    std::vector<mpq_class> nc(static_cast<size_t>(hi() - e + 1), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) nc[static_cast<size_t>(lo_ - e) + i] = c_[i];
    nc[0] = c;
    lo_ = e;
    c_ = std::move(nc);
  } else if (e > hi()) {
    c_.resize(static_cast<size_t>(e - lo_ + 1), mpq_class(0));
    c_.back() = c;
  } else {
    c_[static_cast<size_t>(e - lo_)] = c;
  }
  trim();
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t drop = 0;
  while (drop < c_.size() && c_[drop] == 0) ++drop;
  if (drop > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(drop));
    lo_ += static_cast<std::int64_t>(drop);
  }
  if (c_.empty()) lo_ = 0;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  for (size_t i = 0; i < o.c_.size(); ++i) {
    const std::int64_t e = o.lo_ + static_cast<std::int64_t>(i);
    r.set(e, r.coeff(e) + o.c_[i]);
  }
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r;
  if (is_zero() || o.is_zero()) return r;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      const std::int64_t e = lo_ + static_cast<std::int64_t>(i) + o.lo_ + static_cast<std::int64_t>(j);
      r.set(e, r.coeff(e) + c_[i] * o.c_[j]);
    }
  }
  return r;
}

bool QPoly::operator==(const QPoly& o) const { return lo_ == o.lo_ && c_ == o.c_; }

QPoly QPoly::unit_normalized() const {
  if (is_zero()) return *this;
  QPoly r;
  const mpq_class lead = c_.front();
  for (size_t i = 0; i < c_.size(); ++i)
    r.set(static_cast<std::int64_t>(i), c_[i] / lead);
  return r;
}

QDiv qdivmod(const QPoly& f, const QPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("oracle division by zero");
  QPoly q, r = f;
  while (!r.is_zero() && r.span() >= g.span()) {
    const std::int64_t e = r.hi() - g.hi();
    const mpq_class c = r.coeff(r.hi()) / g.coeff(g.hi());
    QPoly term = QPoly::t_power(e, c);
    q = q + term;
    r = r - term * g;
  }
  return {q, r};
}

QPoly qgcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = qdivmod(a, b).r;
    a = std::move(b);
    b = std::move(r);
  }
  return a.unit_normalized();
}

QPoly qdet(const std::vector<std::vector<QPoly>>& m) {
  const size_t n = m.size();
  if (n == 0) return QPoly::constant(1);
  if (n == 1) return m[0][0];
  QPoly det;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<QPoly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<QPoly> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    const QPoly term = m[0][j] * qdet(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

QPoly fox_eval(const skewalex::Word& w, int gen, const std::vector<std::int64_t>& phi) {
  // d(l_1...l_k)/dx = sum over occurrences, prefix-weighted.
  QPoly out;
  std::int64_t prefix = 0;
  for (const skewalex::Letter& l : w.letters()) {
    if (l.gen == gen) {
      if (l.sign > 0) out = out + QPoly::t_power(prefix, 1);
      else out = out - QPoly::t_power(prefix - phi[l.gen], 1);
    }
    prefix += l.sign * phi[l.gen];
  }
  return out;
}

QPoly classical_alexander(const std::vector<skewalex::Word>& relators, int generators,
                          const std::vector<std::int64_t>& phi, int deleted_col) {
  std::vector<std::vector<QPoly>> m;
  for (const auto& r : relators) {
    std::vector<QPoly> row;
    for (int g = 0; g < generators; ++g) {
      if (g == deleted_col) continue;
      row.push_back(fox_eval(r, g, phi));
    }
    m.push_back(std::move(row));
  }
  return qdet(m);
}

std::int64_t smith_cokernel_dim(std::vector<std::vector<QPoly>> m, int rows, int cols) {
  std::int64_t dim = 0;
  int pivots = 0;
  int i = 0, j0 = 0;
  while (i < rows && j0 < cols) {
    // find a nonzero entry of minimal span
    int pi = -1, pj = -1;
    for (int r = i; r < rows; ++r)
      for (int c = j0; c < cols; ++c)
        if (!m[r][c].is_zero() && (pi < 0 || m[r][c].span() < m[pi][pj].span())) {
          pi = r;
          pj = c;
        }
    if (pi < 0) break;
    std::swap(m[i], m[pi]);
    for (int r = 0; r < rows; ++r) std::swap(m[r][j0], m[r][pj]);
    bool again = true;
    while (again) {
      again = false;
      for (int r = i + 1; r < rows; ++r) {
        if (m[r][j0].is_zero()) continue;
        const QDiv d = qdivmod(m[r][j0], m[i][j0]);
        for (int c = j0; c < cols; ++c) m[r][c] = m[r][c] - d.q * m[i][c];
        if (!m[r][j0].is_zero()) {
          std::swap(m[i], m[r]);
          again = true;
        }
      }
      for (int c = j0 + 1; c < cols; ++c) {
        if (m[i][c].is_zero()) continue;
        const QDiv d = qdivmod(m[i][c], m[i][j0]);
        for (int r = i; r < rows; ++r) m[r][c] = m[r][c] - m[r][j0] * d.q;
        if (!m[i][c].is_zero()) {
          for (int r = 0; r < rows; ++r) std::swap(m[r][j0], m[r][c]);
          again = true;
        }
      }
    }
    dim += m[i][j0].span();
    ++pivots;
    ++i;
    ++j0;
  }
  if (pivots < rows) return -1;  // free part remains
  return dim;
}

}  // namespace oracle
