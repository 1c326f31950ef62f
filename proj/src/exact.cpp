#include "liesurf/exact.hpp"

#include <cmath>
#include <cstdlib>

#include "liesurf/types.hpp"

namespace liesurf {

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParameterError("empty rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (seen_slash || !digit_before) throw ParameterError("malformed rational: " + text);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParameterError("malformed rational: " + text);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw ParameterError("malformed rational: " + text);
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational r;
  if (r.set_str(body, 10) != 0) throw ParameterError("malformed rational: " + text);
  if (r.get_den() == 0) throw ParameterError("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::optional<Rational> rationalize(double x, double tol, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued fraction convergents.
  double frac = x;
  long h_prev = 1, h = static_cast<long>(std::floor(frac));
  long k_prev = 0, k = 1;
  double rem = frac - std::floor(frac);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(static_cast<double>(h) / static_cast<double>(k) - x) <= tol * std::max(1.0, std::abs(x))) {
      Rational r(h, k);
      r.canonicalize();
      return r;
    }
    if (rem < 1e-15) break;
    double inv = 1.0 / rem;
    long a = static_cast<long>(std::floor(inv));
    rem = inv - std::floor(inv);
    long h_next = a * h + h_prev;
    long k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  if (std::abs(static_cast<double>(h) / static_cast<double>(k) - x) <= tol * std::max(1.0, std::abs(x))) {
    Rational r(h, k);
    r.canonicalize();
    return r;
  }
  return std::nullopt;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RowEchelon rref(QMatrix rows) {
  RowEchelon out;
  if (rows.empty()) return out;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

int rank(const QMatrix& rows) { return static_cast<int>(rref(rows).rows.size()); }

std::vector<QVector> nullspace(const QMatrix& rows, int cols) {
  RowEchelon e = rref(rows);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const QMatrix& basis, const QVector& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  QMatrix ext = basis;
  ext.push_back(v);
  return rank(ext) == rank(basis);
}

std::vector<mpz_class> primitive_integer_vector(const QVector& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v) {
    mpz_class d = x.get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> out;
  out.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class num = x.get_num() * (lcm_den / x.get_den());
    out.push_back(num);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace liesurf
