#include "schlicht/functionals.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace schlicht {

namespace {

void require_order(const NormalizedSeries& f, int minimum) {
  if (f.order() < minimum) {
    throw Error(ErrorKind::OrderTooLow, "functional needs order >= " + std::to_string(minimum));
  }
}

using Matrix = std::vector<std::vector<complex>>;

complex cofactor_det(const Matrix& m) {
  const std::size_t q = m.size();
  if (q == 1) return m[0][0];
  if (q == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  complex det{};
  for (std::size_t col = 0; col < q; ++col) {
    Matrix minor;
    minor.reserve(q - 1);
    for (std::size_t i = 1; i < q; ++i) {
      std::vector<complex> row;
      row.reserve(q - 1);
      for (std::size_t j = 0; j < q; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const complex term = m[0][col] * cofactor_det(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

complex lu_det(Matrix m) {
  const std::size_t q = m.size();
  complex det{1.0};
  for (std::size_t c = 0; c < q; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < q; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    }
    if (m[pivot][c] == complex{}) return complex{};
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < q; ++r) {
      const complex factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < q; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

}  // namespace

double fekete_szego_bound(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::InvalidParameter, "alpha must lie in [0, 1]");
  if (alpha == 1.0) return 1.0;
  return 1.0 + 2.0 * std::exp(-2.0 * alpha / (1.0 - alpha));
}

FunctionalReport fekete_szego(const NormalizedSeries& f, double alpha) {
  require_order(f, 3);
  FunctionalReport rep;
  rep.name = "fekete_szego";
  rep.bound = fekete_szego_bound(alpha);
  rep.value = std::abs(f[3] - alpha * f[2] * f[2]);
  rep.margin = *rep.bound - rep.value;
  return rep;
}

complex odd_c5(const NormalizedSeries& f) {
  require_order(f, 3);
  return (f[3] - f[2] * f[2] / 4.0) / 2.0;
}

double odd_c5_bound() { return 0.5 + std::exp(-2.0 / 3.0); }

complex hankel(const NormalizedSeries& f, int q, int n) {
  if (q < 1 || n < 1) throw Error(ErrorKind::InvalidParameter, "Hankel determinant needs q >= 1 and n >= 1");
  require_order(f, n + 2 * (q - 1));
  Matrix m(q, std::vector<complex>(q));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) m[i][j] = f[n + i + j];
  }
  return q <= 4 ? cofactor_det(m) : lu_det(std::move(m));
}

FunctionalReport bieberbach_check(const NormalizedSeries& f) {
  require_order(f, 2);
  FunctionalReport rep;
  rep.name = "bieberbach";
  for (int k = 2; k <= f.order(); ++k) {
    const double margin = k - std::abs(f[k]);
    rep.per_index.push_back(margin);
    if (!rep.margin || margin < *rep.margin) {
      rep.margin = margin;
      rep.bound = static_cast<double>(k);
      rep.value = std::abs(f[k]);
    }
  }
  return rep;
}

FunctionalReport covering_check(const NormalizedSeries& f, complex xi) {
  if (xi == complex{}) throw Error(ErrorKind::InvalidParameter, "xi must be nonzero");
  require_order(f, 2);
  FunctionalReport rep;
  rep.name = "covering";
  rep.value = std::abs(f[2] + 1.0 / xi);
  rep.bound = 2.0;
  rep.margin = 2.0 - rep.value;
  return rep;
}

}  // namespace schlicht
