#include "metasum/lattice.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "metasum/errors.hpp"

namespace metasum {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<i64>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<i64>>& rows, std::size_t cols) {
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

std::vector<i64> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, i64 factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) = checked_add((*this)(dst, j), checked_mul(factor, (*this)(src, j)));
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, i64 factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) = checked_add((*this)(i, dst), checked_mul(factor, (*this)(i, src)));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = checked_sub(0, (*this)(i, j));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  // Dot products are accumulated in 128 bits so that large transformation
  // matrices whose product is small (U A V = D) can still be multiplied;
  // only a result entry outside the 64-bit range is an overflow.
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const __int128 term = static_cast<__int128>(a(i, k)) * b(k, j);
        if (__builtin_add_overflow(acc, term, &acc)) throw OverflowDetected("matrix product overflow");
      }
      if (acc > INT64_MAX || acc < INT64_MIN) throw OverflowDetected("matrix product entry exceeds 64 bits");
      out(i, j) = static_cast<i64>(acc);
    }
  return out;
}

std::vector<i64> SmithForm::diagonal() const {
  std::vector<i64> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

i64 abs_value(i64 x) { return x < 0 ? checked_sub(0, x) : x; }

// Quotient of a by b rounded to the nearest integer, so remainders lie in
// [-|b|/2, |b|/2].
i64 nearest_quotient(i64 a, i64 b) {
  i64 q = a / b;
  const i64 r = a - q * b;
  if (2 * abs_value(r) > abs_value(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

/**
 * Row Hermite reduction of d, mirroring every row operation on u. In each
 * column the pivot is the entry of least absolute value among the remaining
 * rows; the other rows are reduced against it until it is the only nonzero
 * entry, and entries above the pivot are then reduced modulo it. Reducing
 * above the pivots is what keeps the transformation entries small.
 */
void row_hermite(IntMatrix& d, IntMatrix& u) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < d.cols() && row < d.rows(); ++c) {
    for (;;) {
      std::size_t pivot = d.rows();
      i64 best = 0;
      for (std::size_t i = row; i < d.rows(); ++i) {
        const i64 v = abs_value(d(i, c));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pivot = i;
        }
      }
      if (pivot == d.rows()) break;
      d.swap_rows(row, pivot);
      u.swap_rows(row, pivot);
      bool clean = true;
      for (std::size_t i = row + 1; i < d.rows(); ++i) {
        if (d(i, c) == 0) continue;
        const i64 q = nearest_quotient(d(i, c), d(row, c));
        d.add_row(i, row, -q);
        u.add_row(i, row, -q);
        if (d(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (d(row, c) == 0) continue;
    if (d(row, c) < 0) {
      d.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      const i64 q = nearest_quotient(d(i, c), d(row, c));
      d.add_row(i, row, -q);
      u.add_row(i, row, -q);
    }
    ++row;
  }
}

bool is_diagonal_pattern(const IntMatrix& d) {
  // At most one nonzero entry in every row and every column.
  std::vector<int> in_col(d.cols(), 0);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    int in_row = 0;
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (d(i, j) != 0) {
        ++in_row;
        ++in_col[j];
      }
    if (in_row > 1) return false;
  }
  return std::all_of(in_col.begin(), in_col.end(), [](int c) { return c <= 1; });
}

// diag(a, b) at positions i < j becomes diag(gcd, lcm):
//   [x y; -b/g a/g] * [a 0; b b] * [1 -y b/g; 0 1] = [g 0; 0 ab/g].
void gcd_lcm_step(SmithForm& f, std::size_t i, std::size_t j) {
  IntMatrix& d = f.D;
  const i64 a = d(i, i), b = d(j, j);
  const Bezout bz = extended_gcd(a, b);
  f.V.add_col(i, j, 1);
  d.add_col(i, j, 1);
  const i64 x = bz.x, y = bz.y, ag = a / bz.g, bg = b / bz.g;
  for (IntMatrix* m : {&d, &f.U}) {
    for (std::size_t c = 0; c < m->cols(); ++c) {
      const i64 ri = (*m)(i, c), rj = (*m)(j, c);
      (*m)(i, c) = checked_add(checked_mul(x, ri), checked_mul(y, rj));
      (*m)(j, c) = checked_add(checked_mul(-bg, ri), checked_mul(ag, rj));
    }
  }
  const i64 q = d(i, j) / d(i, i);
  d.add_col(j, i, -q);
  f.V.add_col(j, i, -q);
}

// D = U A V is preserved by the paired moves
//   V.col_i += c (d_i/g) V.col_j,  U.row_j -= c (d_j/g) U.row_i
//   U.row_i += c (d_i/g) U.row_j,  V.col_j -= c (d_j/g) V.col_i
// with g = gcd(d_i, d_j); when d_j = 0 the compensating move vanishes.
// Greedy pairwise size reduction over these moves keeps U and V small.
void reduce_transforms(SmithForm& f) {
  IntMatrix& u = f.U;
  IntMatrix& v = f.V;
  // Small transforms (the common case for relation matrices) are left alone.
  constexpr i64 kSmall = i64{1} << 20;
  auto small = [&](const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) > kSmall || m(i, j) < -kSmall) return false;
    return true;
  };
  if (small(u) && small(v)) return;
  const std::size_t rows = u.rows(), cols = v.cols();
  const std::size_t n = std::min(rows, cols);
  auto diag = [&](std::size_t k) { return k < n ? f.D(k, k) : i64{0}; };

  using Real = long double;
  auto vdot = [&](std::size_t a, std::size_t b) {
    Real s = 0;
    for (std::size_t k = 0; k < v.rows(); ++k) s += static_cast<Real>(v(k, a)) * static_cast<Real>(v(k, b));
    return s;
  };
  auto udot = [&](std::size_t a, std::size_t b) {
    Real s = 0;
    for (std::size_t k = 0; k < u.cols(); ++k) s += static_cast<Real>(u(a, k)) * static_cast<Real>(u(b, k));
    return s;
  };
  // Scale factors (own, compensating) for a move from j onto i; false if none exists.
  auto scales = [&](std::size_t i, std::size_t j, i64& own, i64& comp) {
    const i64 di = diag(i), dj = diag(j);
    if (dj == 0) {
      own = 1;
      comp = 0;
      return true;
    }
    if (di == 0) return false;
    const i64 g = gcd(di, dj);
    own = di / g;
    comp = dj / g;
    return true;
  };
  // Best integer multiple for  |x + c a y|^2 + |p - c b q|^2.
  auto best_c = [](Real xy, Real yy, Real pq, Real qq, i64 a, i64 b, Real& gain) {
    const Real lin = static_cast<Real>(a) * xy - static_cast<Real>(b) * pq;
    const Real quad = static_cast<Real>(a) * a * yy + static_cast<Real>(b) * b * qq;
    if (quad == 0) return i64{0};
    const Real c = std::nearbyint(-lin / quad);
    gain = -(2 * c * lin + c * c * quad);
    if (!(c >= -9e15L && c <= 9e15L)) return i64{0};
    return static_cast<i64>(c);
  };

  for (int sweep = 0; sweep < 200; ++sweep) {
    bool changed = false;
    // V-side moves.
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        i64 own, comp;
        if (i == j || !scales(i, j, own, comp)) continue;
        if (comp != 0 && (i >= rows || j >= rows)) continue;
        Real gain = 0;
        const i64 c = best_c(vdot(i, j), vdot(j, j), comp ? udot(j, i) : 0, comp ? udot(i, i) : 0, own, comp, gain);
        if (c == 0 || gain <= 0) continue;
        v.add_col(i, j, checked_mul(c, own));
        if (comp) u.add_row(j, i, checked_sub(0, checked_mul(c, comp)));
        changed = true;
      }
    // U-side moves.
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < rows; ++j) {
        i64 own, comp;
        if (i == j || !scales(i, j, own, comp)) continue;
        if (comp != 0 && (i >= cols || j >= cols)) continue;
        Real gain = 0;
        const i64 c = best_c(udot(i, j), udot(j, j), comp ? vdot(j, i) : 0, comp ? vdot(i, i) : 0, own, comp, gain);
        if (c == 0 || gain <= 0) continue;
        u.add_row(i, j, checked_mul(c, own));
        if (comp) v.add_col(j, i, checked_sub(0, checked_mul(c, comp)));
        changed = true;
      }
    if (!changed) break;
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& d = f.D;

  // Alternate row and column Hermite reductions until at most one nonzero
  // entry is left in every row and column. Each round strictly decreases the
  // leading pivots, so the loop terminates.
  for (bool rows_turn = true; !is_diagonal_pattern(d); rows_turn = !rows_turn) {
    if (rows_turn) {
      row_hermite(d, f.U);
    } else {
      IntMatrix dt = transpose(d), vt = transpose(f.V);
      row_hermite(dt, vt);
      d = transpose(dt);
      f.V = transpose(vt);
    }
  }

  // Move the nonzero entries onto the diagonal, zeros last.
  std::size_t next = 0;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    std::size_t col = d.cols();
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (d(i, j) != 0) col = j;
    if (col == d.cols()) continue;
    d.swap_rows(next, i);
    f.U.swap_rows(next, i);
    d.swap_cols(next, col);
    f.V.swap_cols(next, col);
    if (d(next, next) < 0) {
      d.negate_row(next);
      f.U.negate_row(next);
    }
    ++next;
  }

  // Divisibility chain.
  for (std::size_t i = 0; i < next; ++i)
    for (std::size_t j = i + 1; j < next; ++j)
      if (d(j, j) % d(i, i) != 0) gcd_lcm_step(f, i, j);
  reduce_transforms(f);
  return f;
}

std::optional<i64> AbelianStructure::order() const {
  if (free_rank != 0) return std::nullopt;
  i64 n = 1;
  for (i64 d : invariant_factors) n = checked_mul(n, d);
  return n;
}

std::string AbelianStructure::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < free_rank; ++i) {
    os << (first ? "" : " x ") << "Z";
    first = false;
  }
  for (i64 d : invariant_factors) {
    os << (first ? "" : " x ") << "Z/" << d;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

AbelianQuotient::AbelianQuotient(const IntMatrix& relations) {
  const SmithForm f = smith_normal_form(relations);
  const std::size_t n = relations.cols();
  moduli_.assign(n, 0);
  const auto diag = f.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) moduli_[i] = diag[i];
  change_of_basis_ = f.V;
  for (i64 d : moduli_) {
    if (d == 0)
      ++structure_.free_rank;
    else if (d != 1)
      structure_.invariant_factors.push_back(d);
  }
}

std::vector<i64> AbelianQuotient::coordinates(const std::vector<i64>& exponents) const {
  const std::size_t n = moduli_.size();
  if (exponents.size() != n) throw std::invalid_argument("coordinates: wrong vector length");
  // Row space of A maps onto that of D under x -> x V.
  std::vector<i64> out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    i64 acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc = checked_add(acc, checked_mul(exponents[i], change_of_basis_(i, j)));
    out[j] = moduli_[j] == 0 ? acc : mod(acc, moduli_[j]);
  }
  return out;
}

std::optional<i64> AbelianQuotient::order_of(const std::vector<i64>& exponents) const {
  const auto c = coordinates(exponents);
  i64 order = 1;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (moduli_[j] == 0) {
      if (c[j] != 0) return std::nullopt;
      continue;
    }
    const i64 component = moduli_[j] / gcd(c[j], moduli_[j]);
    order = checked_mul(order / gcd(order, component), component);
  }
  return order;
}

bool AbelianQuotient::generated_by(const std::vector<std::vector<i64>>& exponent_vectors) const {
  const std::size_t n = moduli_.size();
  std::vector<std::vector<i64>> rows;
  for (const auto& v : exponent_vectors) rows.push_back(coordinates(v));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<i64> r(n, 0);
    r[j] = moduli_[j];
    rows.push_back(std::move(r));
  }
  const AbelianStructure rest = abelian_quotient(IntMatrix::from_rows(rows, n));
  return rest.free_rank == 0 && rest.invariant_factors.empty();
}

AbelianStructure abelian_quotient(const IntMatrix& relations) {
  return AbelianQuotient(relations).structure();
}

std::vector<i64> coordinates_in_quotient(const IntMatrix& relations, const std::vector<i64>& exponents) {
  return AbelianQuotient(relations).coordinates(exponents);
}

}  // namespace metasum
