#include "r3/matrix.hpp"

#include <cassert>

namespace r3 {

bool MatrixModP::is_zero() const
{
  for (uint32_t x : e)
    if (x != 0)
      return false;
  return true;
}

bool MatrixModP::is_identity() const
{
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j)
      if (at(i, j) != (i == j ? 1u : 0u))
        return false;
  return true;
}

MatrixModP operator*(const MatrixModP& a, const MatrixModP& b)
{
  assert(a.p == b.p && a.d == b.d);
  MatrixModP c(a.p, a.d);
  for (unsigned i = 0; i < a.d; ++i)
    for (unsigned j = 0; j < a.d; ++j) {
      uint64_t acc = 0;
      for (unsigned k = 0; k < a.d; ++k)
        acc += static_cast<uint64_t>(a.at(i, k)) * b.at(k, j);
      c.at(i, j) = static_cast<uint32_t>(acc % a.p);
    }
  return c;
}

MatrixModP operator+(const MatrixModP& a, const MatrixModP& b)
{
  assert(a.p == b.p && a.d == b.d);
  MatrixModP c(a.p, a.d);
  for (size_t i = 0; i < a.e.size(); ++i)
    c.e[i] = (a.e[i] + b.e[i]) % a.p;
  return c;
}

MatrixModP operator-(const MatrixModP& a, const MatrixModP& b)
{
  assert(a.p == b.p && a.d == b.d);
  MatrixModP c(a.p, a.d);
  for (size_t i = 0; i < a.e.size(); ++i)
    c.e[i] = (a.e[i] + a.p - b.e[i]) % a.p;
  return c;
}

MatrixModP scaled(const MatrixModP& a, uint32_t k)
{
  MatrixModP c(a.p, a.d);
  for (size_t i = 0; i < a.e.size(); ++i)
    c.e[i] = static_cast<uint32_t>(static_cast<uint64_t>(a.e[i]) * k % a.p);
  return c;
}

MatrixModP mat_pow(MatrixModP a, uint64_t e)
{
  MatrixModP r = MatrixModP::identity(a.p, a.d);
  while (e > 0) {
    if (e & 1)
      r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

uint32_t inv_mod(uint32_t x, unsigned p)
{
  assert(x % p != 0);
  int64_t a = x % p, b = p, u = 1, v = 0;
  while (b != 0) {
    int64_t t = a / b;
    a -= t * b;
    std::swap(a, b);
    u -= t * v;
    std::swap(u, v);
  }
  assert(a == 1);
  return static_cast<uint32_t>((u % p + p) % p);
}

std::optional<MatrixModP> mat_inverse(const MatrixModP& a)
{
  unsigned p = a.p, d = a.d;
  std::vector<std::vector<uint32_t>> aug(d, std::vector<uint32_t>(2 * d, 0));
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j)
      aug[i][j] = a.at(i, j);
    aug[i][d + i] = 1;
  }

  for (unsigned col = 0; col < d; ++col) {
    unsigned piv = d;
    for (unsigned r = col; r < d; ++r)
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == d)
      return std::nullopt;
    std::swap(aug[col], aug[piv]);
    uint32_t inv = inv_mod(aug[col][col], p);
    for (unsigned j = 0; j < 2 * d; ++j)
      aug[col][j] = static_cast<uint32_t>(static_cast<uint64_t>(aug[col][j]) *
                                          inv % p);
    for (unsigned r = 0; r < d; ++r) {
      if (r == col || aug[r][col] == 0)
        continue;
      uint64_t f = aug[r][col];
      for (unsigned j = 0; j < 2 * d; ++j)
        aug[r][j] = static_cast<uint32_t>(
            (aug[r][j] + (p - 1) * f % p * aug[col][j]) % p);
    }
  }

  MatrixModP res(p, d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j)
      res.at(i, j) = aug[i][d + j];
  return res;
}

std::vector<uint32_t> row_vec_mul(const std::vector<uint32_t>& v,
                                  const MatrixModP& a)
{
  assert(v.size() == a.d);
  std::vector<uint32_t> r(a.d, 0);
  for (unsigned j = 0; j < a.d; ++j) {
    uint64_t acc = 0;
    for (unsigned i = 0; i < a.d; ++i)
      acc += static_cast<uint64_t>(v[i]) * a.at(i, j);
    r[j] = static_cast<uint32_t>(acc % a.p);
  }
  return r;
}

namespace {

// reduce in place; returns pivot column per row
std::vector<unsigned> row_reduce(unsigned p,
                                 std::vector<std::vector<uint32_t>>& rows,
                                 unsigned cols)
{
  std::vector<unsigned> pivots;
  unsigned rank = 0;
  for (unsigned col = 0; col < cols && rank < rows.size(); ++col) {
    unsigned piv = static_cast<unsigned>(rows.size());
    for (unsigned r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == rows.size())
      continue;
    std::swap(rows[rank], rows[piv]);
    uint32_t inv = inv_mod(rows[rank][col], p);
    for (unsigned j = 0; j < cols; ++j)
      rows[rank][j] = static_cast<uint32_t>(
          static_cast<uint64_t>(rows[rank][j]) * inv % p);
    for (unsigned r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0)
        continue;
      uint64_t f = rows[r][col];
      for (unsigned j = 0; j < cols; ++j)
        rows[r][j] = static_cast<uint32_t>(
            (rows[r][j] + (p - 1) * f % p * rows[rank][j]) % p);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

} // namespace

std::vector<std::vector<uint32_t>>
nullspace(unsigned p, unsigned cols, std::vector<std::vector<uint32_t>> rows)
{
  std::vector<unsigned> pivots = row_reduce(p, rows, cols);

  std::vector<char> is_pivot(cols, 0);
  for (unsigned c : pivots)
    is_pivot[c] = 1;

  std::vector<std::vector<uint32_t>> basis;
  for (unsigned f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<uint32_t> v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (p - rows[r][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

unsigned matrix_rank(unsigned p, std::vector<std::vector<uint32_t>> rows)
{
  if (rows.empty())
    return 0;
  return static_cast<unsigned>(
      row_reduce(p, rows, static_cast<unsigned>(rows[0].size())).size());
}

} // namespace r3
