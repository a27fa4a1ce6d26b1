#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace r3 {

// square matrix over the prime field GF(p), row-major
struct MatrixModP {
  unsigned p = 2, d = 0;
  std::vector<uint32_t> e;

  MatrixModP() = default;

  MatrixModP(unsigned p, unsigned d) : p(p), d(d), e(d * d, 0) {}

  static MatrixModP identity(unsigned p, unsigned d)
  {
    MatrixModP m(p, d);
    for (unsigned i = 0; i < d; ++i)
      m.at(i, i) = 1;
    return m;
  }

  uint32_t& at(unsigned i, unsigned j) { return e[i * d + j]; }
  uint32_t at(unsigned i, unsigned j) const { return e[i * d + j]; }

  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const MatrixModP& o) const = default;
  bool operator<(const MatrixModP& o) const { return e < o.e; }
};

MatrixModP operator*(const MatrixModP& a, const MatrixModP& b);
MatrixModP operator+(const MatrixModP& a, const MatrixModP& b);
MatrixModP operator-(const MatrixModP& a, const MatrixModP& b);
MatrixModP scaled(const MatrixModP& a, uint32_t k);
MatrixModP mat_pow(MatrixModP a, uint64_t e);
std::optional<MatrixModP> mat_inverse(const MatrixModP& a);

std::vector<uint32_t> row_vec_mul(const std::vector<uint32_t>& v,
                                  const MatrixModP& a);

uint32_t inv_mod(uint32_t x, unsigned p);

// basis of {v : Av = 0} for a rows x cols system over GF(p)
std::vector<std::vector<uint32_t>>
nullspace(unsigned p, unsigned cols, std::vector<std::vector<uint32_t>> rows);

unsigned matrix_rank(unsigned p, std::vector<std::vector<uint32_t>> rows);

} // namespace r3
