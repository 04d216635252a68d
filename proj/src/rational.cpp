#include "doublelift/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <stdexcept>
#include <utility>

namespace dlift {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
  return out;
}

RationalMatrix kronecker_power(const RationalMatrix& a, std::size_t m) {
  RationalMatrix out = RationalMatrix::identity(1);
  for (std::size_t k = 0; k < m; ++k) out = kronecker(out, a);
  return out;
}

std::size_t rank(const RationalMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < cols; ++c)
      lcm = boost::integer::lcm(lcm, Integer(boost::multiprecision::denominator(a.at(r, c))));
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational scaled = a.at(r, c) * Rational(lcm);
      m[r][c] = boost::multiprecision::numerator(scaled);
    }
  }
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k)
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / previous;
      m[r][c] = 0;
    }
    previous = m[rank][c];
    ++rank;
  }
  return rank;
}

std::string to_string(const RationalMatrix& a) {
  std::string out = "[";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) out += ' ';
      out += a.at(r, c).str();
    }
  }
  return out + "]";
}

}  // namespace dlift
