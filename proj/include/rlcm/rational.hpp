#ifndef RLCM_RATIONAL_HPP_
#define RLCM_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace rlcm {

// Arbitrary-precision rational, always in lowest terms. Expression
// templates are off so the type composes cleanly with Eigen.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar>;

using RationalMatrix = DenseMatrix<Rational>;

// Accepts "p", "-p" and "p/q" with q > 0. Throws ParseError (line 0).
Rational parse_rational(std::string_view text);

// Always "p/q" in lowest terms, e.g. "0/1", "-3/2".
std::string format_rational(const Rational& r);

}  // namespace rlcm

#endif  // RLCM_RATIONAL_HPP_
