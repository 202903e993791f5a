#ifndef POLYFAN_RATIONAL_HPP
#define POLYFAN_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace polyfan {

// Exact rational scalar (GMP-backed).  All polytope geometry is carried out
// over this type; floating point enters only in the analytic layer.
using Rat = boost::multiprecision::mpq_rational;

using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/** Canonical "p/q" rendering (denominator always printed, e.g. "4/1"). */
std::string rational_to_string(const Rat& r);

/**
 * Parse a rational from "p/q", an integer string "p", or a plain decimal
 * such as "-0.25" (decimals are exact rationals and are parsed as such).
 * Throws std::invalid_argument on malformed input or a zero denominator.
 */
Rat parse_rational(const std::string& text);

/** Nearest double (GMP conversion, correctly rounded). */
double rational_to_double(const Rat& r);

RatVector rational_vector(std::initializer_list<Rat> entries);

/** Componentwise nearest-double image of an exact vector. */
Eigen::VectorXd to_double_vector(const RatVector& v);

}  // namespace polyfan

#endif
