#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace hyperdrift {

/// Exact ratio of 64-bit integers; drift and Cheeger quantities stay exact
/// until they are printed.
using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& r) noexcept;
/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

}  // namespace hyperdrift
