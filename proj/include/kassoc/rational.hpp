#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kassoc {

using Rational = mpq_class;
using Integer = mpz_class;

// Precondition or input error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A check that should never fail on valid input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Accepts "p", "p/q", "-p/q" and finite decimals like "2.5".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

}  // namespace kassoc
