#pragma once

// Exact scalar types used throughout the library, and the Eigen aliases built
// on top of them.

#include <Eigen/Core>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

// Boost 1.74 probes every constructor argument for a byte-container
// interface; Eigen expressions expose begin()/end() and trip that probe.
namespace og6::detail {
template <class D>
std::true_type eigen_probe(const Eigen::EigenBase<D>*);
std::false_type eigen_probe(...);
template <class C>
concept EigenType = decltype(eigen_probe(static_cast<const C*>(nullptr)))::value;
}  // namespace og6::detail

namespace boost::multiprecision::detail {
template <class C>
  requires og6::detail::EigenType<C>
struct is_byte_container<C> : std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace og6 {

using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Raised when an input violates a structural precondition (odd diagonal,
/// degenerate form, dimension mismatch, ...).
class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a question is outside the brute-force regime (finite groups
/// above the enumeration cutoff). Callers report "undecided", never a guess.
class BruteForceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Least nonnegative residue.
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Reduces a rational into [0, m) for a positive integer modulus m.
inline Rational mod(const Rational& x, const Integer& m) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  return Rational(mod(num, m * den), den);
}

inline std::int64_t to_i64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw LatticeError("integer does not fit in 64 bits: " + x.str());
  }
  return static_cast<std::int64_t>(x);
}

std::string to_string(const Rational& x);

}  // namespace og6
