#ifndef JV_EIGEN_SUPPORT_HPP
#define JV_EIGEN_SUPPORT_HPP

#include <Eigen/Core>
#include <span>

#include "jv/polynomial.hpp"
#include "jv/rational.hpp"
#include "jv/rational_function.hpp"

namespace jv::detail {

template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static T epsilon() { return T(0); }
  static T dummy_precision() { return T(0); }
  static int digits10() { return 0; }
};

}  // namespace jv::detail

namespace Eigen {
template <>
struct NumTraits<jv::Rat> : jv::detail::ExactNumTraits<jv::Rat> {};
template <>
struct NumTraits<jv::Poly> : jv::detail::ExactNumTraits<jv::Poly> {};
template <>
struct NumTraits<jv::RatFunc> : jv::detail::ExactNumTraits<jv::RatFunc> {};
}  // namespace Eigen

namespace jv {

/// Dense exact matrices and vectors over any of the coefficient types.
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const Poly& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

/// Entrywise evaluation of a polynomial matrix at a full point.
inline Matrix<Rat> evaluate(const Matrix<Poly>& m, std::span<const Rat> point) {
  return m.unaryExpr([&](const Poly& p) { return p.eval(point); });
}

/// Entrywise substitution L(var) -> value.
template <class Scalar>
Matrix<Scalar> substitute(const Matrix<Scalar>& m, std::size_t var, const Poly& value) {
  return m.unaryExpr([&](const Scalar& x) { return x.substitute(var, value); });
}

}  // namespace jv

#endif  // JV_EIGEN_SUPPORT_HPP
