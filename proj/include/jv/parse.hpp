#ifndef JV_PARSE_HPP
#define JV_PARSE_HPP

#include <string_view>

#include "jv/algebra.hpp"
#include "jv/pbw.hpp"
#include "jv/polynomial.hpp"
#include "jv/verma.hpp"

namespace jv {

// Text grammar shared by the CLI and the JSON interfaces. All functions throw
// ParseError with a message naming the offending token.
//
// Generators: a+[i] a-[i] K+[i,j] K-[i,j] K0[i,j]; single-digit shorthand
// a+1, K+12, K012; hi for K0[i,i] and b+i / b-i for K+[i,i] / K-[i,i];
// for n = 2 also c+ = K+[1,2], c- = K-[1,2], d+ = K0[1,2], d- = K0[2,1].
//
// Expressions: sums of products of rationals, variables L1..Ln, generators,
// v0 (the unit) and parenthesized groups. Products are written with `*` or
// by juxtaposition, powers with `^`, and `/` divides by a nonzero scalar.

Generator parse_generator(std::string_view text, int n);

/// "2d1", "d1+d2", "d1-d2", "3/2d1", "2,0", "3/2,0", "0".
Weight parse_weight(std::string_view text, int n);

/// Polynomial in L1..Ln, e.g. "2*L2^2 - L1 + 3/4".
Poly parse_poly(std::string_view text);

/// Noncommutative expression evaluated in U(g_n) (normal form).
UElement parse_element(std::string_view text, const JacobiAlgebra& alg);

/// Expression applied to v0, e.g. "((a+2)^2 - 2 b+2) v0".
VermaVector parse_vector(std::string_view text, const JacobiAlgebra& alg);

/// Monomial written as juxtaposed factors with powers, e.g. "b+2 (d+)^2".
/// Factors may come in any order but the result must be a single PBW
/// monomial with coefficient 1.
PbwMonomial parse_monomial(std::string_view text, const JacobiAlgebra& alg);

/// Equations separated by ',' or ';', each either "lhs = rhs" or a
/// polynomial meaning "= 0".
ConstraintSet parse_constraints(std::string_view text);

}  // namespace jv

#endif  // JV_PARSE_HPP
