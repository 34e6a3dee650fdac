#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "linkhom/chain.hpp"

namespace linkhom {

/// Chain-spec document: JSON object with exactly the fields
///   r, m, n        positive integers
///   s              polynomial
///   f_fwd, f_bwd   arrays of n-1 matrices, r x r
///   g_fwd, g_bwd   arrays of n-1 matrices, m x m
///   extra_points   optional array of rational strings
/// A matrix is an array of rows, a row an array of polynomials, and a
/// polynomial an array of rational strings in ascending degree
/// (["0","0","1"] is t^2). A bare rational string is accepted for a
/// constant polynomial. Unknown fields are rejected.
struct ChainFile {
    LinkedChain chain;
    std::vector<Rational> extra_points;
};

/// Throws ParseError (with line/column or field path) or ShapeMismatch.
ChainFile parse_chain_text(std::string_view text);
ChainFile parse_chain_file(const std::filesystem::path& path);

/// Canonical serialization; parse_chain_text(chain_to_text(c)).chain == c.
std::string chain_to_text(const LinkedChain& chain, const std::vector<Rational>& extra_points = {});

/// Scalar syntax shared by files and reports.
std::string rational_to_text(const Rational& q);
/// Polynomial as a JSON array of rational strings, e.g. ["0","0","1"].
std::string poly_to_text(const Poly& p);
/// Matrix as a JSON array of rows of polynomial arrays.
std::string matrix_to_text(const MatrixP& m);
/// Matrix over Q as rows of rational strings.
std::string matrix_to_text(const MatrixQ& m);
/// Matrix over Q(t) as rows of "num/den" strings in human polynomial syntax.
std::string matrix_to_text(const MatrixRF& m);

/// Parses a polynomial given either as a JSON array of rational strings or as
/// a comma-separated list of rationals in ascending degree ("0,0,1").
Poly parse_poly_argument(std::string_view text);

}  // namespace linkhom
