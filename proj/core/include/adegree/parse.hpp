#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adegree/hompoly.hpp"

namespace adegree {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses the polynomial text format: terms joined by +/-, '*' for products,
/// '^' for powers, parentheses allowed. Variables are X0..Xn, or the aliases
/// X,Y,Z,W when num_vars <= 4. The input must be homogeneous.
HomPoly parse_homogeneous(const std::string& text, int num_vars);

/// Affine polynomial in x1..xN (aliases x,y,z,w for N <= 4), returned
/// homogenized to `target_degree` with the last of num_vars variables.
/// target_degree == -1 homogenizes to the polynomial's own degree.
HomPoly parse_affine_homogenized(const std::string& text, int affine_vars, int target_degree);

/// Degree of an affine polynomial expression without homogenizing.
int affine_expression_degree(const std::string& text, int affine_vars);

std::string poly_to_string(const HomPoly& p);

/// Integer matrix in row-major list syntax, e.g. [[0,2],[1,0]].
std::vector<std::vector<Int>> parse_int_matrix(const std::string& text);
std::string matrix_to_string(const std::vector<std::vector<Int>>& m);

/// Comma-separated rationals, e.g. "2,3" or "1/2,1,1".
std::vector<Rat> parse_point(const std::string& text);

} // namespace adegree
