#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "bilconv/bilinear.hpp"
#include "bilconv/tensor.hpp"

namespace bilconv {

/// Domain-erased carrier for files and the CLI.
using AnyAlgorithm = std::variant<BilinearAlgorithm<Rational>, BilinearAlgorithm<double>,
                                  BilinearAlgorithm<Complex>>;

// Matrix schema shared by every module:
// {rows, cols, domain: "rational"|"real"|"complex", entries: row-major array}
// with rational entries as "num/den" strings and complex entries as [re, im].
std::string matrix_to_json(const Matrix<Rational>& m);
std::string matrix_to_json(const Matrix<double>& m);
std::string matrix_to_json(const Matrix<Complex>& m);

// Algorithm schema: {variant, r, n, out, rank, provenance, A, B, C}.
std::string algorithm_to_json(const AnyAlgorithm& alg);
AnyAlgorithm algorithm_from_json(const std::string& text);

std::string rank_of(const AnyAlgorithm& alg);

/// Vector/tensor text format: a dims header line (one size per mode) followed
/// by whitespace-separated entries in row-major order.
Tensor<double> read_tensor_text(std::istream& in);
void write_tensor_text(std::ostream& out, const Tensor<double>& t);

AnyAlgorithm load_algorithm_file(const std::string& path);
void save_algorithm_file(const std::string& path, const AnyAlgorithm& alg);
Tensor<double> load_tensor_file(const std::string& path);

}  // namespace bilconv
