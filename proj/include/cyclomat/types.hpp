#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclomat {

// Which of the two structured trigonometric matrices is meant.
enum class MatrixKind { sine, cosine };

// Character parity: odd means chi(-1) = -1.
enum class Parity { odd, even };

std::string_view to_string(MatrixKind kind);
std::string_view to_string(Parity parity);
MatrixKind parse_matrix_kind(std::string_view text);   // throws std::invalid_argument

// A matrix (or the (n, kind) pair that generates it) has no inverse.
// The message names the violated criterion, e.g. the squared prime divisor.
class singular_error : public std::domain_error {
public:
    explicit singular_error(const std::string& what) : std::domain_error(what) {}
};

} // namespace cyclomat
