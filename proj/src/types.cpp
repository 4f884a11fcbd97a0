#include "cyclomat/types.hpp"

namespace cyclomat {

std::string_view to_string(MatrixKind kind) {
    return kind == MatrixKind::sine ? "sine" : "cosine";
}

std::string_view to_string(Parity parity) {
    return parity == Parity::odd ? "odd" : "even";
}

MatrixKind parse_matrix_kind(std::string_view text) {
    if (text == "sine") return MatrixKind::sine;
    if (text == "cosine") return MatrixKind::cosine;
    throw std::invalid_argument("unknown matrix kind '" + std::string(text) +
                                "' (expected 'sine' or 'cosine')");
}

} // namespace cyclomat
