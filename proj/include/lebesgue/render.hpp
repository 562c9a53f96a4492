#pragma once

// Human-readable renderings of traces. Informative only.

#include <string>

#include "lebesgue/bijection.hpp"
#include "lebesgue/serialize.hpp"

namespace lebesgue {

/**
 * Young diagrams of a triple in English notation with '#' cells. Rows of
 * alpha sit left of the bar, the columns of beta (rows of conj(beta)) to its
 * right, and the rows of conj(gamma) above the axis, nearest rows first.
 */
[[nodiscard]] std::string render_triple_ascii(const BijectionTriple& t);

[[nodiscard]] std::string render_forward_text(const ForwardTrace& t);
[[nodiscard]] std::string render_forward_ascii(const ForwardTrace& t);
[[nodiscard]] std::string render_inverse_text(const InverseTrace& t);
[[nodiscard]] std::string render_inverse_ascii(const InverseTrace& t);

}  // namespace lebesgue
