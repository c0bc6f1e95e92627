#pragma once

#include <revsynth/circuit.hpp>

#include <optional>

namespace revsynth
{

enum class TranspositionMode
{
  cascade, ///< 2h - 1 fully controlled Toffolis
  aba      ///< CNOT fan-out, one fully controlled Toffoli, CNOT fan-out again
};

/*! \brief Circuit exchanging the truth values `u` and `v`, fixing all others.
 *
 * The differing bits of `u` are flipped one at a time in ascending line order,
 * each by a Toffoli controlled on every other line with the polarity of the
 * current intermediate word. The first h - 1 gates are then mirrored, giving
 * 2h - 1 gates for Hamming distance h.
 */
Circuit synth_transposition_cascade( Word u, Word v, unsigned width );

/*! \brief Lower-cost construction A.B.A of the same transposition.
 *
 * With pivot line t where `u` and `v` differ, A holds one CNOT per other
 * differing line (control t with the polarity of u_t), and B is a single
 * Toffoli on t controlled by all other lines with the polarities of `v`.
 * The pivot defaults to the lowest differing line.
 */
Circuit synth_transposition_aba( Word u, Word v, unsigned width, std::optional<unsigned> pivot = std::nullopt );

Circuit synth_transposition( Word u, Word v, unsigned width, TranspositionMode mode );

} // namespace revsynth
