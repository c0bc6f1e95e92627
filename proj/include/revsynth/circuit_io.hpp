#pragma once

#include <revsynth/circuit.hpp>

#include <string>
#include <string_view>

namespace revsynth
{

/*! \brief Serializes a circuit in the RevLib-style text format.
 *
 *     .version 2.0
 *     .numvars 3
 *     .variables x0 x1 x2
 *     .begin
 *     t3 x1 x2 x0
 *     f2 x0 x1
 *     .end
 *
 * `t<k>` is a Toffoli with k - 1 controls, `f<k>` a swap with k - 2 controls;
 * controls come first in ascending line order, `-` marks a negative control,
 * and the target line(s) come last. `x0` is the least significant bit.
 */
std::string write_circuit( Circuit const& c );

/// Parses the format written by `write_circuit`. Throws `ParseError`.
Circuit read_circuit( std::string_view text );

Circuit read_circuit_file( std::string const& path );
void write_circuit_file( Circuit const& c, std::string const& path );

} // namespace revsynth
