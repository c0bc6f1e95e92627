#pragma once

#include <revsynth/circuit.hpp>

#include <compare>
#include <cstdint>

namespace revsynth
{

/*! \brief Cost of a circuit.
 *
 * Ordering is lexicographic on (gate count, quantum cost, logical depth),
 * which is the objective every synthesizer minimizes.
 */
struct CostReport
{
  std::uint64_t gate_count{0};
  std::uint64_t quantum_cost{0};
  std::uint64_t logical_depth{0};

  friend auto operator<=>( CostReport const&, CostReport const& ) = default;
};

/// 1 for up to one control, 2^(c+1) - 3 beyond; polarity does not matter.
std::uint64_t toffoli_cost( unsigned num_controls );
/// 3 for SWAP, 5 for Fredkin, 2 + toffoli_cost(c + 1) beyond.
std::uint64_t swap_cost( unsigned num_controls );

std::uint64_t quantum_cost( Gate const& g );
std::uint64_t quantum_cost( Circuit const& c );

/// Greedy ASAP levels over gate supports; 0 for an empty circuit.
std::uint64_t logical_depth( Circuit const& c );

CostReport cost_report( Circuit const& c );

} // namespace revsynth
