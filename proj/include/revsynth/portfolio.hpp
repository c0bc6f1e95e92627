#pragma once

#include <revsynth/baselines.hpp>
#include <revsynth/revcol.hpp>

#include <optional>
#include <set>
#include <string_view>

namespace revsynth
{

/// Portfolio members; declaration order is the tie-break priority.
enum class Method
{
  revcol,
  mmd,
  bubble
};

std::string_view method_name( Method m );
/// Throws `std::invalid_argument` on an unknown name.
Method parse_method( std::string_view name );

using MethodSet = std::set<Method>;

struct HybridConfig
{
  RevColConfig revcol{RevColConfig::preset( "e" )};
  MmdConfig mmd{};
};

/// `m` applied to the whole function.
Circuit synth_with_method( Permutation const& spec, Method m, HybridConfig const& cfg );

/*! \brief Best circuit for a cofactor.
 *
 * Compares the RevCol continuation (when `revcol` is a member and
 * `continue_revcol` is given) with every other member applied whole.
 * Candidates are verified, then ranked by (gate count, quantum cost, depth)
 * with ties going to the earlier method.
 */
Circuit hybrid_recursion_hook( Permutation const& subspec, MethodSet const& methods, HybridConfig const& cfg,
                               std::function<Circuit()> const& continue_revcol = {} );

/*! \brief Column matching that lets every portfolio member compete on each cofactor.
 *
 * Throws `std::invalid_argument` for an empty method set. The result is never
 * worse than any single member on its own.
 */
Circuit hybrid_synth( Permutation const& spec, MethodSet const& methods, HybridConfig const& cfg = {} );

} // namespace revsynth
