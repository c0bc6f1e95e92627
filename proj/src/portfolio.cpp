#include <revsynth/portfolio.hpp>

#include <revsynth/metrics.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace revsynth
{

std::string_view method_name( Method m )
{
  switch ( m )
  {
  case Method::revcol:
    return "revcol";
  case Method::mmd:
    return "mmd";
  case Method::bubble:
    return "bubble";
  }
  return "?";
}

Method parse_method( std::string_view name )
{
  for ( auto m : {Method::revcol, Method::mmd, Method::bubble} )
  {
    if ( method_name( m ) == name )
      return m;
  }
  throw std::invalid_argument( "unknown synthesis method '" + std::string( name ) + "'" );
}

Circuit synth_with_method( Permutation const& spec, Method m, HybridConfig const& cfg )
{
  switch ( m )
  {
  case Method::revcol:
    return revcol_synth( spec, cfg.revcol );
  case Method::mmd:
    return mmd_synth( spec, cfg.mmd );
  case Method::bubble:
    return sort_synth( spec, bubble_sorter, cfg.revcol.transposition_mode );
  }
  throw std::logic_error( "unreachable" );
}

namespace
{

struct Selector
{
  Permutation const& spec;
  std::optional<Circuit> best;
  CostReport best_cost;

  /// Candidates arrive in priority order, so only a strictly lower cost wins.
  void offer( Circuit candidate )
  {
    if ( !verify( candidate, spec ) )
      throw std::logic_error( "portfolio candidate does not realize its specification" );
    auto const cost = cost_report( candidate );
    if ( !best || cost < best_cost )
    {
      best = std::move( candidate );
      best_cost = cost;
    }
  }
};

/// Whole-function results of the non-RevCol members, shared across column orders.
class AlternativeCache
{
public:
  AlternativeCache( MethodSet const& methods, HybridConfig const& cfg ) : methods_( methods ), cfg_( cfg ) {}

  std::vector<Circuit> const& get( Permutation const& spec )
  {
    auto key = std::vector<Word>( spec.outputs().begin(), spec.outputs().end() );
    auto it = cache_.find( key );
    if ( it != cache_.end() )
      return it->second;
    std::vector<Circuit> result;
    for ( auto m : methods_ )
    {
      if ( m != Method::revcol )
        result.push_back( synth_with_method( spec, m, cfg_ ) );
    }
    return cache_.emplace( std::move( key ), std::move( result ) ).first->second;
  }

private:
  MethodSet const& methods_;
  HybridConfig const& cfg_;
  std::map<std::vector<Word>, std::vector<Circuit>> cache_;
};

Circuit select( Permutation const& spec, std::function<Circuit()> const& continue_revcol,
                std::vector<Circuit> const& alternatives )
{
  Selector sel{spec, std::nullopt, {}};
  if ( continue_revcol )
    sel.offer( continue_revcol() );
  for ( auto const& c : alternatives )
    sel.offer( c );
  if ( !sel.best )
    throw std::invalid_argument( "hybrid synthesis needs at least one method" );
  return *sel.best;
}

} // namespace

Circuit hybrid_recursion_hook( Permutation const& subspec, MethodSet const& methods, HybridConfig const& cfg,
                               std::function<Circuit()> const& continue_revcol )
{
  AlternativeCache cache( methods, cfg );
  bool const use_revcol = methods.contains( Method::revcol ) && continue_revcol;
  return select( subspec, use_revcol ? continue_revcol : std::function<Circuit()>{}, cache.get( subspec ) );
}

Circuit hybrid_synth( Permutation const& spec, MethodSet const& methods, HybridConfig const& cfg )
{
  if ( methods.empty() )
    throw std::invalid_argument( "hybrid synthesis needs at least one method" );

  AlternativeCache cache( methods, cfg );
  std::function<Circuit()> whole_revcol;
  if ( methods.contains( Method::revcol ) )
  {
    whole_revcol = [&] {
      SubproblemHook hook;
      if ( methods.size() > 1u )
      {
        hook = [&]( Permutation const& sub, std::function<Circuit()> const& continue_revcol ) {
          return select( sub, continue_revcol, cache.get( sub ) );
        };
      }
      return revcol_synth( spec, cfg.revcol, hook );
    };
  }
  Selector sel{spec, std::nullopt, {}};
  if ( whole_revcol )
  {
    sel.offer( whole_revcol() );
    if ( methods.size() > 1u )
      sel.offer( revcol_synth( spec, cfg.revcol ) );
  }
  for ( auto const& c : cache.get( spec ) )
    sel.offer( c );
  return *sel.best;
}

} // namespace revsynth
