#include <revsynth/revcol.hpp>

#include <revsynth/circuit_io.hpp>
#include <revsynth/matching.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace revsynth
{

RevColConfig RevColConfig::preset( std::string_view name )
{
  RevColConfig cfg;
  if ( name == "a" )
    return cfg;
  cfg.partial_match = true;
  if ( name == "b" )
    return cfg;
  cfg.swap_gates = true;
  if ( name == "c" )
    return cfg;
  cfg.output_permutation = true;
  if ( name == "d" )
    return cfg;
  cfg.inverted_column = true;
  cfg.transposition_mode = TranspositionMode::aba;
  if ( name == "e" )
    return cfg;
  throw std::invalid_argument( "unknown RevCol configuration '" + std::string( name ) + "'" );
}

SynthState initial_state( Permutation const& spec )
{
  SynthState s{spec, 0};
  for ( unsigned l = 0; l < spec.width(); ++l )
  {
    if ( column_matched( spec, l ) )
      s.matched_lines |= Word{1} << l;
  }
  return s;
}

bool column_matched( Permutation const& remaining, unsigned line )
{
  for ( Word x = 0; x < remaining.size(); ++x )
  {
    if ( bit( remaining[x] ^ x, line ) )
      return false;
  }
  return true;
}

namespace
{

void collect_mismatches( std::span<Word const> values, unsigned line, std::vector<Word>& zeros, std::vector<Word>& ones )
{
  zeros.clear();
  ones.clear();
  for ( Word x = 0; x < values.size(); ++x )
  {
    Word const y = values[x];
    if ( bit( y ^ x, line ) )
      ( bit( y, line ) ? ones : zeros ).push_back( y );
  }
  std::sort( zeros.begin(), zeros.end() );
  std::sort( ones.begin(), ones.end() );
}

Word delete_line( Word x, unsigned line )
{
  Word const low = ( Word{1} << line ) - 1u;
  return ( x & low ) | ( ( x >> ( line + 1u ) ) << line );
}

std::vector<unsigned> skip_line_map( unsigned sub_width, unsigned line )
{
  std::vector<unsigned> map( sub_width );
  for ( unsigned i = 0; i < sub_width; ++i )
    map[i] = i < line ? i : i + 1u;
  return map;
}

} // namespace

ColumnStage match_column( SynthState const& state, unsigned line, RevColConfig const& cfg )
{
  unsigned const n = state.width();
  if ( line >= n )
    throw std::invalid_argument( "match_column: line out of range" );

  ColumnStage stage;
  stage.circuit = Circuit( n );
  std::vector<Word> values( state.remaining.outputs().begin(), state.remaining.outputs().end() );
  std::vector<Word> zeros, ones;
  collect_mismatches( values, line, zeros, ones );
  stage.pairs_before_inversion = zeros.size();

  bool const all_mismatched = 2u * zeros.size() == values.size();
  if ( cfg.inverted_column && ( all_mismatched || 4u * zeros.size() > values.size() ) )
  {
    stage.inverted = true;
    for ( auto& y : values )
      y ^= Word{1} << line;
    collect_mismatches( values, line, zeros, ones );
  }

  if ( !zeros.empty() )
  {
    auto const matching = min_weight_perfect_matching( build_instance( zeros, ones, n ) );
    stage.pairs = matching.pairs;
    std::sort( stage.pairs.begin(), stage.pairs.end() );

    std::vector<Word> position( values.size() );
    for ( Word x = 0; x < values.size(); ++x )
      position[values[x]] = x;
    for ( auto const& [u, v] : stage.pairs )
    {
      std::swap( values[position[u]], values[position[v]] );
      std::swap( position[u], position[v] );
      stage.circuit.append( synth_transposition( u, v, n, cfg.transposition_mode ) );
    }
  }
  if ( stage.inverted )
    stage.circuit.push_back( Gate::not_gate( line ) );

  stage.next.remaining = make_unchecked( n, std::move( values ) );
  stage.next.matched_lines = state.matched_lines | ( Word{1} << line );
  return stage;
}

std::pair<Permutation, Permutation> split_cofactors( SynthState const& state, unsigned line )
{
  auto const& r = state.remaining;
  unsigned const n = r.width();
  if ( n == 0u || line >= n )
    throw std::invalid_argument( "split_cofactors: line out of range" );
  if ( !column_matched( r, line ) )
    throw std::logic_error( "split_cofactors: line " + std::to_string( line ) + " is not matched" );

  std::size_t const half = r.size() / 2u;
  std::vector<Word> out0( half ), out1( half );
  for ( Word x = 0; x < r.size(); ++x )
  {
    ( bit( x, line ) ? out1 : out0 )[delete_line( x, line )] = delete_line( r[x], line );
  }
  return {Permutation( n - 1u, std::move( out0 ) ), Permutation( n - 1u, std::move( out1 ) )};
}

Circuit recombine( Circuit const& sub0, Circuit const& sub1, unsigned line, unsigned width, bool share )
{
  auto const map = skip_line_map( width - 1u, line );
  if ( share )
    return embed( sub0, map, width );
  Circuit c = add_control( embed( sub0, map, width ), line, Polarity::negative );
  c.append( add_control( embed( sub1, map, width ), line, Polarity::positive ) );
  return c;
}

std::optional<Gate> detect_swap_case( Permutation const& spec )
{
  if ( spec.width() != 2u )
    throw std::invalid_argument( "detect_swap_case expects a 2-line function" );
  if ( spec[0] == 0u && spec[1] == 2u && spec[2] == 1u && spec[3] == 3u )
    return Gate::swap( {}, 0, 1 );
  return std::nullopt;
}

std::uint64_t worst_case_bound( unsigned n )
{
  if ( n < 2u )
    throw std::invalid_argument( "worst_case_bound needs n >= 2" );
  std::uint64_t const m = n;
  return ( std::uint64_t{1} << ( n - 2u ) ) * ( m * m - 2u * m + 2u );
}

bool objective_less( Circuit const& a, Circuit const& b )
{
  auto const ca = cost_report( a ), cb = cost_report( b );
  if ( ca != cb )
    return ca < cb;
  return write_circuit( a ) < write_circuit( b );
}

namespace
{

class Engine
{
public:
  Engine( RevColConfig const& cfg, RevColTrace* trace, SubproblemHook const& hook, bool search_orders = false )
      : cfg_( cfg ), trace_( trace ), hook_( hook ), search_orders_( search_orders )
  {
  }

  Circuit solve( Permutation const& r, std::vector<unsigned> const& order, std::vector<unsigned> const& global_lines,
                 int parent )
  {
    unsigned const n = r.width();
    if ( r.is_identity() )
      return Circuit( n );
    if ( n == 1u )
      return Circuit( 1u, {Gate::not_gate( 0 )} );
    if ( n == 2u && cfg_.swap_gates )
    {
      if ( auto g = detect_swap_case( r ) )
        return Circuit( 2u, {*g} );
    }

    auto const state = initial_state( r );
    if ( !order.empty() )
      return expand( state, order.front(), match_column( state, order.front(), cfg_ ), order, global_lines, parent );
    if ( trace_ )
      return search( state, global_lines, parent );

    // without a trace the result depends on the subfunction alone
    std::vector<Word> key( r.outputs().begin(), r.outputs().end() );
    if ( auto it = memo_.find( key ); it != memo_.end() )
      return it->second;
    Circuit c = search( state, global_lines, parent );
    memo_.emplace( std::move( key ), c );
    return c;
  }

private:
  Circuit search( SynthState const& state, std::vector<unsigned> const& global_lines, int parent )
  {
    unsigned const n = state.width();
    std::vector<unsigned> const order;
    if ( !search_orders_ || n > cfg_.exhaustive_order_limit )
    {
      unsigned line = 0;
      auto stage = greedy_stage( state, line );
      return expand( state, line, std::move( stage ), order, global_lines, parent );
    }

    // cofactors are independent, so the best line is chosen separately at every level
    std::optional<Circuit> best;
    for ( unsigned line = 0; line < n; ++line )
    {
      Circuit c = expand( state, line, match_column( state, line, cfg_ ), order, global_lines, parent );
      if ( !best || objective_less( c, *best ) )
        best = std::move( c );
    }
    return *best;
  }

  Circuit expand( SynthState const& state, unsigned line, ColumnStage stage, std::vector<unsigned> const& order,
                  std::vector<unsigned> const& global_lines, int parent )
  {
    unsigned const n = state.width();
    int const index = record( stage, line, global_lines, parent );
    if ( stage.next.remaining.is_identity() )
      return std::move( stage.circuit );

    auto const [c0, c1] = split_cofactors( stage.next, line );

    std::vector<unsigned> sub_order;
    for ( std::size_t i = 1; i < order.size(); ++i )
      sub_order.push_back( order[i] > line ? order[i] - 1u : order[i] );
    std::vector<unsigned> sub_lines = global_lines;
    sub_lines.erase( sub_lines.begin() + line );

    auto const sub = [&]( Permutation const& cofactor ) {
      auto const recurse = [&] { return solve( cofactor, sub_order, sub_lines, index ); };
      if ( cofactor.is_identity() )
        return Circuit( cofactor.width() );
      return hook_ ? hook_( cofactor, recurse ) : recurse();
    };

    bool const share = cfg_.partial_match && c0 == c1;
    Circuit const sub0 = sub( c0 );
    Circuit const sub1 = share ? Circuit( n - 1u ) : sub( c1 );
    Circuit result = recombine( sub0, sub1, line, n, share );
    result.append( stage.circuit );
    return result;
  }

  ColumnStage greedy_stage( SynthState const& state, unsigned& line ) const
  {
    ColumnStage best;
    for ( unsigned l = 0; l < state.width(); ++l )
    {
      auto stage = match_column( state, l, cfg_ );
      if ( l == 0u || stage.circuit.num_gates() < best.circuit.num_gates() )
      {
        best = std::move( stage );
        line = l;
      }
    }
    return best;
  }

  int record( ColumnStage const& stage, unsigned line, std::vector<unsigned> const& global_lines, int parent )
  {
    if ( !trace_ )
      return -1;
    RevColTrace::Stage s;
    s.parent = parent;
    s.line = global_lines[line];
    for ( auto l : global_lines )
      s.active_lines |= Word{1} << l;
    for ( auto const& g : stage.circuit.gates() )
    {
      for ( Word m = g.target_mask(); m; m &= m - 1 )
        s.target_lines |= Word{1} << global_lines[std::countr_zero( m )];
    }
    s.inverted = stage.inverted;
    s.pairs_before_inversion = stage.pairs_before_inversion;
    s.pairs = stage.pairs;
    trace_->stages.push_back( std::move( s ) );
    return static_cast<int>( trace_->stages.size() ) - 1;
  }

  RevColConfig const& cfg_;
  RevColTrace* trace_;
  SubproblemHook const& hook_;
  bool search_orders_;
  std::map<std::vector<Word>, Circuit> memo_;
};

std::vector<unsigned> iota_lines( unsigned n )
{
  std::vector<unsigned> v( n );
  std::iota( v.begin(), v.end(), 0u );
  return v;
}

void keep_best( std::optional<Circuit>& best, Circuit candidate )
{
  if ( !best || objective_less( candidate, *best ) )
    best = std::move( candidate );
}

bool is_line_permutation( std::span<unsigned const> order, unsigned n )
{
  if ( order.size() != n )
    return false;
  std::vector<unsigned> sorted( order.begin(), order.end() );
  std::sort( sorted.begin(), sorted.end() );
  return sorted == iota_lines( n );
}

} // namespace

Circuit revcol_synth_order( Permutation const& spec, std::vector<unsigned> const& order, RevColConfig const& cfg,
                            RevColTrace* trace, SubproblemHook const& hook )
{
  unsigned const n = spec.width();
  if ( !order.empty() && !is_line_permutation( order, n ) )
    throw std::invalid_argument( "column order must list every line exactly once" );
  Engine engine( cfg, trace, hook );
  return engine.solve( spec, order, iota_lines( n ), -1 );
}

Circuit revcol_synth_orders( Permutation const& spec, RevColConfig const& cfg, SubproblemHook const& hook )
{
  unsigned const n = spec.width();
  if ( spec.is_identity() )
    return Circuit( n );
  switch ( cfg.column_orders )
  {
  case ColumnOrders::fixed:
    return revcol_synth_order( spec, cfg.fixed_order, cfg, nullptr, hook );
  case ColumnOrders::greedy:
    return revcol_synth_order( spec, {}, cfg, nullptr, hook );
  case ColumnOrders::exhaustive:
    break;
  }
  Engine engine( cfg, nullptr, hook, true );
  return engine.solve( spec, {}, iota_lines( n ), -1 );
}

Word relabel_word( Word x, std::span<unsigned const> assignment )
{
  Word y = 0;
  for ( unsigned i = 0; i < assignment.size(); ++i )
    y |= static_cast<Word>( bit( x, i ) ) << assignment[i];
  return y;
}

Circuit line_permutation_circuit( std::span<unsigned const> assignment, unsigned width )
{
  if ( !is_line_permutation( assignment, width ) )
    throw std::invalid_argument( "line assignment must be a permutation of the lines" );
  // at[j] = original bit currently on line j
  auto at = iota_lines( width );
  std::vector<unsigned> line_of = at;
  Circuit c( width );
  for ( unsigned j = 0; j < width; ++j )
  {
    unsigned const wanted = static_cast<unsigned>( std::find( assignment.begin(), assignment.end(), j ) - assignment.begin() );
    unsigned const p = line_of[wanted];
    if ( p == j )
      continue;
    c.push_back( Gate::swap( {}, j, p ) );
    unsigned const displaced = at[j];
    std::swap( at[j], at[p] );
    line_of[displaced] = p;
    line_of[wanted] = j;
  }
  return c;
}

namespace
{

Circuit synthesize_for_assignment( Permutation const& spec, std::vector<unsigned> const& assignment,
                                   RevColConfig const& cfg, SubproblemHook const& hook )
{
  unsigned const n = spec.width();
  std::vector<unsigned> inverse( n );
  for ( unsigned i = 0; i < n; ++i )
    inverse[assignment[i]] = i;
  std::vector<Word> relabeled( spec.size() );
  for ( Word x = 0; x < spec.size(); ++x )
    relabeled[x] = relabel_word( spec[x], inverse );
  Circuit c = revcol_synth_orders( make_unchecked( n, std::move( relabeled ) ), cfg, hook );
  c.append( line_permutation_circuit( assignment, n ) );
  return c;
}

} // namespace

Circuit output_permutation_search( Permutation const& spec, RevColConfig const& cfg, SubproblemHook const& hook )
{
  unsigned const n = spec.width();
  if ( spec.is_identity() )
    return Circuit( n );
  auto assignment = iota_lines( n );
  std::optional<Circuit> best;
  if ( n <= cfg.exhaustive_output_limit )
  {
    do
    {
      keep_best( best, synthesize_for_assignment( spec, assignment, cfg, hook ) );
    } while ( std::next_permutation( assignment.begin(), assignment.end() ) );
    return *best;
  }

  best = synthesize_for_assignment( spec, assignment, cfg, hook );
  for ( bool improved = true; improved; )
  {
    improved = false;
    auto step = assignment;
    for ( unsigned i = 0; i < n; ++i )
    {
      for ( unsigned j = i + 1; j < n; ++j )
      {
        auto trial = assignment;
        std::swap( trial[i], trial[j] );
        auto c = synthesize_for_assignment( spec, trial, cfg, hook );
        if ( objective_less( c, *best ) )
        {
          best = std::move( c );
          step = trial;
          improved = true;
        }
      }
    }
    assignment = step;
  }
  return *best;
}

Circuit revcol_synth( Permutation const& spec, RevColConfig const& cfg, SubproblemHook const& hook )
{
  if ( cfg.column_orders == ColumnOrders::fixed && !is_line_permutation( cfg.fixed_order, spec.width() ) )
    throw std::invalid_argument( "fixed column order must list every line exactly once" );
  if ( cfg.output_permutation )
    return output_permutation_search( spec, cfg, hook );
  return revcol_synth_orders( spec, cfg, hook );
}

} // namespace revsynth
