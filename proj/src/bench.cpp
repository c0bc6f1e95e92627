#include <revsynth/bench.hpp>

#include <revsynth/baselines.hpp>
#include <revsynth/portfolio.hpp>
#include <revsynth/revcol.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace revsynth
{

Synthesizer bench3_synthesizer( std::string_view config )
{
  if ( config == "mmd" )
    return []( Permutation const& p ) { return mmd_synth( p ); };
  auto cfg = RevColConfig::preset( config );
  return [cfg]( Permutation const& p ) { return revcol_synth( p, cfg ); };
}

Permutation nth_permutation( unsigned width, std::uint64_t index )
{
  std::size_t const n = std::size_t{1} << width;
  std::vector<Word> pool( n );
  std::iota( pool.begin(), pool.end(), Word{0} );
  std::vector<std::uint64_t> factorial( n + 1u, 1u );
  for ( std::size_t i = 1; i <= n && i < 21u; ++i )
    factorial[i] = factorial[i - 1u] * i;
  if ( n > 20u )
    throw std::invalid_argument( "nth_permutation: too many values to rank" );
  if ( index >= factorial[n] )
    throw std::out_of_range( "nth_permutation: index out of range" );
  std::vector<Word> out;
  for ( std::size_t k = n; k > 0; --k )
  {
    auto const q = index / factorial[k - 1u];
    index %= factorial[k - 1u];
    out.push_back( pool[q] );
    pool.erase( pool.begin() + static_cast<std::ptrdiff_t>( q ) );
  }
  return Permutation( width, std::move( out ) );
}

HistogramResult run_exhaustive( unsigned width, Synthesizer const& synth, unsigned jobs )
{
  if ( width > 3u )
    throw std::invalid_argument( "exhaustive enumeration is limited to 3 lines" );
  std::size_t const n = std::size_t{1} << width;
  std::uint64_t total = 1;
  for ( std::size_t i = 2; i <= n; ++i )
    total *= i;
  jobs = std::max( 1u, std::min<unsigned>( jobs, static_cast<unsigned>( total ) ) );

  auto const start = std::chrono::steady_clock::now();
  std::vector<HistogramResult> partial( jobs );
  auto worker = [&]( unsigned job ) {
    auto& r = partial[job];
    std::uint64_t const begin = total * job / jobs, end = total * ( job + 1u ) / jobs;
    auto const first = nth_permutation( width, begin );
    std::vector<Word> values( first.outputs().begin(), first.outputs().end() );
    for ( std::uint64_t i = begin; i < end; ++i )
    {
      Permutation const spec( width, values );
      auto const c = synth( spec );
      if ( !verify( c, spec ) )
        ++r.verification_failures;
      ++r.histogram[c.num_gates()];
      std::next_permutation( values.begin(), values.end() );
    }
  };
  std::vector<std::thread> threads;
  for ( unsigned j = 1; j < jobs; ++j )
    threads.emplace_back( worker, j );
  worker( 0 );
  for ( auto& t : threads )
    t.join();

  HistogramResult result;
  std::uint64_t weighted = 0;
  for ( auto const& r : partial )
  {
    result.verification_failures += r.verification_failures;
    for ( auto const& [gc, count] : r.histogram )
      result.histogram[gc] += count;
  }
  for ( auto const& [gc, count] : result.histogram )
  {
    result.functions += count;
    weighted += gc * count;
    result.max_gate_count = std::max( result.max_gate_count, gc );
  }
  result.average = static_cast<double>( weighted ) / static_cast<double>( result.functions );
  result.wall_seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  return result;
}

std::string histogram_csv( HistogramResult const& r )
{
  std::ostringstream os;
  os << "gate_count,function_count\n";
  for ( auto const& [gc, count] : r.histogram )
    os << gc << ',' << count << '\n';
  os.setf( std::ios::fixed );
  os.precision( 4 );
  os << "# average," << r.average << '\n';
  os.precision( 3 );
  os << "# wall_seconds," << r.wall_seconds << '\n';
  return os.str();
}

std::vector<BenchmarkFunction> benchmark_suite()
{
  auto make = []( std::string name, unsigned width, std::vector<Word> outputs, std::optional<unsigned> revcol,
                  std::optional<unsigned> hybrid ) {
    return BenchmarkFunction{std::move( name ), Permutation( width, std::move( outputs ) ), revcol, hybrid};
  };
  return {
      make( "3_17", 3, {7, 1, 4, 3, 0, 2, 6, 5}, std::nullopt, std::nullopt ),
      make( "decode42", 4, {1, 2, 4, 8, 0, 3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15}, 11, 10 ),
      make( "imark", 4, {4, 5, 2, 14, 0, 3, 6, 10, 11, 8, 15, 1, 12, 13, 7, 9}, 9, 9 ),
      make( "oc5", 4, {6, 0, 12, 15, 7, 1, 5, 2, 4, 10, 13, 3, 11, 8, 14, 9}, 15, 12 ),
      make( "oc6", 4, {9, 0, 2, 15, 11, 6, 7, 8, 14, 3, 4, 13, 5, 1, 12, 10}, 17, 14 ),
      make( "oc7", 4, {6, 15, 9, 5, 13, 12, 3, 7, 2, 10, 1, 11, 0, 14, 4, 8}, 15, 14 ),
      make( "oc8", 4, {11, 3, 9, 2, 7, 13, 15, 14, 8, 1, 4, 10, 0, 12, 6, 5}, 16, 13 ),
      make( "rd32", 4, {0, 7, 6, 9, 4, 11, 10, 13, 8, 15, 14, 1, 12, 3, 2, 5}, 6, 4 ),
      make( "shift4", 4, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 0}, 4, 4 ),
      make( "4_49", 4, {15, 1, 12, 3, 5, 6, 8, 7, 0, 10, 13, 9, 2, 4, 14, 11}, 17, 16 ),
  };
}

std::vector<SuiteRow> run_suite()
{
  std::vector<SuiteRow> rows;
  HybridConfig const hybrid_cfg;
  for ( auto const& f : benchmark_suite() )
  {
    auto add = [&]( std::string method, Circuit const& c, std::optional<unsigned> published ) {
      rows.push_back( {f.name, std::move( method ), cost_report( c ), verify( c, f.spec ), published} );
    };
    add( "revcol", revcol_synth( f.spec, hybrid_cfg.revcol ), f.published_revcol_gc );
    add( "mmd", mmd_synth( f.spec, hybrid_cfg.mmd ), std::nullopt );
    add( "hybrid", hybrid_synth( f.spec, {Method::revcol, Method::mmd, Method::bubble}, hybrid_cfg ),
         f.published_hybrid_gc );
  }
  return rows;
}

std::string suite_csv( std::vector<SuiteRow> const& rows )
{
  std::ostringstream os;
  os << "name,method,gc,qc,ld,verified,published_gc\n";
  for ( auto const& r : rows )
  {
    os << r.name << ',' << r.method << ',' << r.cost.gate_count << ',' << r.cost.quantum_cost << ','
       << r.cost.logical_depth << ',' << ( r.verified ? "yes" : "no" ) << ',';
    if ( r.published_gc )
      os << *r.published_gc;
    os << '\n';
  }
  return os.str();
}

} // namespace revsynth
