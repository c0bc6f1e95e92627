// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <revsynth/baselines.hpp>
#include <revsynth/bench.hpp>
#include <revsynth/circuit_io.hpp>
#include <revsynth/matching.hpp>
#include <revsynth/metrics.hpp>
#include <revsynth/portfolio.hpp>
#include <revsynth/revcol.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

using namespace revsynth;

namespace
{

using Clock = std::chrono::steady_clock;

struct Outcome
{
  bool pass;
  std::string detail;
};

std::string fmt( char const* format, auto... args )
{
  char buf[512];
  std::snprintf( buf, sizeof buf, format, args... );
  return buf;
}

Permutation random_permutation( unsigned width, std::mt19937_64& g )
{
  std::vector<Word> v( std::size_t{1} << width );
  std::iota( v.begin(), v.end(), 0u );
  std::shuffle( v.begin(), v.end(), g );
  return Permutation( width, std::move( v ) );
}

unsigned jobs() { return std::max( 1u, std::thread::hardware_concurrency() ); }

struct NamedSynth
{
  std::string name;
  Synthesizer synth;
};

std::vector<NamedSynth> all_synthesizers()
{
  std::vector<NamedSynth> list;
  for ( std::string c : {"a", "b", "c", "d", "e"} )
  {
    auto const cfg = RevColConfig::preset( c );
    list.push_back( {"revcol-" + c, [cfg]( Permutation const& p ) { return revcol_synth( p, cfg ); }} );
  }
  for ( bool bi : {false, true} )
  {
    for ( bool mixed : {false, true} )
    {
      MmdConfig const cfg{bi, mixed};
      list.push_back( {fmt( "mmd-bi%d-mp%d", bi, mixed ), [cfg]( Permutation const& p ) { return mmd_synth( p, cfg ); }} );
    }
  }
  for ( auto mode : {TranspositionMode::cascade, TranspositionMode::aba} )
  {
    list.push_back( {mode == TranspositionMode::aba ? "bubble-aba" : "bubble-cascade",
                     [mode]( Permutation const& p ) { return sort_synth( p, bubble_sorter, mode ); }} );
  }
  list.push_back( {"hybrid", []( Permutation const& p ) {
                     return hybrid_synth( p, {Method::revcol, Method::mmd, Method::bubble} );
                   }} );
  return list;
}

struct RandomRun
{
  std::uint64_t failures{0};
  std::uint64_t max_gc{0};
};

RandomRun run_random( std::vector<Permutation> const& specs, Synthesizer const& synth )
{
  std::atomic<std::size_t> next{0};
  std::mutex m;
  RandomRun total;
  auto worker = [&] {
    RandomRun local;
    for ( std::size_t i; ( i = next++ ) < specs.size(); )
    {
      auto const c = synth( specs[i] );
      if ( !verify( c, specs[i] ) )
        ++local.failures;
      local.max_gc = std::max<std::uint64_t>( local.max_gc, c.num_gates() );
    }
    std::lock_guard lock( m );
    total.failures += local.failures;
    total.max_gc = std::max( total.max_gc, local.max_gc );
  };
  std::vector<std::thread> threads;
  for ( unsigned j = 1; j < jobs(); ++j )
    threads.emplace_back( worker );
  worker();
  for ( auto& t : threads )
    t.join();
  return total;
}

// Shared between criteria so the expensive runs happen once.
std::map<std::string, HistogramResult> exhaustive3;
std::map<std::pair<std::string, unsigned>, RandomRun> random_runs;

std::uint64_t total_gates( HistogramResult const& r )
{
  std::uint64_t s = 0;
  for ( auto const& [gc, count] : r.histogram )
    s += gc * count;
  return s;
}

Outcome soundness()
{
  auto const start = Clock::now();
  std::uint64_t failures = 0, circuits = 0;
  for ( auto const& [name, synth] : all_synthesizers() )
  {
    auto const r = run_exhaustive( 3, synth, jobs() );
    failures += r.verification_failures;
    circuits += r.functions;
    exhaustive3[name] = r;
    std::printf( "  n=3 %-16s %6.2fs avg %.4f max %llu failures %llu\n", name.c_str(), r.wall_seconds, r.average,
                 static_cast<unsigned long long>( r.max_gate_count ),
                 static_cast<unsigned long long>( r.verification_failures ) );
  }
  for ( unsigned n : {4u, 5u, 6u} )
  {
    std::mt19937_64 rng( 1000 + n );
    std::vector<Permutation> specs;
    for ( int i = 0; i < 1000; ++i )
      specs.push_back( random_permutation( n, rng ) );
    for ( auto const& [name, synth] : all_synthesizers() )
    {
      auto const t = Clock::now();
      auto const r = run_random( specs, synth );
      failures += r.failures;
      circuits += specs.size();
      random_runs[{name, n}] = r;
      std::printf( "  n=%u %-16s %6.2fs max %llu failures %llu\n", n, name.c_str(),
                   std::chrono::duration<double>( Clock::now() - t ).count(), static_cast<unsigned long long>( r.max_gc ),
                   static_cast<unsigned long long>( r.failures ) );
    }
  }
  double const seconds = std::chrono::duration<double>( Clock::now() - start ).count();
  return {failures == 0 && seconds <= 1800.0,
          fmt( "%llu circuits, %llu failures, %.0fs on %u thread(s) (limit 1800s)",
               static_cast<unsigned long long>( circuits ), static_cast<unsigned long long>( failures ), seconds, jobs() )};
}

Outcome three_bit_averages()
{
  auto avg = [&]( std::string const& name ) { return exhaustive3.at( name ).average; };
  double const a = avg( "revcol-a" ), e = avg( "revcol-e" ), mmd = avg( "mmd-bi0-mp1" );
  bool ok = std::abs( a - 7.49 ) <= 0.50 && std::abs( e - 5.43 ) <= 0.35 && std::abs( mmd - 6.53 ) <= 0.75;
  std::string chain;
  for ( std::string c : {"a", "b", "c", "d", "e"} )
  {
    chain += fmt( "%s%.4f", chain.empty() ? "" : " >= ", avg( "revcol-" + c ) );
  }
  for ( auto [hi, lo] : {std::pair{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}} )
    ok = ok && total_gates( exhaustive3.at( std::string( "revcol-" ) + hi ) ) >=
                   total_gates( exhaustive3.at( std::string( "revcol-" ) + lo ) );
  return {ok, fmt( "a %.4f (7.49+-0.50), e %.4f (5.43+-0.35), mmd %.4f (6.53+-0.75); chain %s", a, e, mmd,
                   chain.c_str() )};
}

Outcome worst_case()
{
  auto const m3 = exhaustive3.at( "revcol-e" ).max_gate_count;
  auto const m4 = random_runs.at( {"revcol-e", 4} ).max_gc;
  auto const m5 = random_runs.at( {"revcol-e", 5} ).max_gc;
  bool const ok = m3 <= worst_case_bound( 3 ) && m4 <= worst_case_bound( 4 ) && m5 <= worst_case_bound( 5 );
  return {ok, fmt( "max gc n=3 %llu (<=10), n=4 %llu (<=40), n=5 %llu (<=136)", static_cast<unsigned long long>( m3 ),
                   static_cast<unsigned long long>( m4 ), static_cast<unsigned long long>( m5 ) )};
}

Outcome named_benchmarks()
{
  std::map<std::string, Permutation> specs;
  for ( auto const& f : benchmark_suite() )
    specs.emplace( f.name, f.spec );
  MethodSet const all{Method::revcol, Method::mmd, Method::bubble};
  auto const shift4 = revcol_synth( specs.at( "shift4" ), RevColConfig::preset( "e" ) );
  auto const rd32 = hybrid_synth( specs.at( "rd32" ), all );
  auto const decode42 = hybrid_synth( specs.at( "decode42" ), all );
  auto const f449 = hybrid_synth( specs.at( "4_49" ), all );
  bool const ok = verify( shift4, specs.at( "shift4" ) ) && verify( rd32, specs.at( "rd32" ) ) &&
                  verify( decode42, specs.at( "decode42" ) ) && verify( f449, specs.at( "4_49" ) ) &&
                  shift4.num_gates() <= 6 && rd32.num_gates() <= 6 && decode42.num_gates() <= 12 &&
                  f449.num_gates() <= 18;
  return {ok, fmt( "shift4 revcol %zu (<=6), rd32 hybrid %zu (<=6), decode42 hybrid %zu (<=12), 4_49 hybrid %zu (<=18)",
                   shift4.num_gates(), rd32.num_gates(), decode42.num_gates(), f449.num_gates() )};
}

Outcome inverted_column_example()
{
  Permutation const spec( 3, {6, 7, 4, 2, 5, 3, 0, 1} );
  RevColConfig cfg;
  cfg.column_orders = ColumnOrders::fixed;
  cfg.fixed_order = {1, 2, 0}; // (b, a, c) with a the leftmost printed bit
  auto const plain = revcol_synth( spec, cfg );
  cfg.inverted_column = true;
  auto const inverted = revcol_synth( spec, cfg );
  bool const ok = verify( plain, spec ) && verify( inverted, spec ) && plain.num_gates() == 13 && inverted.num_gates() == 8;
  return {ok, fmt( "order (b,a,c): %zu gates without inversion (13), %zu with (8)", plain.num_gates(),
                   inverted.num_gates() )};
}

Outcome transpositions()
{
  std::mt19937_64 rng( 6 );
  int samples = 0, bad = 0, strict = 0;
  for ( ; samples < 600; ++samples )
  {
    unsigned const n = 1 + samples % 6;
    std::uniform_int_distribution<Word> word( 0, ( Word{1} << n ) - 1 );
    Word const u = word( rng );
    Word v = word( rng );
    while ( v == u )
      v = word( rng );
    unsigned const h = static_cast<unsigned>( std::popcount( u ^ v ) );
    auto const cascade = synth_transposition_cascade( u, v, n );
    auto const aba = synth_transposition_aba( u, v, n );
    bool ok = cascade.num_gates() == 2 * h - 1 && aba.num_gates() == 2 * h - 1;
    for ( Word x = 0; x < ( Word{1} << n ); ++x )
    {
      Word const want = x == u ? v : x == v ? u : x;
      ok = ok && simulate( cascade, x ) == want && simulate( aba, x ) == want;
    }
    auto const qa = quantum_cost( aba ), qc = quantum_cost( cascade );
    ok = ok && qa <= qc;
    if ( h >= 2 && n >= 3 )
    {
      ++strict;
      ok = ok && qa < qc;
    }
    bad += !ok;
  }
  return {bad == 0, fmt( "%d samples (%d with h>=2, n>=3), %d violations", samples, strict, bad )};
}

Outcome matching()
{
  auto const two_pair = min_weight_perfect_matching( build_instance( {0b010, 0b000}, {0b111, 0b100}, 3 ) );
  std::set<std::pair<Word, Word>> const got( two_pair.pairs.begin(), two_pair.pairs.end() );
  bool const two_pair_ok = two_pair.total_weight == 4 && got == std::set<std::pair<Word, Word>>{{0b010, 0b111}, {0b000, 0b100}};

  std::mt19937_64 rng( 7 );
  int instances = 0, checked = 0, bad = 0;
  for ( ; checked < 250; ++instances )
  {
    unsigned const n = 3 + instances % 4;
    std::size_t const k = 1 + instances % 6;
    if ( 2 * k > ( std::size_t{1} << n ) )
      continue;
    std::vector<Word> words( std::size_t{1} << n );
    std::iota( words.begin(), words.end(), 0u );
    std::shuffle( words.begin(), words.end(), rng );
    std::vector<Word> const left( words.begin(), words.begin() + k ), right( words.begin() + k, words.begin() + 2 * k );
    auto const m = min_weight_perfect_matching( build_instance( left, right, n ) );
    std::vector<std::size_t> perm( k );
    std::iota( perm.begin(), perm.end(), 0u );
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do
    {
      std::int64_t w = 0;
      for ( std::size_t r = 0; r < k; ++r )
        w += 2 * std::popcount( left[r] ^ right[perm[r]] ) - 1;
      best = std::min( best, w );
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
    bad += m.total_weight != best;
    ++checked;
  }
  return {two_pair_ok && bad == 0, fmt( "two-pair instance %s; %d random instances, %d differ from brute force",
                                   two_pair_ok ? "ok" : "WRONG", checked, bad )};
}

Outcome directional()
{
  std::mt19937_64 rng( 1 );
  double rg = 0, rq = 0, mg = 0, mq = 0;
  for ( int i = 0; i < 16; ++i )
  {
    auto const spec = random_permutation( i < 8 ? 4 : 5, rng );
    auto const r = cost_report( revcol_synth( spec, RevColConfig::preset( "e" ) ) );
    auto const m = cost_report( mmd_synth( spec ) );
    rg += r.gate_count;
    rq += r.quantum_cost;
    mg += m.gate_count;
    mq += m.quantum_cost;
  }
  return {rg < mg && rq > mq, fmt( "mean gc revcol %.3f < mmd %.3f; mean qc revcol %.2f > mmd %.2f", rg / 16, mg / 16,
                                   rq / 16, mq / 16 )};
}

Outcome formats()
{
  int files = 0, mismatched = 0;
  for ( auto const* name : {"empty3.real", "mixed4.real", "transposition4.real"} )
  {
    std::ifstream in( std::string( REVSYNTH_GOLDEN_DIR ) + "/" + name );
    std::stringstream ss;
    ss << in.rdbuf();
    ++files;
    mismatched += ss.str().empty() || write_circuit( read_circuit( ss.str() ) ) != ss.str();
  }
  int histograms = 0, bad = 0;
  for ( std::string c : {"revcol-a", "revcol-b", "revcol-c", "revcol-d", "revcol-e", "mmd-bi0-mp1"} )
  {
    std::istringstream csv( histogram_csv( exhaustive3.at( c ) ) );
    std::string line;
    std::getline( csv, line );
    long total = 0, identity = 0;
    while ( std::getline( csv, line ) )
    {
      if ( line.empty() || line.front() == '#' )
        continue;
      auto const comma = line.find( ',' );
      long const gc = std::stol( line.substr( 0, comma ) ), count = std::stol( line.substr( comma + 1 ) );
      total += count;
      if ( gc == 0 )
        identity = count;
    }
    ++histograms;
    bad += total != 40320 || identity != 1;
  }
  return {mismatched == 0 && bad == 0,
          fmt( "%d golden circuit files, %d not bit-exact; %d bench3 histograms, %d not summing to 40320 with identity 1",
               files, mismatched, histograms, bad )};
}

} // namespace

int main()
{
  std::setvbuf( stdout, nullptr, _IOLBF, 0 );
  struct Criterion
  {
    char const* name;
    Outcome ( *run )();
  };
  Criterion const criteria[] = {
      {"1 soundness", soundness},
      {"2 3-bit averages", three_bit_averages},
      {"3 worst-case bound", worst_case},
      {"4 named benchmarks", named_benchmarks},
      {"5 inverted column example", inverted_column_example},
      {"6 transposition constructions", transpositions},
      {"7 matching optimality", matching},
      {"8 directional costs", directional},
      {"9 formats", formats},
  };
  std::vector<std::string> summary;
  bool all = true;
  for ( auto const& c : criteria )
  {
    auto const out = c.run();
    all = all && out.pass;
    auto const line = fmt( "[%s] %s: %s", out.pass ? "PASS" : "FAIL", c.name, out.detail.c_str() );
    std::printf( "%s\n", line.c_str() );
    std::fflush( stdout );
    summary.push_back( line );
  }
  std::printf( "\nsummary\n" );
  for ( auto const& s : summary )
    std::printf( "%s\n", s.c_str() );
  return all ? 0 : 1;
}
