// revsynth: ancilla-free reversible circuit synthesis from permutation specifications.

#include <revsynth/bench.hpp>
#include <revsynth/circuit_io.hpp>
#include <revsynth/portfolio.hpp>
#include <revsynth/spec_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace revsynth;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_parse = 2;

std::string bits( Word x, unsigned width )
{
  std::string s;
  for ( unsigned i = width; i-- > 0; )
    s += bit( x, i ) ? '1' : '0';
  return s;
}

void write_output( std::string const& text, std::string const& path )
{
  if ( path.empty() || path == "-" )
  {
    std::cout << text;
    return;
  }
  std::ofstream out( path );
  if ( !out )
    throw std::runtime_error( "cannot write '" + path + "'" );
  out << text;
}

std::vector<unsigned> parse_order( std::string const& text )
{
  std::vector<unsigned> order;
  std::stringstream ss( text );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
    order.push_back( static_cast<unsigned>( std::stoul( item ) ) );
  return order;
}

struct SynthOptions
{
  std::string method{"revcol"};
  std::string config{"e"};
  std::string order;
  std::string transposition;
  std::string spec_path;
  std::string output;
  bool partial_match{false};
  bool swap_gates{false};
  bool output_permutation{false};
  bool inverted_column{false};
};

int cmd_synth( SynthOptions const& opt )
{
  auto const spec = read_spec_file( opt.spec_path );

  HybridConfig cfg;
  if ( opt.config == "custom" )
  {
    cfg.revcol = RevColConfig{};
    cfg.revcol.partial_match = opt.partial_match;
    cfg.revcol.swap_gates = opt.swap_gates;
    cfg.revcol.output_permutation = opt.output_permutation;
    cfg.revcol.inverted_column = opt.inverted_column;
  }
  else
  {
    cfg.revcol = RevColConfig::preset( opt.config );
  }
  if ( !opt.transposition.empty() )
    cfg.revcol.transposition_mode = opt.transposition == "aba" ? TranspositionMode::aba : TranspositionMode::cascade;
  if ( !opt.order.empty() )
  {
    cfg.revcol.column_orders = ColumnOrders::fixed;
    cfg.revcol.fixed_order = parse_order( opt.order );
  }

  Circuit c = opt.method == "hybrid"
                  ? hybrid_synth( spec, {Method::revcol, Method::mmd, Method::bubble}, cfg )
                  : synth_with_method( spec, parse_method( opt.method ), cfg );
  if ( auto bad = first_mismatch( c, spec ) )
  {
    std::cerr << "internal error: synthesized circuit disagrees with the specification on input "
              << bits( *bad, spec.width() ) << '\n';
    return exit_mismatch;
  }
  write_output( write_circuit( c ), opt.output );
  auto const cost = cost_report( c );
  std::cerr << "gc=" << cost.gate_count << " qc=" << cost.quantum_cost << " ld=" << cost.logical_depth << '\n';
  return exit_ok;
}

int cmd_verify( std::string const& circuit_path, std::string const& spec_path )
{
  auto const c = read_circuit_file( circuit_path );
  auto const spec = read_spec_file( spec_path );
  if ( c.width() != spec.width() )
  {
    std::cout << "mismatch: circuit has " << c.width() << " lines, specification " << spec.width() << '\n';
    return exit_mismatch;
  }
  if ( auto bad = first_mismatch( c, spec ) )
  {
    std::cout << "mismatch: input " << bits( *bad, spec.width() ) << " gives " << bits( simulate( c, *bad ), spec.width() )
              << ", expected " << bits( spec[*bad], spec.width() ) << '\n';
    return exit_mismatch;
  }
  std::cout << "ok\n";
  return exit_ok;
}

int cmd_cost( std::string const& circuit_path )
{
  auto const cost = cost_report( read_circuit_file( circuit_path ) );
  std::cout << "gc,qc,ld\n" << cost.gate_count << ',' << cost.quantum_cost << ',' << cost.logical_depth << '\n';
  return exit_ok;
}

int cmd_bench3( std::string const& config, unsigned jobs, std::string const& output )
{
  auto const result = run_exhaustive( 3, bench3_synthesizer( config ), jobs );
  write_output( histogram_csv( result ), output );
  if ( result.verification_failures )
  {
    std::cerr << result.verification_failures << " circuits failed verification\n";
    return exit_mismatch;
  }
  return exit_ok;
}

int cmd_suite( std::string const& output )
{
  auto const rows = run_suite();
  write_output( suite_csv( rows ), output );
  for ( auto const& r : rows )
  {
    if ( !r.verified )
      return exit_mismatch;
  }
  return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{"Ancilla-free reversible logic synthesis"};
  app.require_subcommand( 1 );

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand( "synth", "Synthesize a circuit for a specification" );
  synth_cmd->add_option( "--method", synth.method, "revcol | mmd | bubble | hybrid" )
      ->check( CLI::IsMember( {"revcol", "mmd", "bubble", "hybrid"} ) );
  synth_cmd->add_option( "--config", synth.config, "a | b | c | d | e | custom" )
      ->check( CLI::IsMember( {"a", "b", "c", "d", "e", "custom"} ) );
  synth_cmd->add_option( "--order", synth.order, "fixed column order, comma-separated line indices" );
  synth_cmd->add_option( "--transposition", synth.transposition, "cascade | aba" )
      ->check( CLI::IsMember( {"cascade", "aba"} ) );
  synth_cmd->add_flag( "--partial-match", synth.partial_match, "custom config: share equal cofactor circuits" );
  synth_cmd->add_flag( "--swap-gates", synth.swap_gates, "custom config: SWAP for 2-line column exchanges" );
  synth_cmd->add_flag( "--output-permutation", synth.output_permutation, "custom config: search output line assignments" );
  synth_cmd->add_flag( "--inverted-column", synth.inverted_column, "custom config: invert heavily mismatched columns" );
  synth_cmd->add_option( "spec", synth.spec_path, "specification file" )->required();
  synth_cmd->add_option( "-o,--output", synth.output, "circuit file (default: stdout)" );

  std::string circuit_path, spec_path;
  auto* verify_cmd = app.add_subcommand( "verify", "Check a circuit against a specification" );
  verify_cmd->add_option( "circuit", circuit_path )->required();
  verify_cmd->add_option( "spec", spec_path )->required();

  auto* cost_cmd = app.add_subcommand( "cost", "Print gate count, quantum cost and logical depth" );
  cost_cmd->add_option( "circuit", circuit_path )->required();

  std::string bench_config = "e", output;
  unsigned jobs = 1;
  auto* bench_cmd = app.add_subcommand( "bench3", "Gate-count histogram over all 3-line functions" );
  bench_cmd->add_option( "--config", bench_config, "a | b | c | d | e | mmd" )
      ->check( CLI::IsMember( {"a", "b", "c", "d", "e", "mmd"} ) );
  bench_cmd->add_option( "--jobs", jobs, "worker threads" )->check( CLI::PositiveNumber );
  bench_cmd->add_option( "-o,--output", output, "CSV file (default: stdout)" );

  auto* suite_cmd = app.add_subcommand( "suite", "Run the named 4-line benchmark functions" );
  suite_cmd->add_option( "-o,--output", output, "CSV file (default: stdout)" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    int const code = app.exit( e );
    return code == 0 ? exit_ok : exit_parse;
  }

  try
  {
    if ( *synth_cmd )
      return cmd_synth( synth );
    if ( *verify_cmd )
      return cmd_verify( circuit_path, spec_path );
    if ( *cost_cmd )
      return cmd_cost( circuit_path );
    if ( *bench_cmd )
      return cmd_bench3( bench_config, jobs, output );
    if ( *suite_cmd )
      return cmd_suite( output );
  }
  catch ( ParseError const& e )
  {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_parse;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_parse;
  }
  return exit_ok;
}
