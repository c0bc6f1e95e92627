#include <revsynth/circuit_io.hpp>

#include <revsynth/spec_io.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace revsynth
{

std::string write_circuit( Circuit const& c )
{
  std::string out = ".version 2.0\n.numvars " + std::to_string( c.width() ) + "\n.variables";
  for ( unsigned i = 0; i < c.width(); ++i )
    out += " x" + std::to_string( i );
  out += "\n.begin\n";
  for ( auto const& g : c.gates() )
  {
    auto const controls = g.controls();
    out += g.is_toffoli() ? 't' : 'f';
    out += std::to_string( controls.size() + ( g.is_toffoli() ? 1u : 2u ) );
    for ( auto const& ctl : controls )
    {
      out += ctl.polarity == Polarity::negative ? " -x" : " x";
      out += std::to_string( ctl.line );
    }
    out += " x" + std::to_string( g.target() );
    if ( g.is_swap() )
      out += " x" + std::to_string( g.target2() );
    out += '\n';
  }
  out += ".end\n";
  return out;
}

namespace
{

std::vector<std::string_view> split_words( std::string_view line )
{
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && ( line[i] == ' ' || line[i] == '\t' || line[i] == '\r' ) )
      ++i;
    std::size_t const start = i;
    while ( i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' )
      ++i;
    if ( i > start )
      words.push_back( line.substr( start, i - start ) );
  }
  return words;
}

unsigned parse_unsigned( std::string_view s, std::size_t line_no, std::size_t column )
{
  unsigned value = 0;
  auto const [ptr, ec] = std::from_chars( s.data(), s.data() + s.size(), value );
  if ( ec != std::errc{} || ptr != s.data() + s.size() )
    throw ParseError( "expected a number, got '" + std::string( s ) + "'", line_no, column );
  return value;
}

std::size_t column_of( std::string_view line, std::string_view word )
{
  return static_cast<std::size_t>( word.data() - line.data() ) + 1u;
}

} // namespace

Circuit read_circuit( std::string_view text )
{
  std::optional<unsigned> numvars;
  std::vector<std::string> names;
  Circuit circuit;
  bool in_body = false, ended = false;
  std::size_t line_no = 0;

  auto line_index = [&]( std::string_view line, std::string_view word ) {
    for ( unsigned i = 0; i < names.size(); ++i )
    {
      if ( names[i] == word )
        return i;
    }
    throw ParseError( "unknown variable '" + std::string( word ) + "'", line_no, column_of( line, word ) );
  };

  std::size_t pos = 0;
  while ( pos <= text.size() )
  {
    std::size_t const eol = std::min( text.find( '\n', pos ), text.size() );
    std::string_view const line = text.substr( pos, eol - pos );
    pos = eol + 1u;
    ++line_no;

    auto const words = split_words( line );
    if ( words.empty() || words[0].front() == '#' )
      continue;
    if ( ended )
      throw ParseError( "content after .end", line_no, column_of( line, words[0] ) );

    auto const head = words[0];
    if ( head == ".version" )
      continue;
    if ( head == ".numvars" )
    {
      if ( words.size() != 2u )
        throw ParseError( ".numvars takes one argument", line_no, 1 );
      numvars = parse_unsigned( words[1], line_no, column_of( line, words[1] ) );
      if ( *numvars > 32u )
        throw ParseError( "too many variables", line_no, column_of( line, words[1] ) );
      continue;
    }
    if ( head == ".variables" )
    {
      for ( std::size_t i = 1; i < words.size(); ++i )
        names.emplace_back( words[i] );
      continue;
    }
    if ( head == ".begin" )
    {
      if ( !numvars )
        throw ParseError( ".begin before .numvars", line_no, 1 );
      if ( names.size() != *numvars )
        throw ParseError( ".variables does not list .numvars names", line_no, 1 );
      circuit = Circuit( *numvars );
      in_body = true;
      continue;
    }
    if ( head == ".end" )
    {
      if ( !in_body )
        throw ParseError( ".end without .begin", line_no, 1 );
      ended = true;
      continue;
    }
    if ( head.front() == '.' )
      throw ParseError( "unsupported directive '" + std::string( head ) + "'", line_no, 1 );
    if ( !in_body )
      throw ParseError( "gate outside .begin/.end", line_no, 1 );

    char const kind = head.front();
    if ( kind != 't' && kind != 'f' )
      throw ParseError( "unknown gate '" + std::string( head ) + "'", line_no, 1 );
    unsigned const k = parse_unsigned( head.substr( 1 ), line_no, 2 );
    if ( k + 1u != words.size() )
      throw ParseError( "gate '" + std::string( head ) + "' expects " + std::to_string( k ) + " lines", line_no, 1 );
    unsigned const num_targets = kind == 't' ? 1u : 2u;
    if ( k < num_targets )
      throw ParseError( "gate has too few lines", line_no, 1 );

    std::vector<Control> controls;
    for ( std::size_t i = 1; i + num_targets < words.size(); ++i )
    {
      auto w = words[i];
      Polarity p = Polarity::positive;
      if ( w.front() == '-' )
      {
        p = Polarity::negative;
        w.remove_prefix( 1 );
      }
      controls.push_back( {line_index( line, w ), p} );
    }
    try
    {
      unsigned const t = line_index( line, words[words.size() - num_targets] );
      if ( kind == 't' )
        circuit.push_back( Gate::toffoli( controls, t ) );
      else
        circuit.push_back( Gate::swap( controls, t, line_index( line, words.back() ) ) );
    }
    catch ( std::invalid_argument const& e )
    {
      throw ParseError( e.what(), line_no, 1 );
    }
  }
  if ( !ended )
    throw ParseError( "missing .end", line_no, 1 );
  return circuit;
}

Circuit read_circuit_file( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw ParseError( "cannot open circuit file '" + path + "'" );
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_circuit( buffer.str() );
}

void write_circuit_file( Circuit const& c, std::string const& path )
{
  std::ofstream out( path );
  if ( !out )
    throw std::runtime_error( "cannot write '" + path + "'" );
  out << write_circuit( c );
}

} // namespace revsynth
