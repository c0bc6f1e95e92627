#include <revsynth/spec_io.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace revsynth
{

ParseError::ParseError( std::string const& message, std::size_t line, std::size_t column )
    : std::runtime_error( line ? message + " (line " + std::to_string( line ) + ", column " + std::to_string( column ) + ")"
                               : message ),
      line_( line ),
      column_( column )
{
}

namespace
{

struct Token
{
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize( std::string_view text )
{
  std::vector<Token> tokens;
  std::size_t line = 1, column = 1;
  for ( std::size_t i = 0; i < text.size(); )
  {
    char const ch = text[i];
    if ( ch == '#' )
    {
      while ( i < text.size() && text[i] != '\n' )
        ++i;
      continue;
    }
    if ( ch == '\n' )
    {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if ( std::isspace( static_cast<unsigned char>( ch ) ) || ch == ',' )
    {
      ++column;
      ++i;
      continue;
    }
    Token tok{{}, line, column};
    while ( i < text.size() && text[i] != '#' && text[i] != ',' && !std::isspace( static_cast<unsigned char>( text[i] ) ) )
    {
      tok.text.push_back( text[i] );
      ++i;
      ++column;
    }
    tokens.push_back( std::move( tok ) );
  }
  return tokens;
}

std::uint64_t to_number( Token const& tok )
{
  std::uint64_t value = 0;
  for ( char c : tok.text )
  {
    if ( !std::isdigit( static_cast<unsigned char>( c ) ) )
      throw ParseError( "expected a decimal number, got '" + tok.text + "'", tok.line, tok.column );
    value = value * 10u + static_cast<std::uint64_t>( c - '0' );
    if ( value > ( std::uint64_t{1} << 32 ) )
      throw ParseError( "number too large: '" + tok.text + "'", tok.line, tok.column );
  }
  return value;
}

} // namespace

Permutation parse_spec( std::string_view text )
{
  auto const tokens = tokenize( text );
  if ( tokens.empty() )
    throw ParseError( "empty specification" );
  auto const width = to_number( tokens[0] );
  if ( width > max_width )
    throw ParseError( "width " + std::to_string( width ) + " exceeds " + std::to_string( max_width ), tokens[0].line,
                      tokens[0].column );
  std::size_t const n = std::size_t{1} << width;
  if ( tokens.size() - 1u != n )
  {
    auto const& where = tokens.size() - 1u > n ? tokens[n + 1u] : tokens.back();
    throw ParseError( "expected " + std::to_string( n ) + " output values, found " + std::to_string( tokens.size() - 1u ),
                      where.line, where.column );
  }
  std::vector<Word> outputs( n );
  std::vector<Token const*> first_seen( n, nullptr );
  for ( std::size_t i = 0; i < n; ++i )
  {
    auto const& tok = tokens[i + 1u];
    auto const value = to_number( tok );
    if ( value >= n )
      throw ParseError( "value " + tok.text + " out of range for width " + std::to_string( width ), tok.line, tok.column );
    if ( first_seen[value] )
    {
      throw ParseError( "value " + tok.text + " repeated (first at line " + std::to_string( first_seen[value]->line ) +
                            ", column " + std::to_string( first_seen[value]->column ) + ")",
                        tok.line, tok.column );
    }
    first_seen[value] = &tok;
    outputs[i] = static_cast<Word>( value );
  }
  return Permutation( static_cast<unsigned>( width ), std::move( outputs ) );
}

std::string write_spec( Permutation const& p )
{
  std::ostringstream os;
  os << p.width() << '\n';
  for ( Word x = 0; x < p.size(); ++x )
    os << ( x ? " " : "" ) << p[x];
  os << '\n';
  return os.str();
}

Permutation read_spec_file( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw ParseError( "cannot open specification file '" + path + "'" );
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec( buffer.str() );
}

} // namespace revsynth
