#pragma once

#include <revsynth/permutation.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace revsynth
{

enum class Polarity : std::uint8_t
{
  positive,
  negative
};

struct Control
{
  unsigned line;
  Polarity polarity{Polarity::positive};

  friend bool operator==( Control const&, Control const& ) = default;
};

inline Control pos( unsigned line ) { return {line, Polarity::positive}; }
inline Control neg( unsigned line ) { return {line, Polarity::negative}; }

enum class GateKind : std::uint8_t
{
  toffoli, ///< mixed-polarity multi-controlled Toffoli (NOT / CNOT / Toffoli / Tof_n)
  swap     ///< multi-controlled SWAP (SWAP / Fredkin / Fred_n)
};

/*! \brief A single reversible gate.
 *
 * Controls are kept as two line masks, so a line can carry at most one
 * control. A Toffoli flips `target` when every positive control reads 1 and
 * every negative control reads 0; a swap exchanges `target` and `target2`
 * under the same condition.
 */
class Gate
{
public:
  /// Throws `std::invalid_argument` on duplicate controls or a control on a target.
  static Gate toffoli( std::span<Control const> controls, unsigned target );
  static Gate toffoli( std::initializer_list<Control> controls, unsigned target );
  static Gate swap( std::span<Control const> controls, unsigned a, unsigned b );
  static Gate swap( std::initializer_list<Control> controls, unsigned a, unsigned b );
  static Gate from_masks( GateKind kind, Word positive, Word negative, unsigned target, unsigned target2 = 0 );

  static Gate not_gate( unsigned target ) { return toffoli( {}, target ); }
  static Gate cnot( Control control, unsigned target ) { return toffoli( {control}, target ); }

  GateKind kind() const noexcept { return kind_; }
  bool is_toffoli() const noexcept { return kind_ == GateKind::toffoli; }
  bool is_swap() const noexcept { return kind_ == GateKind::swap; }

  unsigned target() const noexcept { return target_; }
  /// Second swapped line; only meaningful for swap gates.
  unsigned target2() const noexcept { return target2_; }

  Word positive_controls() const noexcept { return positive_; }
  Word negative_controls() const noexcept { return negative_; }
  Word control_mask() const noexcept { return positive_ | negative_; }
  unsigned num_controls() const noexcept;
  /// Controls in ascending line order.
  std::vector<Control> controls() const;

  Word target_mask() const noexcept;
  /// Every line the gate reads or writes.
  Word support() const noexcept { return control_mask() | target_mask(); }

  bool fires( Word x ) const noexcept
  {
    return ( x & positive_ ) == positive_ && ( x & negative_ ) == 0u;
  }

  Word apply( Word x ) const noexcept
  {
    if ( !fires( x ) )
      return x;
    if ( kind_ == GateKind::toffoli )
      return x ^ ( Word{1} << target_ );
    Word const diff = ( ( x >> target_ ) ^ ( x >> target2_ ) ) & 1u;
    return x ^ ( diff << target_ ) ^ ( diff << target2_ );
  }

  friend bool operator==( Gate const&, Gate const& ) = default;

private:
  Gate() = default;

  GateKind kind_{GateKind::toffoli};
  Word positive_{0};
  Word negative_{0};
  std::uint8_t target_{0};
  std::uint8_t target2_{0};
};

inline Word gate_apply( Gate const& g, Word x ) { return g.apply( x ); }

/// Ordered gate list over `width` lines; gates apply leftmost first.
class Circuit
{
public:
  Circuit() = default;
  explicit Circuit( unsigned width ) : width_( width ) {}
  Circuit( unsigned width, std::vector<Gate> gates );

  unsigned width() const noexcept { return width_; }
  std::span<Gate const> gates() const noexcept { return gates_; }
  std::size_t num_gates() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// Throws `std::invalid_argument` if the gate touches a line >= width.
  void push_back( Gate const& g );
  void append( Circuit const& other );

  friend bool operator==( Circuit const&, Circuit const& ) = default;

private:
  unsigned width_{0};
  std::vector<Gate> gates_;
};

Word simulate( Circuit const& c, Word x );
Permutation circuit_to_permutation( Circuit const& c );
bool verify( Circuit const& c, Permutation const& spec );

/// First input on which the circuit disagrees with `spec`, if any.
std::optional<Word> first_mismatch( Circuit const& c, Permutation const& spec );

/// Gate order reversed; realizes the inverse permutation since every gate is an involution.
Circuit reversed( Circuit const& c );

/// Adds one control to every gate. Throws if `line` is in the support of any gate.
Circuit add_control( Circuit const& c, unsigned line, Polarity polarity );

/*! \brief Relabels line `i` of `c` to `line_map[i]` in a circuit of `new_width` lines.
 *
 * Throws `std::invalid_argument` if the map is not injective into `[0, new_width)`.
 */
Circuit embed( Circuit const& c, std::span<unsigned const> line_map, unsigned new_width );

} // namespace revsynth
