#pragma once

#include <revsynth/circuit.hpp>
#include <revsynth/metrics.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revsynth
{

using Synthesizer = std::function<Circuit( Permutation const& )>;

/// Synthesizer for a benchmark configuration: RevCol presets `a`..`e` or `mmd`.
Synthesizer bench3_synthesizer( std::string_view config );

/// The `index`-th permutation of `2^width` values in lexicographic order.
Permutation nth_permutation( unsigned width, std::uint64_t index );

struct HistogramResult
{
  std::map<std::uint64_t, std::uint64_t> histogram; ///< gate count -> number of functions
  std::uint64_t functions{0};
  std::uint64_t max_gate_count{0};
  std::uint64_t verification_failures{0};
  double average{0};
  double wall_seconds{0};
};

/*! \brief Synthesizes and verifies every function of `width` lines.
 *
 * Work is split into contiguous index ranges over `jobs` threads; the
 * histograms are merged afterwards, so the result does not depend on `jobs`.
 */
HistogramResult run_exhaustive( unsigned width, Synthesizer const& synth, unsigned jobs = 1 );

/// `gate_count,function_count` rows in ascending gate count, then `# average` and `# wall_seconds` comment lines.
std::string histogram_csv( HistogramResult const& r );

struct BenchmarkFunction
{
  std::string name;
  Permutation spec;
  std::optional<unsigned> published_revcol_gc;
  std::optional<unsigned> published_hybrid_gc;
};

/// 4-bit benchmark functions with complete published specifications, plus 3_17.
std::vector<BenchmarkFunction> benchmark_suite();

struct SuiteRow
{
  std::string name;
  std::string method;
  CostReport cost;
  bool verified{false};
  std::optional<unsigned> published_gc;
};

/// RevCol (config e), MMD and hybrid on every suite function.
std::vector<SuiteRow> run_suite();

/// `name,method,gc,qc,ld,verified,published_gc`
std::string suite_csv( std::vector<SuiteRow> const& rows );

} // namespace revsynth
