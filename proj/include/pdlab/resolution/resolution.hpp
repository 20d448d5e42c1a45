#pragma once

#include <optional>
#include <vector>

#include "pdlab/groebner/ideal.hpp"
#include "pdlab/resolution/betti.hpp"
#include "pdlab/resolution/module.hpp"

namespace pdlab {

struct ResolveOptions {
  /// Only generators of internal degree <= limit are computed; the Betti
  /// table is then exact in those degrees and marked truncated.
  std::optional<int> degree_limit;
  std::size_t max_frame_elements = 20'000'000;
  std::size_t max_pairs = 5'000'000;
  /// Explicitly minimalize the frame and run the complex/minimality checks.
  bool minimize = true;
  /// Keep the minimal differentials as polynomial matrices (implies minimize).
  bool keep_differentials = false;
};

struct ResolutionChecks {
  bool performed = false;
  bool frame_is_complex = false;    // nonminimal frame: d o d = 0
  bool minimal_is_complex = false;  // after minimalization: d o d = 0
  bool minimal = false;             // no constant entries remain
  bool ranks_agree = false;         // minimal ranks == Betti numbers from constant ranks

  bool all() const { return performed && frame_is_complex && minimal_is_complex && minimal && ranks_agree; }
};

struct ResolutionStats {
  std::size_t basis_size = 0;             // Groebner basis of the ideal
  std::vector<std::size_t> frame_ranks;   // nonminimal ranks per homological degree
  std::size_t frame_terms = 0;
};

class Resolution {
 public:
  const BettiTable& betti() const { return betti_; }
  const ResolutionChecks& checks() const { return checks_; }
  const ResolutionStats& stats() const { return stats_; }
  /// d_1, ..., d_pd of the minimal resolution when requested.
  const std::vector<PresentationMatrix>& differentials() const { return differentials_; }

 private:
  friend Resolution resolve(const IdealPresentation&, const ResolveOptions&);
  BettiTable betti_;
  ResolutionChecks checks_;
  ResolutionStats stats_;
  std::vector<PresentationMatrix> differentials_;
};

/// Minimal graded free resolution of R/I: a Schreyer frame from the reduced
/// Groebner basis, Betti numbers from the ranks of its degree-zero parts,
/// and (optionally) explicit minimalization with consistency checks.
Resolution resolve(const IdealPresentation& ideal, const ResolveOptions& options = {});

/// resolve() without the explicit minimalization.
BettiTable betti_table(const IdealPresentation& ideal, std::optional<int> degree_limit = std::nullopt);

/// Independent route: minimal generators of I, then iterated minimal
/// syzygies until the kernel vanishes. Returns d_1, ..., d_pd.
std::vector<PresentationMatrix> resolve_by_syzygies(const IdealPresentation& ideal,
                                                    const SyzygyOptions& options = {});

/// Betti table read off the twists of a chain of minimal differentials.
BettiTable betti_of(const std::vector<PresentationMatrix>& differentials);
bool is_complex(const std::vector<PresentationMatrix>& differentials);
bool is_minimal(const std::vector<PresentationMatrix>& differentials);

}  // namespace pdlab
