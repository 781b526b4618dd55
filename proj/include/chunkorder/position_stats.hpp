#pragma once

#include <span>
#include <string>
#include <vector>

#include "chunkorder/corpus.hpp"

namespace chunkorder {

/// One relative-position observation: a functional chunk's normalized index
/// among all chunks of its sentence (0 = first, 1 = last, 0.5 when the
/// sentence has a single chunk).
struct PositionSample {
  TagLabel label;
  double rel_pos = 0.0;
  std::string sentence_id;
};

struct TestResult {
  double statistic = 0.0;
  double df = 0.0;
  double p_value = 1.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  bool degenerate = false;  // both-constant Welch input, p by convention
};

std::vector<PositionSample> relative_positions(const Corpus& c, TagLabel fc);

/// Goodness of fit against uniformity over two bins split at 0.5
/// (rel_pos < 0.5 is "front"; the 0.5 boundary goes to the back bin).
/// df = 1, p = Q(df/2, statistic/2). Throws EmptySamples.
TestResult chi_square_uniform(std::span<const PositionSample> samples);

/// Welch unequal-variance t-test, two-sided p via the regularized
/// incomplete beta, Welch-Satterthwaite df. Needs two values per side.
/// Both sides constant: p = 1 when means agree, p = 0 otherwise, with the
/// degenerate flag set.
TestResult welch_t_test(std::span<const double> a, std::span<const double> b);

/// Pre/post counts of an FC against the first S, V or O occurrence, over
/// sentences containing both. p_after is computed as 1 - p_before so the
/// complement identity holds exactly.
struct AnchorProbability {
  TagLabel fc;
  TagLabel anchor;
  std::uint64_t n_before = 0;
  std::uint64_t n_pairs = 0;
  double p_before = 0.0;
  double p_after = 0.0;
};

/// Throws NoEligibleSentences when no sentence contains both labels.
AnchorProbability conditional_anchor_probability(const Corpus& c, TagLabel fc,
                                                 TagLabel anchor);

}  // namespace chunkorder
