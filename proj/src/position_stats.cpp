#include "chunkorder/position_stats.hpp"

#include <cmath>

#include "chunkorder/special_functions.hpp"

namespace chunkorder {

std::vector<PositionSample> relative_positions(const Corpus& c, TagLabel fc) {
  std::vector<PositionSample> samples;
  for (const Sentence& s : c.sentences) {
    const std::size_t n = s.chunks.size();
    if (n == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (s.chunks[i].label != fc) continue;
      const double rel = n == 1 ? 0.5 : double(i) / double(n - 1);
      samples.push_back({fc, rel, s.id});
    }
  }
  return samples;
}

TestResult chi_square_uniform(std::span<const PositionSample> samples) {
  if (samples.empty()) raise(Errc::empty_samples, "chi_square_uniform needs samples");
  double front = 0.0;
  for (const PositionSample& s : samples)
    if (s.rel_pos < 0.5) front += 1.0;
  const double n = double(samples.size());
  const double back = n - front;
  const double expected = n / 2.0;
  TestResult r;
  r.statistic = (front - expected) * (front - expected) / expected +
                (back - expected) * (back - expected) / expected;
  r.df = 1.0;
  r.p_value = chi_square_sf(r.statistic, r.df);
  r.n_a = samples.size();
  return r;
}

namespace {

struct Moments {
  double mean = 0.0;
  double var = 0.0;  // unbiased (n - 1)
};

Moments moments(std::span<const double> xs) {
  Moments m;
  for (double x : xs) m.mean += x;
  m.mean /= double(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.var = ss / double(xs.size() - 1);
  return m;
}

}  // namespace

TestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2)
    raise(Errc::empty_samples, "welch_t_test needs at least two values per sample");

  const Moments ma = moments(a);
  const Moments mb = moments(b);
  TestResult r;
  r.n_a = a.size();
  r.n_b = b.size();

  if (ma.var == 0.0 && mb.var == 0.0) {
    r.degenerate = true;
    r.df = double(a.size() + b.size() - 2);
    if (ma.mean == mb.mean) {
      r.statistic = 0.0;
      r.p_value = 1.0;
    } else {
      r.statistic = ma.mean > mb.mean ? INFINITY : -INFINITY;
      r.p_value = 0.0;
    }
    return r;
  }

  const double va_n = ma.var / double(a.size());
  const double vb_n = mb.var / double(b.size());
  const double se2 = va_n + vb_n;
  r.statistic = (ma.mean - mb.mean) / std::sqrt(se2);
  r.df = se2 * se2 /
         (va_n * va_n / double(a.size() - 1) + vb_n * vb_n / double(b.size() - 1));
  r.p_value = student_t_two_sided_p(r.statistic, r.df);
  return r;
}

AnchorProbability conditional_anchor_probability(const Corpus& c, TagLabel fc,
                                                 TagLabel anchor) {
  AnchorProbability result;
  result.fc = fc;
  result.anchor = anchor;
  for (const Sentence& s : c.sentences) {
    std::size_t first_anchor = s.chunks.size();
    bool has_fc = false;
    for (std::size_t i = 0; i < s.chunks.size(); ++i) {
      if (s.chunks[i].label == anchor && first_anchor == s.chunks.size())
        first_anchor = i;
      if (s.chunks[i].label == fc) has_fc = true;
    }
    if (!has_fc || first_anchor == s.chunks.size()) continue;
    for (std::size_t i = 0; i < s.chunks.size(); ++i) {
      if (s.chunks[i].label != fc) continue;
      ++result.n_pairs;
      if (i < first_anchor) ++result.n_before;
    }
  }
  if (result.n_pairs == 0)
    raise(Errc::no_eligible_sentences,
          std::string("no sentence contains both <") + std::string(to_string(fc)) +
              "> and <" + std::string(to_string(anchor)) + ">");
  result.p_before = double(result.n_before) / double(result.n_pairs);
  result.p_after = 1.0 - result.p_before;
  return result;
}

}  // namespace chunkorder
