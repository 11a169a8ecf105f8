#include "core/distances.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

#include "core/errors.hpp"
#include "core/matching.hpp"
#include "core/pruning.hpp"

namespace stairprune {

Rational pair_interleaving(const Upset& u, const Upset& v) {
  Rational forward = minshift(u, v);
  Rational backward = minshift(v, u);
  Rational best = forward > backward ? forward : backward;
  return best > 0 ? best : Rational(0);
}

bool inf_refinement(const Module& p, const Module& m) {
  if (p.is_zero() && m.is_zero()) return true;
  if (!p.is_zero() && !m.is_zero() && p.dim() != m.dim())
    throw validation_error("dimension mismatch between modules");
  if (p.supdim() != m.supdim()) return false;

  const std::size_t r = static_cast<std::size_t>(p.supdim());
  std::vector<std::vector<bool>> edge(r, std::vector<bool>(r, false));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < r; ++l)
      edge[i][l] = subseteq(p.summands()[i], m.summands()[l]);
  return has_perfect_matching(edge, static_cast<int>(r));
}

namespace {

std::vector<std::vector<Rational>> threshold_matrix(const Module& m) {
  const std::size_t r = static_cast<std::size_t>(m.supdim());
  std::vector<std::vector<Rational>> t(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) t[i][j] = minshift(m.summands()[i], m.summands()[j]);
  return t;
}

AdjacencyMatrix adjacency_at(const std::vector<std::vector<Rational>>& t, const Rational& bound) {
  const std::size_t r = t.size();
  AdjacencyMatrix adj(r, std::vector<bool>(r, false));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) adj[i][j] = t[i][j] <= bound;
  return adj;
}

// Evaluates the all-delta refinement predicate for one module pair. Reach-set
// intersections and their pairwise minshifts depend only on which summand sets
// are intersected, so they are interned once and reused across every (eps,
// delta) the search visits.
class RefinementOracle {
 public:
  RefinementOracle(const Module& m, const Module& n)
      : m_(m), n_(n), r_(static_cast<std::size_t>(m.supdim())) {
    if (m.supdim() != n.supdim() || m.is_zero())
      throw std::logic_error("oracle needs equal nonzero summand counts");
    if (m.dim() != n.dim()) throw validation_error("dimension mismatch between modules");
    if (m.supdim() > 64) throw validation_error("all-delta comparison supports at most 64 summands");
    tm_ = threshold_matrix(m_);
    tn_ = threshold_matrix(n_);
    for (const auto& t : {std::cref(tm_), std::cref(tn_)})
      for (const auto& row : t.get())
        for (const auto& v : row)
          if (v > 0) half_.push_back(v / 2);
    std::sort(half_.begin(), half_.end());
    half_.erase(std::unique(half_.begin(), half_.end()), half_.end());
  }

  // the per-delta condition, both directions
  bool check_at(const Rational& eps, const Rational& delta) {
    return direction(eps, delta, /*m_first=*/true) && direction(eps, delta, /*m_first=*/false);
  }

  bool check_all(const Rational& eps) {
    for (const auto& delta : sample_points(eps))
      if (!check_at(eps, delta)) return false;
    return true;
  }

  DeltaProfile profile(const Rational& eps) {
    DeltaProfile out;
    out.events = event_points(eps);
    for (const auto& delta : sample_points(eps))
      out.samples.emplace_back(delta, check_at(eps, delta));
    return out;
  }

  // delta values where any of the four pruning structures can change
  std::vector<Rational> event_points(const Rational& eps) const {
    std::vector<Rational> events{Rational(0)};
    for (const auto& h : half_) {
      events.push_back(h);
      if (h - eps > 0) events.push_back(h - eps);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    return events;
  }

  // every event, every midpoint of consecutive events, and one point past the
  // last event; the predicate is constant between events, so these cover all
  // of [0, infinity)
  std::vector<Rational> sample_points(const Rational& eps) const {
    const std::vector<Rational> events = event_points(eps);
    std::vector<Rational> samples;
    for (std::size_t k = 0; k < events.size(); ++k) {
      samples.push_back(events[k]);
      if (k + 1 < events.size()) samples.push_back((events[k] + events[k + 1]) / 2);
    }
    samples.push_back(events.back() + 1);
    return samples;
  }

 private:
  using Mask = std::uint64_t;

  bool direction(const Rational& eps, const Rational& delta, bool m_first) {
    const auto& t_fine = m_first ? tm_ : tn_;
    const auto& t_coarse = m_first ? tn_ : tm_;
    const auto reach_fine = reachable_sets(adjacency_at(t_fine, 2 * (eps + delta)));
    const auto reach_coarse = reachable_sets(adjacency_at(t_coarse, 2 * delta));

    std::vector<int> fine_ids(r_), coarse_ids(r_);
    for (std::size_t l = 0; l < r_; ++l) {
      fine_ids[l] = intern(m_first, reach_fine[l]);
      coarse_ids[l] = intern(!m_first, reach_coarse[l]);
    }

    // summand l of the finer pruning lands inside summand s of the coarser one
    // exactly when the shared delta cancels: intersection_l <= eps-shift of
    // intersection_s
    std::vector<std::vector<bool>> edge(r_, std::vector<bool>(r_, false));
    for (std::size_t l = 0; l < r_; ++l)
      for (std::size_t s = 0; s < r_; ++s)
        edge[l][s] = cached_minshift(m_first, fine_ids[l], coarse_ids[s]) <= eps;
    return has_perfect_matching(edge, static_cast<int>(r_));
  }

  int intern(bool of_m, const std::vector<int>& reach_set) {
    Mask mask = 0;
    for (int v : reach_set) mask |= Mask(1) << v;
    auto& ids = of_m ? idm_ : idn_;
    auto& store = of_m ? vm_ : vn_;
    const auto& summands = (of_m ? m_ : n_).summands();
    auto [it, inserted] = ids.try_emplace(mask, static_cast<int>(store.size()));
    if (inserted) {
      Upset acc = summands[static_cast<std::size_t>(reach_set.front())];
      for (std::size_t k = 1; k < reach_set.size(); ++k)
        acc = intersect(acc, summands[static_cast<std::size_t>(reach_set[k])]);
      store.push_back(std::move(acc));
    }
    return it->second;
  }

  const Rational& cached_minshift(bool m_to_n, int from_id, int to_id) {
    auto& cache = m_to_n ? ms_mn_ : ms_nm_;
    auto [it, inserted] = cache.try_emplace({from_id, to_id});
    if (inserted) {
      const Upset& from = (m_to_n ? vm_ : vn_)[static_cast<std::size_t>(from_id)];
      const Upset& to = (m_to_n ? vn_ : vm_)[static_cast<std::size_t>(to_id)];
      it->second = minshift(from, to);
    }
    return it->second;
  }

  Module m_, n_;
  std::size_t r_;
  std::vector<std::vector<Rational>> tm_, tn_;
  std::vector<Rational> half_;  // halves of the positive thresholds of both modules
  std::map<Mask, int> idm_, idn_;
  std::vector<Upset> vm_, vn_;
  std::map<std::pair<int, int>, Rational> ms_mn_, ms_nm_;
};

}  // namespace

bool DeltaProfile::value_at(const Rational& delta) const {
  if (delta < 0) throw validation_error("delta must be nonnegative");
  // find the sample representing delta's structural interval
  auto it = std::upper_bound(events.begin(), events.end(), delta);
  const std::size_t idx = static_cast<std::size_t>(it - events.begin()) - 1;
  if (events[idx] == delta) return samples[2 * idx].second;  // exactly on an event
  // strictly inside (events[idx], events[idx+1]) or past the last event
  return samples[2 * idx + 1].second;
}

bool DeltaProfile::conjunction() const {
  for (const auto& [delta, ok] : samples)
    if (!ok) return false;
  return true;
}

bool refinement_all_delta(const Module& m, const Module& n, const Rational& eps) {
  if (eps < 0) throw validation_error("eps must be nonnegative");
  if (m.is_zero() && n.is_zero()) return true;
  if (m.supdim() != n.supdim()) return false;
  return RefinementOracle(m, n).check_all(eps);
}

DeltaProfile refinement_delta_profile(const Module& m, const Module& n, const Rational& eps) {
  if (eps < 0) throw validation_error("eps must be nonnegative");
  return RefinementOracle(m, n).profile(eps);
}

bool refinement_at_delta(const Module& m, const Module& n, const Rational& eps,
                         const Rational& delta) {
  if (eps < 0 || delta < 0) throw validation_error("shift amounts must be nonnegative");
  return inf_refinement(prune(m, eps + delta), prune(n, delta)) &&
         inf_refinement(prune(n, eps + delta), prune(m, delta));
}

namespace {

// candidate values the exact mode may snap a pruning-distance bracket to
std::vector<Rational> exact_mode_candidates(const Module& m, const Module& n,
                                            const Rational& lo, const Rational& hi) {
  const int r = m.supdim();
  if (r > 16) throw validation_error("exact mode supports at most 16 summands");

  std::vector<Rational> half;  // halves of positive thresholds, both modules
  for (const Module* mod : {&m, &n}) {
    const auto t = threshold_matrix(*mod);
    for (const auto& row : t)
      for (const auto& v : row)
        if (v > 0) half.push_back(v / 2);
  }

  std::vector<Rational> candidates{Rational(0)};
  for (std::size_t a = 0; a < half.size(); ++a) {
    candidates.push_back(half[a]);
    for (std::size_t b = a + 1; b < half.size(); ++b) {
      Rational d = half[a] - half[b];
      candidates.push_back(d >= 0 ? d : -d);
    }
  }

  // intersections over every nonempty summand subset, both modules
  auto subset_intersections = [](const Module& mod) {
    const std::size_t n_masks = std::size_t(1) << mod.supdim();
    std::vector<std::optional<Upset>> inter(n_masks);
    for (std::size_t mask = 1; mask < n_masks; ++mask) {
      const int low = std::countr_zero(mask);
      const std::size_t rest = mask & (mask - 1);
      const Upset& base = mod.summands()[static_cast<std::size_t>(low)];
      inter[mask] = rest ? intersect(*inter[rest], base) : base;
    }
    return inter;
  };
  const auto im = subset_intersections(m);
  const auto in = subset_intersections(n);
  for (std::size_t a = 1; a < im.size(); ++a)
    for (std::size_t b = 1; b < in.size(); ++b) {
      for (const Rational& v : {minshift(*im[a], *in[b]), minshift(*in[b], *im[a])})
        candidates.push_back(v > 0 ? v : Rational(0));
    }

  // only values inside the bracket can verify; the predicate already failed at lo
  std::vector<Rational> filtered;
  for (auto& c : candidates)
    if (c > lo && c <= hi) filtered.push_back(std::move(c));
  std::sort(filtered.begin(), filtered.end());
  filtered.erase(std::unique(filtered.begin(), filtered.end()), filtered.end());
  return filtered;
}

}  // namespace

DistanceResult pruning_distance(const Module& m, const Module& n, const Rational& tol,
                                PruningDistanceMode mode) {
  if (tol <= 0) throw validation_error("tolerance must be positive");
  if (m.supdim() != n.supdim()) return DistanceResult::infinite();
  if (m.is_zero()) return DistanceResult::exact_value(Rational(0));
  if (m.dim() != n.dim()) throw validation_error("dimension mismatch between modules");

  RefinementOracle oracle(m, n);
  if (oracle.check_all(Rational(0))) return DistanceResult::exact_value(Rational(0));

  // bracket by doubling, then bisect; the predicate is monotone in eps
  Rational lo(0), hi(1);
  int doublings = 0;
  while (!oracle.check_all(hi)) {
    lo = hi;
    hi *= 2;
    if (++doublings > 256) throw std::logic_error("pruning distance failed to bracket");
  }
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    if (oracle.check_all(mid))
      hi = mid;
    else
      lo = mid;
  }

  if (mode == PruningDistanceMode::exact) {
    for (const auto& c : exact_mode_candidates(m, n, lo, hi)) {
      if (!oracle.check_all(c)) continue;
      Rational probe = c - tol;
      if (probe < 0) probe = 0;
      if (!oracle.check_all(probe)) return DistanceResult::exact_value(c);
    }
  }
  return DistanceResult::bracketed(lo, hi);
}

namespace {

std::vector<std::vector<Rational>> pair_cost_matrix(const Module& m, const Module& n) {
  const std::size_t r = static_cast<std::size_t>(m.supdim());
  std::vector<std::vector<Rational>> cost(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      cost[i][j] = pair_interleaving(m.summands()[i], n.summands()[j]);
  return cost;
}

}  // namespace

DistanceResult bottleneck_distance(const Module& m, const Module& n) {
  if (m.is_zero() && n.is_zero()) return DistanceResult::exact_value(Rational(0));
  if (m.supdim() != n.supdim()) return DistanceResult::infinite();
  if (m.dim() != n.dim()) throw validation_error("dimension mismatch between modules");

  const auto cost = pair_cost_matrix(m, n);
  const std::size_t r = cost.size();
  std::vector<Rational> levels;
  for (const auto& row : cost) levels.insert(levels.end(), row.begin(), row.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  auto feasible = [&](const Rational& bound) {
    std::vector<std::vector<bool>> edge(r, std::vector<bool>(r, false));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) edge[i][j] = cost[i][j] <= bound;
    return has_perfect_matching(edge, static_cast<int>(r));
  };

  // smallest cost level admitting a perfect matching; the largest always does
  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(levels[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return DistanceResult::exact_value(levels[lo]);
}

DistanceResult bottleneck_bruteforce(const Module& m, const Module& n) {
  if (m.is_zero() && n.is_zero()) return DistanceResult::exact_value(Rational(0));
  if (m.supdim() != n.supdim()) return DistanceResult::infinite();
  if (m.dim() != n.dim()) throw validation_error("dimension mismatch between modules");
  if (m.supdim() > 7) throw validation_error("brute-force bottleneck supports at most 7 summands");

  const auto cost = pair_cost_matrix(m, n);
  const std::size_t r = cost.size();
  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = i;

  bool first = true;
  Rational best;
  do {
    Rational worst(0);
    for (std::size_t i = 0; i < r; ++i)
      if (cost[i][perm[i]] > worst) worst = cost[i][perm[i]];
    if (first || worst < best) {
      best = worst;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return DistanceResult::exact_value(best);
}

}  // namespace stairprune
