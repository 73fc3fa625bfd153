#include "waring/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace waring {

namespace {

// Saturating binomial coefficient, for upfront budget checks.
std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k,
                           std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1.0L;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc + 0.5L);
}

std::uint64_t projective_point_count(int r, std::uint64_t p,
                                     std::uint64_t cap) {
  std::uint64_t total = 0, layer = 1;
  for (int i = 0; i <= r; ++i) {
    total += layer;
    if (total > cap || layer > cap) return cap + 1;
    layer *= p;
  }
  return total;
}

using FpVec = std::vector<std::uint64_t>;

FpVec to_fp_vec(const AmbientVector& v) {
  FpVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].prime_value();
  return out;
}

// Depth-first subset search over prime-field column vectors, carrying a
// pivot-normalized echelon of the chosen prefix and the reduced target.
// All per-depth state lives in preallocated buffers: the hot path never
// touches the allocator.
struct SubsetSearch {
  static constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

  std::uint64_t p;
  const std::vector<FpVec>* cols;
  FpVec target;
  int s;
  bool prune_dependent;
  bool exists_only;                 // stop on the first spanning subset
  std::atomic<bool>* found;         // shared across threads in exists mode

  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>>* hits = nullptr;
  std::uint64_t visit_cap = 0;  // 0: unlimited; else abort after this many leaves
  std::uint64_t visited = 0;

  // rows[k]/pivots[k]: echelon row added by the k-th pick (kNoPivot marks a
  // dependent pick); res[k]: target residual after k picks.
  std::vector<FpVec> rows, res;
  std::vector<std::size_t> pivots;
  FpVec scratch;

  void prepare() {
    const std::size_t n = target.size();
    rows.assign(s, FpVec(n, 0));
    pivots.assign(s, kNoPivot);
    res.assign(s + 1, FpVec(n, 0));
    res[0] = target;
    scratch.assign(n, 0);
    chosen.clear();
  }

  // Reduce cols[index] by the first `k` echelon rows into scratch.
  void load_reduced(std::size_t index, int k) {
    scratch = (*cols)[index];
    for (int i = 0; i < k; ++i) {
      if (pivots[i] == kNoPivot) continue;
      std::uint64_t c = scratch[pivots[i]];
      if (c == 0) continue;
      const std::uint64_t* row = rows[i].data();
      std::uint64_t* out = scratch.data();
      for (std::size_t j = 0; j < scratch.size(); ++j)
        out[j] = fp::sub(out[j], fp::mul(c, row[j], p), p);
    }
  }

  // Is `residual` a multiple of the reduced candidate? That is exactly
  // "target in span(prefix + candidate)".
  bool closes(const FpVec& residual, const FpVec& reduced) const {
    std::size_t piv = reduced.size();
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (reduced[j] != 0) {
        piv = j;
        break;
      }
    if (piv == reduced.size()) return false;  // dependent candidate
    std::uint64_t c = fp::mul(residual[piv], fp::inv(reduced[piv], p), p);
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (residual[j] != fp::mul(c, reduced[j], p)) return false;
    return true;
  }

  static bool is_zero(const FpVec& v) {
    for (std::uint64_t x : v)
      if (x != 0) return false;
    return true;
  }

  void run(std::size_t first, std::size_t stripe) {
    prepare();
    const std::size_t n = cols->size();
    for (std::size_t i = first; i + (s - 1) < n; i += stripe) {
      if (exists_only && found->load(std::memory_order_relaxed)) return;
      descend(i, 1);
    }
  }

  void descend(std::size_t index, int depth) {
    if (visit_cap && visited > visit_cap) return;
    const int k = depth - 1;  // picks already on the stack
    const FpVec& residual = res[k];
    load_reduced(index, k);
    bool dependent = is_zero(scratch);
    if (depth == s) {
      ++visited;
      bool hit = dependent ? is_zero(residual) : closes(residual, scratch);
      if (hit) record(index);
      return;
    }
    if (dependent && prune_dependent) return;
    if (dependent) {
      pivots[k] = kNoPivot;
      res[depth] = residual;
    } else {
      std::size_t piv = 0;
      while (scratch[piv] == 0) ++piv;
      std::uint64_t inv = fp::inv(scratch[piv], p);
      for (auto& x : scratch) x = fp::mul(x, inv, p);
      res[depth] = residual;
      std::uint64_t c = res[depth][piv];
      if (c != 0)
        for (std::size_t j = 0; j < res[depth].size(); ++j)
          res[depth][j] =
              fp::sub(res[depth][j], fp::mul(c, scratch[j], p), p);
      pivots[k] = piv;
      rows[k] = scratch;
    }
    if (exists_only && is_zero(res[depth])) {
      // Every completion spans the target (enough candidates remain by the
      // loop bounds).
      found->store(true, std::memory_order_relaxed);
      return;
    }
    chosen.push_back(index);
    const std::size_t n = cols->size();
    for (std::size_t i = index + 1; i + (s - depth - 1) < n; ++i) {
      if (exists_only && found->load(std::memory_order_relaxed)) break;
      descend(i, depth + 1);
    }
    chosen.pop_back();
  }

  void record(std::size_t last) {
    if (exists_only) {
      found->store(true, std::memory_order_relaxed);
      return;
    }
    std::vector<std::size_t> subset = chosen;
    subset.push_back(last);
    hits->push_back(std::move(subset));
  }
};

unsigned pick_threads(const OracleBudget& budget, std::uint64_t est_leaves) {
  if (budget.threads) return budget.threads;
  if (est_leaves < (1u << 20)) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  return std::max(1u, std::min(hw, 8u));
}

bool exists_level(const std::vector<FpVec>& cols, const FpVec& target,
                  std::uint64_t p, int s, unsigned threads) {
  std::atomic<bool> found{false};
  auto mk = [&]() {
    SubsetSearch se;
    se.p = p;
    se.cols = &cols;
    se.target = target;
    se.s = s;
    se.prune_dependent = true;
    se.exists_only = true;
    se.found = &found;
    return se;
  };
  if (threads <= 1) {
    SubsetSearch se = mk();
    se.run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t]() {
        SubsetSearch se = mk();
        se.run(t, threads);
      });
    for (auto& th : pool) th.join();
  }
  return found.load();
}

std::vector<std::vector<std::size_t>> collect_level(
    const std::vector<FpVec>& cols, const FpVec& target, std::uint64_t p,
    int s, unsigned threads, bool prune) {
  std::atomic<bool> found{false};
  std::vector<std::vector<std::vector<std::size_t>>> per_thread(
      std::max(1u, threads));
  auto work = [&](unsigned t, unsigned stripe) {
    SubsetSearch se;
    se.p = p;
    se.cols = &cols;
    se.target = target;
    se.s = s;
    se.prune_dependent = prune;
    se.exists_only = false;
    se.found = &found;
    se.hits = &per_thread[t];
    se.run(t, stripe);
  };
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  std::vector<std::vector<std::size_t>> all;
  for (auto& part : per_thread)
    for (auto& h : part) all.push_back(std::move(h));
  return all;
}

}  // namespace

std::vector<ProjPoint> projective_space_points(int r, const FieldSpec& field) {
  if (!field.is_prime())
    fail(ErrorCode::InvalidArgument, "point enumeration needs a prime field");
  const std::uint64_t p = field.p();
  if (projective_point_count(r, p, 2000000) > 2000000)
    fail(ErrorCode::BudgetExceeded, "projective space too large to enumerate");
  std::vector<ProjPoint> pts;
  // Canonical representatives: leading 1 at position `lead`, free tail.
  for (int lead = 0; lead <= r; ++lead) {
    std::vector<Scalar> coords(r + 1, Scalar::zero(field));
    coords[lead] = Scalar::one(field);
    int tail = r - lead;
    std::vector<std::uint64_t> odo(tail, 0);
    bool done = false;
    while (!done) {
      for (int i = 0; i < tail; ++i)
        coords[lead + 1 + i] =
            Scalar::from_int(static_cast<long long>(odo[i]), field);
      pts.push_back(ProjPoint::normalize(coords));
      done = true;
      for (int i = 0; i < tail; ++i) {
        if (++odo[i] < p) {
          done = false;
          break;
        }
        odo[i] = 0;
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<PointSet> enumerate_spanning_subsets(
    const AmbientVector& p_vec, const std::vector<ProjPoint>& candidates,
    int s, const VeroneseSpace& space, const OracleBudget& budget,
    bool stop_at_first, bool certified_only, bool prune_dependent) {
  if (s < 1 || candidates.empty()) return {};
  const FieldSpec& field = p_vec.front().field();
  if (!field.is_prime())
    fail(ErrorCode::InvalidArgument, "oracle search needs a prime field");
  const std::size_t n = candidates.size();
  if (binom_capped(n, static_cast<std::uint64_t>(s), budget.max_subsets) >
      budget.max_subsets)
    fail(ErrorCode::BudgetExceeded, "subset count exceeds max_subsets");
  std::vector<FpVec> cols;
  cols.reserve(n);
  for (const auto& pt : candidates)
    cols.push_back(to_fp_vec(veronese_map(pt, space)));
  FpVec target = to_fp_vec(p_vec);
  unsigned threads =
      stop_at_first ? 1
                    : pick_threads(budget, binom_capped(n, s, 1ull << 62));
  std::vector<std::vector<std::size_t>> raw;
  if (stop_at_first) {
    // Deterministic first hit in lexicographic order, single-threaded.
    std::atomic<bool> found{false};
    std::vector<std::vector<std::vector<std::size_t>>> sink(1);
    SubsetSearch se;
    se.p = field.p();
    se.cols = &cols;
    se.target = target;
    se.s = s;
    se.prune_dependent = prune_dependent;
    se.exists_only = false;
    se.found = &found;
    se.hits = &sink[0];
    se.prepare();
    const std::size_t nn = cols.size();
    for (std::size_t i = 0; i + (s - 1) < nn && sink[0].empty(); ++i)
      se.descend(i, 1);
    raw = std::move(sink[0]);
    if (raw.size() > 1) raw.resize(1);
  } else {
    raw = collect_level(cols, target, field.p(), s, threads, prune_dependent);
  }
  std::vector<PointSet> out;
  for (const auto& subset : raw) {
    std::vector<ProjPoint> pts;
    pts.reserve(subset.size());
    for (std::size_t i : subset) pts.push_back(candidates[i]);
    PointSet set(std::move(pts));
    if (set.size() != static_cast<std::size_t>(s)) continue;
    if (certified_only) {
      auto weights = in_span(p_vec, set, space);
      if (!weights) continue;
      bool ok = true;
      for (const auto& w : *weights) ok = ok && !w.is_zero();
      if (!ok) continue;
      if (span_rank(veronese_images(set, space), field) != set.size())
        continue;
    }
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int brute_rank(const AmbientVector& p_vec, const VeroneseSpace& space,
               const FieldSpec& field, const OracleBudget& budget) {
  if (!field.is_prime())
    fail(ErrorCode::InvalidArgument, "brute rank needs a prime field");
  if (vec_is_zero(p_vec))
    fail(ErrorCode::InvalidArgument, "zero ambient vector");
  if (projective_point_count(space.r(), field.p(),
                             budget.max_points) > budget.max_points)
    fail(ErrorCode::BudgetExceeded,
         "projective point count exceeds max_points");
  std::vector<ProjPoint> candidates =
      projective_space_points(space.r(), field);
  const std::size_t n = candidates.size();
  std::vector<FpVec> cols;
  cols.reserve(n);
  for (const auto& pt : candidates)
    cols.push_back(to_fp_vec(veronese_map(pt, space)));
  FpVec target = to_fp_vec(p_vec);

  std::uint64_t remaining = budget.max_subsets;
  for (int s = 1; s <= budget.max_rank && s <= static_cast<int>(n); ++s) {
    std::uint64_t level = binom_capped(n, s, remaining);
    if (level > remaining) {
      // The full level is unaffordable, but a witness may still be close:
      // run a deterministic capped scan and fail only if it stays silent.
      std::atomic<bool> found{false};
      SubsetSearch se;
      se.p = field.p();
      se.cols = &cols;
      se.target = target;
      se.s = s;
      se.prune_dependent = true;
      se.exists_only = true;
      se.found = &found;
      se.visit_cap = remaining;
      se.run(0, 1);
      if (found.load()) return s;
      fail(ErrorCode::BudgetExceeded,
           "subset budget exhausted at size " + std::to_string(s));
    }
    remaining -= level;
    unsigned threads = pick_threads(budget, level);
    if (exists_level(cols, target, field.p(), s, threads)) return s;
  }
  fail(ErrorCode::BudgetExceeded,
       "no spanning subset within max_rank = " +
           std::to_string(budget.max_rank));
}

std::vector<PointSet> enumerate_S(const AmbientVector& p_vec, int s,
                                  const VeroneseSpace& space,
                                  const FieldSpec& field,
                                  const OracleBudget& budget) {
  if (!field.is_prime())
    fail(ErrorCode::InvalidArgument, "enumeration needs a prime field");
  if (projective_point_count(space.r(), field.p(),
                             budget.max_points) > budget.max_points)
    fail(ErrorCode::BudgetExceeded,
         "projective point count exceeds max_points");
  std::vector<ProjPoint> candidates =
      projective_space_points(space.r(), field);
  return enumerate_spanning_subsets(p_vec, candidates, s, space, budget,
                                    /*stop_at_first=*/false,
                                    /*certified_only=*/true,
                                    /*prune_dependent=*/true);
}

}  // namespace waring
