#include "gbasic/cb.hpp"

#include <atomic>

#include "gbasic/parallel.hpp"

namespace gbasic {

bool satisfies_cb(const PointSet& z, int l, int threads) {
  if (l < 0) throw validation_error("CB degree must be >= 0");
  long full = rank(evaluation_matrix(z, l).matrix);
  // A singleton's colength-one subscheme is empty, on which every form
  // vanishes; the rank equality then demands rank 0, which never holds.
  if (z.size() == 1) return false;
  std::atomic<bool> ok{true};
  parallel_for(z.size(), threads, [&](long q) {
    if (!ok.load()) return;
    long sub = rank(evaluation_matrix(z.without(static_cast<int>(q)), l).matrix);
    if (sub != full) ok.store(false);
  });
  return ok.load();
}

namespace {

std::vector<std::pair<int, bool>> cb_scan(const PointSet& z, int threads,
                                          int* index_out) {
  std::vector<std::pair<int, bool>> history;
  int last_good = -1;
  // For l at the stabilization degree the full rank is |Z| while any
  // colength-one subset caps at |Z|-1, so the scan must fail by then.
  int limit = stabilization_degree(z) + 1;
  for (int l = 0; l <= limit; ++l) {
    bool good = satisfies_cb(z, l, threads);
    history.emplace_back(l, good);
    if (!good) {
      *index_out = last_good;
      return history;
    }
    last_good = l;
  }
  throw error("CB scan failed to terminate; this cannot happen");
}

}  // namespace

int cb_index(const PointSet& z, int threads) {
  if (z.size() < 2)
    throw validation_error("CB index needs at least two points");
  int index = -1;
  cb_scan(z, threads, &index);
  return index;
}

CBReport verify_bounds(const PointSet& z, int threads) {
  if (z.size() < 2)
    throw validation_error("CB bounds need at least two points");
  int index = -1;
  std::vector<std::pair<int, bool>> history = cb_scan(z, threads, &index);
  BettiTable table = betti_table(z, threads);
  if (table.a_degrees.empty())
    throw error("no syzygy degrees for a point set; this cannot happen");
  int a_min = table.a_degrees.front();
  int a_max = table.a_degrees.back();
  bool holds = a_min - 3 <= index && index <= a_max - 3;
  return CBReport{index, a_min, a_max, holds, std::move(history)};
}

}  // namespace gbasic
