#ifndef GBASIC_CB_HPP
#define GBASIC_CB_HPP

#include "gbasic/betti.hpp"

namespace gbasic {

/// Whether Z has the degree-l Cayley-Bacharach property: every degree-l
/// form vanishing on any colength-one subset vanishes on all of Z.
/// Decided by the rank equality rank(Eval_l(Z)) = rank(Eval_l(Z - q))
/// for every q; vacuous cases are true.
bool satisfies_cb(const PointSet& z, int l, int threads = 1);

/// The largest l with satisfies_cb(z, l), found by upward scan (the
/// property is monotone in l). -1 would mean even l = 0 fails, which
/// cannot happen for |Z| >= 2. Singletons are rejected.
int cb_index(const PointSet& z, int threads = 1);

struct CBReport {
  int cb_index;
  int a_min;
  int a_max;
  bool bound_holds;
  std::vector<std::pair<int, bool>> per_degree;  // (l, satisfied), to failure
};

/// Computes the CB index and the syzygy degrees a_i of the resolution of
/// I_Z independently, and reports whether a_min-3 <= CB(Z) <= a_max-3.
CBReport verify_bounds(const PointSet& z, int threads = 1);

}  // namespace gbasic

#endif
