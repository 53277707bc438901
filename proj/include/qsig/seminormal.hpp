#pragma once

#include "qsig/hecke.hpp"

namespace qsig {

struct SeminormalReport {
  long signature = 0;                 // #positive - #negative norms
  int tableaux = 0;
  int edges_checked = 0;              // transposition edges closing a cycle
  double max_relative_discrepancy = 0;
};

/// Norms of the seminormal basis, propagated from the row-reading tableau along
/// adjacent-transposition edges with floating sines at the given precision.
/// Every edge reaching an already-normed tableau is checked for agreement.
/// Throws DegenerateParameter when a norm falls inside the 2^(-bits/2) margin and
/// ConsistencyError when two paths disagree beyond it.
SeminormalReport seminormal_report(const Partition& shape, const HeckeParam& p, int bits = 128);

inline long seminormal_oracle(const Partition& shape, const HeckeParam& p, int bits = 128) {
  return seminormal_report(shape, p, bits).signature;
}

/// Builds the generators T_1..T_{n-1} on the seminormal basis and checks the
/// quadratic, braid and far-commutation relations to 2^(-bits/2).
bool action_relations_check(const Partition& shape, const HeckeParam& p, int bits = 128);

}  // namespace qsig
