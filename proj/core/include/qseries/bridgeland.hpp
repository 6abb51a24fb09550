#pragma once

// Elliptic-surface constants (m, alpha, e) and the convergence threshold they
// induce on v = 1/w for u = ((m + alpha - e) - (m - e/2) u^2) w.

#include <qseries/exact.hpp>
#include <qseries/solver.hpp>

namespace qseries {

struct BridgelandParams {
  ExactRational m;      // > 0, ray direction
  ExactRational alpha;  // > 0, ray direction
  ExactRational e;      // minus the self-intersection of the section; any real accepted
};

enum class RegimeNote { generic, a_zero, b_zero };

const char* to_string(RegimeNote note);

struct ThresholdReport {
  ExactRational a;
  ExactRational b;
  double radius = 0.0;       // in w; +infinity in degenerate regimes
  double v_threshold = 0.0;  // 2 sqrt|AB|; 0 in degenerate regimes
  RegimeNote regime_note = RegimeNote::generic;
};

/// A = m + alpha - e, B = -(m - e/2). Throws DomainError unless m > 0 and alpha > 0.
QuadraticParams ab_from_geometry(const BridgelandParams& params);

/// When A = B = 0 the note is a_zero.
ThresholdReport threshold(const BridgelandParams& params);

/// True iff A > 0 and B < 0.
bool sign_regime_check(const BridgelandParams& params);

}  // namespace qseries
