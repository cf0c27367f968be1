#pragma once

#include <vector>

#include "wmst/graph.hpp"

namespace wmst {

/// Prediction-error measures for one instance. All values are exact.
struct ErrorReport {
  Rational eta1;           // sum of all per-edge discrepancies
  Rational eta2;           // OPT(pointwise max) - OPT(pointwise min)
  Rational eta;            // sum of the n-1 largest discrepancies
  Rational opt_actual;     // OPT(w)
  Rational opt_predicted;  // OPT(w-hat)
  Rational epsilon;        // eta / OPT(w)
};

/// |w-hat(e) - w(e)| indexed by EdgeId.
std::vector<Rational> discrepancies(const WmstInstance& instance);

Rational eta1(const WmstInstance& instance);
Rational eta2(const WmstInstance& instance);
Rational eta(const WmstInstance& instance);
ErrorReport error_report(const WmstInstance& instance);

}  // namespace wmst
