#pragma once

#include <iosfwd>

#include <json.hpp>

#include "bpdyn/simulate.hpp"
#include "bpdyn/systems.hpp"
#include "bpdyn/weighted.hpp"

namespace bpdyn {

using Json = nlohmann::ordered_json;

// Polynomial form: {"maxdeg": d, "terms": [{"i","j","num","den"}, ...]}
// with terms sorted by (i+j, i). num/den are JSON integers when they fit in
// 64 bits, decimal strings otherwise.
Json poly_to_json(const BivariatePoly& p);
BivariatePoly poly_from_json(const Json& j);

Json poly_to_json(const UnivariatePoly& p);
UnivariatePoly univariate_from_json(const Json& j);

// {"order": n, "cells": [{"i","j","a","b","c"}, ...]}
Json table_to_json(const WeightedTable& t);

// {"k": "num/den", "u": "num/den", "named_parts": [...]}
Json params_to_json(const WeightParams& p);
WeightParams params_from_json(const Json& j);

// {"label": ..., "fx": <poly>, "fy": <poly>}
Json system_to_json(const PlanarSystem& s);

// {"pi_coefficient": "num/den", "sign": ..., "kind": ...}
Json lyapunov_to_json(const LyapunovResult& r);

Json equilibrium_to_json(const EquilibriumClass& e);

Json fit_to_json(const FitResult& f);

Json radius_polynomial_to_json(const RadiusPolynomial& rp);

Json roots_to_json(const std::vector<RealRoot>& roots);

Json cycles_to_json(const CycleSearchOutcome& o);

Json quadrature_to_json(const QuadratureResult& q);

Json circle_zeros_to_json(const std::vector<CircleZero>& zs);

/// CSV with header "t,x,y", 17 significant digits per field.
void write_trajectory_csv(std::ostream& os, const Trajectory& tr);

}  // namespace bpdyn
