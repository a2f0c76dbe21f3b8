#pragma once

#include <string>

#include <json.hpp>

#include "wgauss/gauss.hpp"
#include "wgauss/linsys.hpp"

namespace wgauss {

using Json = nlohmann::ordered_json;

// Curve description:
//   {"model": "hyperelliptic" | "plane_quartic" | "canonical_g4",
//    "field": {"type": "prime", "p": P} | {"type": "rational"},
//    "f": [c0, c1, ...]                      (hyperelliptic)
//    "form": {"a,b,c": c, ...}               (plane quartic)
//    "forms": [{"a,b,c,d": c, ...}, {...}]}  (genus 4: quadric, cubic)
// Coefficients are integers or "a/b" strings. Throws ParseError on
// malformed input; validation errors propagate unchanged.
CurvePtr curve_from_json(const Json& j);
Json curve_to_json(const Curve& C);
CurvePtr load_curve(const std::string& path);

// F_p: integer; F_{p^k}: list of k residues, lowest first; Q: integer or "a/b".
Json scalar_to_json(const Scalar& s);
Json point_to_json(const Point& P);
// [{point, ext_degree, mult}, ...]
Json divisor_to_json(const Divisor& D);
// {condition_matrix, plucker}
Json span_to_json(const GrassPoint& W);
Json fiber_report_to_json(const FiberReport& r);
Json complete_system_to_json(const CompleteSystem& L);
Json dual_report_to_json(const DualReport& r);

}  // namespace wgauss
