#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wgauss/mpoly.hpp"
#include "wgauss/rng.hpp"
#include "wgauss/series.hpp"

namespace wgauss {

enum class Model { Hyperelliptic, PlaneQuartic, CanonicalG4 };

const char* model_name(Model m);

struct Curve {
    Model model = Model::Hyperelliptic;
    FieldPtr field = nullptr;
    int genus = 0;
    Poly f;                    // hyperelliptic: y^2 = f(x)
    std::vector<MPoly> forms;  // plane quartic: {F}; genus 4: {Q, E}

    bool hyperelliptic() const { return model == Model::Hyperelliptic; }
    // Hyperelliptic with deg f odd: one point at infinity, fixed by the involution.
    bool odd_model() const { return hyperelliptic() && f.degree() % 2 == 1; }
    // Ambient projective dimension of the canonical model (g - 1).
    int ambient() const { return genus - 1; }
};

using CurvePtr = std::shared_ptr<const Curve>;

// Builds and certifies a curve. Throws DomainError on malformed input and
// SingularError when the model is not smooth.
CurvePtr make_hyperelliptic(const Poly& f);
CurvePtr make_plane_quartic(const MPoly& F);
CurvePtr make_canonical_g4(const MPoly& Q, const MPoly& E);

// Hyperelliptic points: affine (x, y), or at infinity. Odd models have one
// point at infinity (no coordinates); even models have two, tagged by
// s = lim y / x^{g+1} with s^2 = lc(f). Plane and canonical-model points
// are projective with the first nonzero coordinate equal to 1.
struct Point {
    enum class Kind : uint8_t { Affine, Infinity };
    Kind kind = Kind::Affine;
    std::vector<Scalar> c;

    FieldPtr field() const;
    bool at_infinity() const { return kind == Kind::Infinity; }
    // Total order; coordinates are compared after canonicalization, so
    // equal points compare equal whatever field they were computed in.
    int compare(const Point& o) const;
    bool operator==(const Point& o) const { return compare(o) == 0; }
    bool operator!=(const Point& o) const { return compare(o) != 0; }
    bool operator<(const Point& o) const { return compare(o) < 0; }
    std::string str() const;
};

Point affine_point(const Scalar& x, const Scalar& y);
Point infinity_point(std::optional<Scalar> s = std::nullopt);
Point projective_point(std::vector<Scalar> coords);
// Coordinates descended to the smallest field containing all of them;
// projective points rescaled.
Point canonical(const Point& P);
Point coerce_point(const Point& P, FieldPtr to);

bool on_curve(const Curve& C, const Point& P);

// Deterministic given the generator state. Hyperelliptic points are
// affine; plane models use random lines / planes through the curve.
Point sample_point(const Curve& C, Rng& rng);
Point sample_point(const Curve& C, uint64_t seed);

Point involution(const Curve& C, const Point& P);
bool is_weierstrass(const Curve& C, const Point& P);
// The 2g+2 fixed points of the involution over a splitting field.
std::vector<Point> weierstrass_points(const Curve& C);

// Image in P^{g-1}, first nonzero coordinate 1.
std::vector<Scalar> canonical_coords(const Curve& C, const Point& P);

// Formal parametrization around P. Hyperelliptic affine charts give
// (x(t), y(t)); at infinity the chart u = 1/x, w = y/x^{g+1} gives
// (u(t), w(t)). Projective models give all homogeneous coordinates,
// the normalizing one being constant 1.
struct LocalParam {
    std::vector<Series> coords;
};
LocalParam local_param(const Curve& C, const Point& P, int N);

// The g canonical coordinate functions along local_param, scaled by a unit
// so that vanishing orders of hyperplane forms can be read off directly.
std::vector<Series> canonical_series(const Curve& C, const Point& P, int N);

// Order of vanishing at P of the hyperplane form h (length g) pulled back
// to the curve, capped at `cap`.
int hyperplane_order(const Curve& C, const std::vector<Scalar>& h, const Point& P, int cap);

// Every point of C over the finite field K (small fields only).
std::vector<Point> enumerate_points(const Curve& C, FieldPtr K);

// Common zeros in P^2 of two ternary forms without common component, with
// intersection multiplicities. Points are canonical. With `multiple_only`
// just the zeros of multiplicity >= 2 are returned.
std::vector<std::pair<Point, int>> plane_common_zeros(const MPoly& a, const MPoly& b, Rng& rng,
                                                      bool multiple_only = false);

// 64-bit FNV-1a of the canonical JSON description.
uint64_t curve_hash(const Curve& C);

}  // namespace wgauss
