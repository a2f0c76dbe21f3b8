#pragma once

#include <vector>

#include "wgauss/span.hpp"

namespace wgauss {

// Gauss map: the span of D, defined when l(D) = 1. Throws NotInWnError
// otherwise and DomainError outside 1 <= deg D <= g - 1.
GrassPoint gauss_eval(const Divisor& D);

// (W.C): the greatest common divisor of phi^* H over hyperplanes H
// containing W. Supported: hyperelliptic (any W), plane quartic (points
// and lines), genus 4 (points, lines and planes).
Divisor intersection_divisor(CurvePtr C, const GrassPoint& W);

struct FiberReport {
    GrassPoint W;
    Divisor WC;
    std::vector<Divisor> fiber;
    int cardinality = 0;
    bool nonreduced = false;  // (W.C) is not reduced
    bool weierstrass = false; // some point of (W.C) is fixed by the involution
    uint32_t p = 0;
    int ext = 1;  // degree of the field holding (W.C)
    bool flagged() const { return nonreduced || weierstrass; }
};

// Every E <= (W.C) of degree n with span(E) = W.
FiberReport fiber(CurvePtr C, const GrassPoint& W, int n);

// deg (span(D).C) >= n + 1.
bool in_multiple_locus(const Divisor& D);
// deg (span(D).C) >= n + k.
bool in_Rnk(const Divisor& D, int k);

struct BnkVerdict {
    bool value = false;
    bool exact = false;  // compared with == rather than >=
    int deg_WC = 0;
};
BnkVerdict in_Bnk(CurvePtr C, const GrassPoint& W, int n, int k, bool exact);

// 2^n for hyperelliptic curves, binom(2g-2, g-1) when n = g - 1, else 1.
long long expected_generic_fiber(const Curve& C, int n);

struct FiberPrediction {
    std::vector<Divisor> members;   // sorted
    bool strictly_smaller = false;  // D non-reduced or Weierstrass support
};
// Swaps each point of D for its conjugate in every way and keeps the
// results with l = 1.
FiberPrediction hyperelliptic_fiber_prediction(const Divisor& D);

}  // namespace wgauss
