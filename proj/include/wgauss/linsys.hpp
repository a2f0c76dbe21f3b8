#pragma once

#include <optional>
#include <vector>

#include "wgauss/span.hpp"

namespace wgauss {

// The complete linear system |D| of a special divisor, presented through a
// residual divisor F: members are (H.C) - F for hyperplanes H containing
// span(F), and the parameter space P^r is the projectivized basis.
struct CompleteSystem {
    CurvePtr curve;
    int d = 0;
    int r = 0;
    Divisor D;      // generating member
    Divisor F;      // residual, D + F a hyperplane section
    Matrix basis;   // (r + 1) x g; rows h_0 .. h_r
    Divisor B;      // base locus
    std::vector<Scalar> origin;  // parameter of D

    FieldPtr field() const { return basis.field(); }
};

CompleteSystem complete_system(const Divisor& D);

std::vector<Scalar> hyperplane_of(const CompleteSystem& L, const std::vector<Scalar>& c);
Divisor member(const CompleteSystem& L, const std::vector<Scalar>& c);
bool contains(const CompleteSystem& L, const Divisor& E);
// The parameter c (first nonzero entry 1) with member(c) = E.
std::vector<Scalar> parameter_of(const CompleteSystem& L, const Divisor& E);

struct MemberClass {
    bool reduced = false;      // E - B reduced
    std::optional<bool> nc;    // hyperelliptic curves only
};
MemberClass classify_member(const CompleteSystem& L, const Divisor& E);

// Leading coefficients of h_i(phi(t)) at the least valuation; normalized
// so that the first nonzero entry is 1.
std::vector<Scalar> phi_L(const CompleteSystem& L, const Point& P);

// span(F), checked to have projective dimension n - 1.
GrassPoint beta(const Divisor& F, int n);

// Supported when a is special (or both are nonspecial hyperelliptic
// divisors of equal canonical form); throws UnsupportedError otherwise.
bool linear_equivalent(const Divisor& a, const Divisor& b);

// Same curve, degree and class.
bool same_system(const CompleteSystem& a, const CompleteSystem& b);

struct Reconstruction {
    CompleteSystem L;
    std::vector<Divisor> members;  // (W.C) for each sample, in order
};
// Throws DomainError when a sample is not in B_{n,k}, when the samples are
// not linearly equivalent, or when span((W.C)) != W.
Reconstruction reconstruct_system(CurvePtr C, const std::vector<GrassPoint>& samples, int n, int k);

struct Contact {
    Point P;
    int order = 0;  // ord_P of the hyperplane
    int base = 0;   // multiplicity of P in F + B
    int excess() const { return order - base; }
};
struct DualSample {
    std::vector<Scalar> param;       // point of P^r
    std::vector<Scalar> hyperplane;  // in the canonical space
    int weight = 1;                  // number of Galois conjugates
    std::vector<Contact> contacts;   // points with excess >= 2
    int multiplicity() const;        // weight * sum (excess - 1)
};
struct DualReport {
    std::vector<DualSample> samples;
    bool swept = false;   // parameter sweep instead of the discriminant
    int skipped = 0;      // candidates beyond the extension cap
    int total() const;
};
// Non-reduced members along `lines` random P^1's in P^r (one line when
// r = 1), located through the discriminant of the moving part.
DualReport dual_samples(const CompleteSystem& L, int lines, Rng& rng);

struct ImageWitness {
    CompleteSystem L;
    Divisor F;
    bool spans_agree = false;  // beta(F) == gauss_eval(D)
    bool nc = false;
};
// F = p_1 + i(p_1) + ... + p_k + i(p_k) + p_{k+1} + ... + p_n.
ImageWitness hyperelliptic_image_witness(const Divisor& D, int k);

// Genus 4: the divisors cut by the lines of the quadric through P.
std::vector<Divisor> g13_members(CurvePtr C, const Point& P);

}  // namespace wgauss
