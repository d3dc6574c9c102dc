#ifndef CURVEMODULI_SAMPLING_HPP
#define CURVEMODULI_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "curvemoduli/json_io.hpp"

namespace curvemoduli {

/// Deterministic source of small integer coefficients in [-9, 9]. The
/// draw sequence is part of the serialization contract: identical seeds
/// must reproduce identical instances across platforms, so mapping from
/// raw engine output avoids distribution objects.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    long below(long n);
    long int_in(long lo, long hi);
    Scalar coeff() { return Scalar(int_in(-9, 9)); }
    Scalar nonzero_coeff();

private:
    std::mt19937_64 eng_;
};

/// Decorrelated per-trial seed so trials can run in any order.
uint64_t trial_seed(uint64_t seed, uint64_t index);

Form random_form(Rng& rng, int degree);
Form random_linear(Rng& rng);

/// A valid matrix with small integer coefficients.
MatrixA random_matrix(Rng& rng, int d);

/// A matrix whose sheaf is singular: q1, q2 are corrected to vanish at
/// the common zero of z1, z2.
MatrixA random_singular_matrix(Rng& rng, int d);

/// A singular-locus member already in standard form (z1 = x1, z2 = x2).
MatrixA random_normalized_singular(Rng& rng, int d);

/// Unconstrained perturbation direction.
TangentVector random_tangent_vector(Rng& rng, int d);

/// A perturbation annihilated by the jacobian at a standard-form singular
/// matrix: the two top q-coefficients are overwritten to satisfy the
/// tangent equations.
TangentVector random_tangent_at(Rng& rng, const MatrixA& a);

/// A perturbation with nonzero residue at a (resampled until normal).
TangentVector random_normal_at(Rng& rng, const MatrixA& a);

GroupElement random_group_element(Rng& rng, int d);

CurvePointPair random_curve_point_pair(Rng& rng, int d);

enum class InstanceKind { X, Xprime, Tangent, Normal };

/// Deterministic JSON array of n sampled instances; Tangent and Normal
/// kinds emit {"matrix", "vector"} objects anchored at standard-form
/// singular matrices.
Json random_instances(InstanceKind kind, int d, uint64_t seed, int n);

} // namespace curvemoduli

#endif
