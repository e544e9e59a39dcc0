#pragma once

#include "mfsim/common.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mf {

/// Truncated state space H_M.
struct SpaceSpec {
    int dim = 1;
    std::string label;
};

enum class SemigroupKind { Diagonal, ShiftHalfline, MatrixGenerator };

/// A concrete C0-semigroup S_t on H_M.
///
/// Three kinds are supported:
///  - Diagonal: generator diag(mu_1..mu_M), S_t multiplies coordinate k by
///    exp(mu_k t).
///  - ShiftHalfline: grid samples of a function on [0, inf) with spacing dx;
///    S_t translates the samples toward the origin, filling with zero.
///  - MatrixGenerator: dense generator A, S_t = expm(tA).
class SemigroupSpec {
  public:
    static SemigroupSpec diagonal(const StateVector& eigenvalues, double contractivity_bound);
    static SemigroupSpec shift_halfline(int dim, double dx, double contractivity_bound = 0.0);
    static SemigroupSpec matrix(const Matrix& generator, double contractivity_bound);

    SemigroupKind kind() const { return kind_; }
    int dim() const { return dim_; }
    double contractivity_bound() const { return omega_; }
    double dx() const { return dx_; }
    const StateVector& eigenvalues() const { return eigenvalues_; }
    const Matrix& generator() const { return generator_; }

  private:
    SemigroupSpec() = default;
    SemigroupKind kind_ = SemigroupKind::Diagonal;
    int dim_ = 0;
    double omega_ = 0.0;
    double dx_ = 0.0;          // shift kind only
    StateVector eigenvalues_;  // diagonal kind only
    Matrix generator_;         // matrix kind only
};

/// Applies S_t to h. Shift translations by a non-multiple of dx are resolved
/// to the nearest cell; solver configs keep all times on the dx lattice so
/// this rounding is exact in practice.
StateVector semigroup_apply(const SemigroupSpec& spec, double t, const StateVector& h);

/// Embedding / two-sided group / projection triple with pi U_t ell = S_t.
///
/// Diagonal and matrix semigroups extend to groups directly, so the triple is
/// trivial (ell = pi = id, U_t = e^{tA}).  The half-line shift is dilated by
/// the two-sided shift on a window of N = M + 2*padding nodes.
class DilationTriple {
  public:
    int outer_dim() const { return outer_dim_; }  // dim of the big space
    int inner_dim() const { return inner_dim_; }  // dim of H_M
    int padding() const { return padding_; }

    /// Largest |t| for which shift translations surely stay in the window
    /// when applied to embedded states; infinite for trivial dilations.
    double capacity() const;

    /// Throws CapacityError (reporting the minimal sufficient padding) if the
    /// window cannot host translations up to the horizon.
    void require_capacity(double horizon) const;

    StateVector embed(const StateVector& h) const;
    StateVector project(const StateVector& y) const;

    /// U_t y for either sign of t.  For the shift window this refuses to drop
    /// nonzero mass off the edge and raises CapacityError instead.
    StateVector apply_group(double t, const StateVector& y) const;

    /// Multiplies the projection by a constant.  Fault-injection hook for the
    /// verification suites; a correct triple always has scale 1.
    void scale_projection(double s) { projection_scale_ *= s; }

  private:
    friend DilationTriple make_dilation(const SemigroupSpec&, int);
    bool trivial_ = true;
    SemigroupSpec base_;
    int inner_dim_ = 0;
    int outer_dim_ = 0;
    int padding_ = 0;
    double projection_scale_ = 1.0;

    DilationTriple() : base_(SemigroupSpec::diagonal(StateVector::Zero(1), 0.0)) {}
};

DilationTriple make_dilation(const SemigroupSpec& spec, int padding);

StateVector group_apply(const DilationTriple& d, double t, const StateVector& y);

struct DiagramReport {
    double max_error = 0.0;
    double worst_time = 0.0;
    int worst_probe = -1;
    double tol = 0.0;
    bool pass = true;
    std::vector<double> per_time_max;
};

/// Measures max over (t, h) of || pi U_t ell h - S_t h ||.
DiagramReport check_dilation(const DilationTriple& d, const SemigroupSpec& spec,
                             const std::vector<double>& times,
                             const std::vector<StateVector>& probes, double tol);

}  // namespace mf
