#pragma once

#include "mfsim/common.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace mf {

/// Trace-class covariance of the driving Wiener process: Q e_j = lambda_j e_j.
struct QWienerSpec {
    StateVector eigenvalues;  // lambda_1..lambda_M, all > 0

    int dim() const { return static_cast<int>(eigenvalues.size()); }
    void validate() const;
};

/// Named parametric mark distributions on R^d.
struct UniformBoxSampler {
    StateVector lo, hi;
};
struct GaussianSampler {
    StateVector mean, stddev;
};
struct DiscreteAtomsSampler {
    std::vector<StateVector> atoms;
    std::vector<double> weights;  // relative; normalized internally
};
using MarkSampler = std::variant<UniformBoxSampler, GaussianSampler, DiscreteAtomsSampler>;

int sampler_dim(const MarkSampler& s);

/// Jump intensity measure F split into the small-jump set B and its
/// complement; both restrictions are finite (compound-Poisson simulation).
/// Membership of a mark is decided by which sampler produced it, never by
/// re-evaluating a predicate on float coordinates.
struct MarkMeasureSpec {
    int mark_dim = 1;
    double total_intensity_B = 0.0;   // F(B)
    double total_intensity_Bc = 0.0;  // F(B^c)
    MarkSampler sampler_B = UniformBoxSampler{StateVector::Zero(1), StateVector::Ones(1)};
    MarkSampler sampler_Bc = UniformBoxSampler{StateVector::Zero(1), StateVector::Ones(1)};
    std::string B_predicate;  // audit description only

    void validate() const;
};

struct JumpEvent {
    double time = 0.0;  // relative to the path origin
    StateVector mark;
    bool is_large = false;
};

/// One frozen noise realization on [0, T]: Wiener increments per grid cell
/// and coordinate plus the time-ordered jump list.  Immutable after
/// construction and reusable across solves (common random numbers).
///
/// Node times are also kept relative to the originally sampled path
/// (abs_grid / jumps[].time counterparts) so that repeated shifts reproduce
/// the same floats as one combined shift.
struct NoisePath {
    std::vector<double> grid;        // 0 = t_0 < ... < t_L = T
    Matrix wiener_increments;        // L x M_W, cell (i, j) ~ N(0, dt_i * lambda_j)
    std::vector<JumpEvent> jumps;    // strictly increasing times, each a grid node
    std::uint64_t seed = 0;

    std::vector<double> abs_grid;          // node times on the original path
    std::vector<double> abs_jump_times;    // jump times on the original path

    int wiener_dim() const { return static_cast<int>(wiener_increments.cols()); }
    std::size_t n_cells() const { return grid.empty() ? 0 : grid.size() - 1; }
    double horizon() const { return grid.empty() ? 0.0 : grid.back(); }

    /// Cell length computed from the original absolute times, so restarted
    /// segments step with bit-identical dt.
    double cell_dt(std::size_t i) const { return abs_grid[i + 1] - abs_grid[i]; }

    /// Index of the grid node equal to t (exact float match), or throws.
    std::size_t node_index(double t) const;

    bool has_large_jumps() const;
    void validate() const;
};

/// Sampling options beyond the spec triple.
struct NoiseOptions {
    std::uint64_t path_index = 0;  // substream selector for parallel paths
    /// When > 0, jump times are snapped to multiples of this lattice step
    /// (shift-semigroup runs keep every node on the dx lattice this way).
    double jump_time_lattice = 0.0;
};

/// Draws one realization: Wiener increments per (refined) grid cell and
/// compound-Poisson jumps on [0, T] for both B and B^c.  The returned grid is
/// the input grid refined by insertion of all jump times.  Deterministic
/// function of (seed, options.path_index).
NoisePath sample_noise(const QWienerSpec& q, const MarkMeasureSpec& m,
                       const std::vector<double>& grid, std::uint64_t seed,
                       const NoiseOptions& options = {});

/// Large-jump times rho_0 = 0 < rho_1 < ... extracted from a path.
struct LargeJumpClock {
    std::vector<double> times;  // times[0] == 0
    std::size_t count() const { return times.size() - 1; }
};

LargeJumpClock large_jump_clock(const NoisePath& p);

/// Noise restarted at grid time tau: increments re-indexed, jump times
/// shifted, jumps at exactly tau excluded (they belong to the pre-tau
/// segment), horizon T - tau.
NoisePath shift_noise(const NoisePath& p, double tau);

/// Restriction of the path to [0, t_end] (t_end a grid node); jumps at
/// t_end are kept.
NoisePath restrict_noise(const NoisePath& p, double t_end);

/// Aggregates Wiener increments of `fine` onto the coarser node set
/// `coarse_nodes` (every coarse node must be a fine node; jump nodes are
/// retained).  Used for common-random-number convergence ladders.
NoisePath coarsen_noise(const NoisePath& fine, const std::vector<double>& coarse_nodes);

/// Deterministic integral of fn against F restricted to B.  Exact weighted
/// sum for discrete atoms; midpoint product quadrature with quad_n nodes per
/// mark dimension for density samplers.
StateVector integrate_marks_B(const MarkMeasureSpec& m, int quad_n,
                              const std::function<StateVector(const StateVector&)>& fn,
                              int out_dim);
double integrate_marks_B_scalar(const MarkMeasureSpec& m, int quad_n,
                                const std::function<double(const StateVector&)>& fn);

/// Compensator integral over B of the jump coefficient at (t, y).
StateVector compensator_integral(
    const std::function<StateVector(double, const StateVector&, const StateVector&)>& jump_coeff,
    double t, const StateVector& y, const MarkMeasureSpec& m, int quad_n);

/// Uniform grid 0, dt, 2 dt, ..., horizon with exactly round(horizon/dt)
/// cells; throws unless dt divides the horizon to within 1e-9 relative.
std::vector<double> uniform_grid(double horizon, double dt);

}  // namespace mf
