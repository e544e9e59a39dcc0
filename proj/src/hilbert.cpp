#include "mfsim/hilbert.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>

namespace mf {

SemigroupSpec SemigroupSpec::diagonal(const StateVector& eigenvalues, double contractivity_bound) {
    if (eigenvalues.size() < 1) throw DomainError("diagonal semigroup needs at least one eigenvalue");
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
        if (eigenvalues[k] > contractivity_bound)
            throw DomainError("diagonal semigroup: eigenvalue " + std::to_string(eigenvalues[k]) +
                              " exceeds the contractivity bound " + std::to_string(contractivity_bound));
    }
    SemigroupSpec s;
    s.kind_ = SemigroupKind::Diagonal;
    s.dim_ = static_cast<int>(eigenvalues.size());
    s.omega_ = contractivity_bound;
    s.eigenvalues_ = eigenvalues;
    return s;
}

SemigroupSpec SemigroupSpec::shift_halfline(int dim, double dx, double contractivity_bound) {
    if (dim < 1) throw DomainError("shift semigroup needs dim >= 1");
    if (!(dx > 0.0)) throw DomainError("shift semigroup needs dx > 0");
    SemigroupSpec s;
    s.kind_ = SemigroupKind::ShiftHalfline;
    s.dim_ = dim;
    s.dx_ = dx;
    s.omega_ = contractivity_bound;
    return s;
}

SemigroupSpec SemigroupSpec::matrix(const Matrix& generator, double contractivity_bound) {
    if (generator.rows() != generator.cols() || generator.rows() < 1)
        throw ShapeError("matrix semigroup generator must be square");
    SemigroupSpec s;
    s.kind_ = SemigroupKind::MatrixGenerator;
    s.dim_ = static_cast<int>(generator.rows());
    s.omega_ = contractivity_bound;
    s.generator_ = generator;
    return s;
}

namespace {

/// Number of whole cells for a translation by t; nearest-node alignment.
long long shift_cells(double t, double dx) { return std::llround(t / dx); }

/// Two-sided translation of grid samples by `cells` toward the origin,
/// filling with zero.  Negative counts translate away from the origin.
StateVector translate(const StateVector& y, long long cells) {
    const Eigen::Index n = y.size();
    StateVector out = StateVector::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const long long src = j + cells;
        if (src >= 0 && src < n) out[j] = y[src];
    }
    return out;
}

}  // namespace

StateVector semigroup_apply(const SemigroupSpec& spec, double t, const StateVector& h) {
    if (t < 0.0) throw DomainError("semigroup_apply: t must be nonnegative");
    require_dim(h, spec.dim(), "semigroup_apply");
    switch (spec.kind()) {
        case SemigroupKind::Diagonal: {
            StateVector out(h.size());
            for (Eigen::Index k = 0; k < h.size(); ++k)
                out[k] = h[k] * std::exp(spec.eigenvalues()[k] * t);
            return out;
        }
        case SemigroupKind::ShiftHalfline:
            return translate(h, shift_cells(t, spec.dx()));
        case SemigroupKind::MatrixGenerator: {
            if (t == 0.0) return h;
            Matrix e = (spec.generator() * t).exp();
            return e * h;
        }
    }
    throw Error("semigroup_apply: unreachable");
}

DilationTriple make_dilation(const SemigroupSpec& spec, int padding) {
    if (padding < 0) throw DomainError("make_dilation: padding must be nonnegative");
    DilationTriple d;
    d.base_ = spec;
    d.inner_dim_ = spec.dim();
    d.padding_ = padding;
    if (spec.kind() == SemigroupKind::ShiftHalfline) {
        d.trivial_ = false;
        d.outer_dim_ = spec.dim() + 2 * padding;
    } else {
        d.trivial_ = true;
        d.outer_dim_ = spec.dim();
    }
    return d;
}

double DilationTriple::capacity() const {
    if (trivial_) return std::numeric_limits<double>::infinity();
    return padding_ * base_.dx();
}

void DilationTriple::require_capacity(double horizon) const {
    if (horizon <= capacity()) return;
    const int needed = static_cast<int>(std::ceil(horizon / base_.dx() - 1e-12));
    throw CapacityError("dilation padding " + std::to_string(padding_) +
                            " cannot host translations up to t=" + std::to_string(horizon) +
                            "; minimal sufficient padding is " + std::to_string(needed),
                        needed);
}

StateVector DilationTriple::embed(const StateVector& h) const {
    require_dim(h, inner_dim_, "DilationTriple::embed");
    if (trivial_) return h;
    StateVector y = StateVector::Zero(outer_dim_);
    y.segment(padding_, inner_dim_) = h;
    return y;
}

StateVector DilationTriple::project(const StateVector& y) const {
    require_dim(y, outer_dim_, "DilationTriple::project");
    if (trivial_) return projection_scale_ == 1.0 ? y : StateVector(projection_scale_ * y);
    StateVector h = y.segment(padding_, inner_dim_);
    if (projection_scale_ != 1.0) h *= projection_scale_;
    return h;
}

StateVector DilationTriple::apply_group(double t, const StateVector& y) const {
    require_dim(y, outer_dim_, "DilationTriple::apply_group");
    if (trivial_) {
        switch (base_.kind()) {
            case SemigroupKind::Diagonal: {
                StateVector out(y.size());
                for (Eigen::Index k = 0; k < y.size(); ++k)
                    out[k] = y[k] * std::exp(base_.eigenvalues()[k] * t);
                return out;
            }
            case SemigroupKind::MatrixGenerator: {
                if (t == 0.0) return y;
                Matrix e = (base_.generator() * t).exp();
                return e * y;
            }
            default:
                throw Error("apply_group: unreachable");
        }
    }
    const long long cells = shift_cells(t, base_.dx());
    // Refuse to drop nonzero samples: losing mass would silently break the
    // group law and the dilation identity.
    const Eigen::Index n = y.size();
    for (Eigen::Index j = 0; j < n; ++j) {
        if (y[j] == 0.0) continue;
        const long long dst = j - cells;
        if (dst < 0 || dst >= n) {
            const int needed =
                padding_ + static_cast<int>(std::llabs(dst < 0 ? dst : dst - (n - 1)));
            throw CapacityError("group translation by t=" + std::to_string(t) +
                                    " would push mass outside the dilation window; minimal "
                                    "sufficient padding is " +
                                    std::to_string(needed),
                                needed);
        }
    }
    return translate(y, cells);
}

StateVector group_apply(const DilationTriple& d, double t, const StateVector& y) {
    return d.apply_group(t, y);
}

DiagramReport check_dilation(const DilationTriple& d, const SemigroupSpec& spec,
                             const std::vector<double>& times,
                             const std::vector<StateVector>& probes, double tol) {
    DiagramReport report;
    report.tol = tol;
    report.per_time_max.reserve(times.size());
    for (double t : times) {
        double time_max = 0.0;
        for (std::size_t p = 0; p < probes.size(); ++p) {
            const StateVector lhs = d.project(d.apply_group(t, d.embed(probes[p])));
            const StateVector rhs = semigroup_apply(spec, t, probes[p]);
            const double err = (lhs - rhs).norm();
            time_max = std::max(time_max, err);
            if (err > report.max_error) {
                report.max_error = err;
                report.worst_time = t;
                report.worst_probe = static_cast<int>(p);
            }
        }
        report.per_time_max.push_back(time_max);
    }
    report.pass = report.max_error <= tol;
    return report;
}

}  // namespace mf
