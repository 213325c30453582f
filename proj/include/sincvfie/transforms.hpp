#pragma once

#include <string_view>
#include <vector>

namespace sincvfie {

/// Finite interval [a, b] with a < b.
class Interval {
public:
    Interval(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double length() const noexcept { return b_ - a_; }
    double midpoint() const noexcept { return 0.5 * (a_ + b_); }
    bool contains(double t) const noexcept { return a_ <= t && t <= b_; }

private:
    double a_;
    double b_;
};

/// Variable transformation from the real line onto (a, b).
///   SE:    tanh(x/2)
///   DE:    tanh((pi/2) sinh x)
///   JO_DE: tanh((pi/4) sinh x), the variant used by the John-Ogbonna baseline
enum class TransformKind { SE, DE, JO_DE };

/// The four collocation solvers.
enum class Method { NewSE, NewDE, ShamlooSE, JohnOgbonnaDE };

std::string_view to_string(TransformKind kind);
std::string_view to_string(Method method);
TransformKind transform_of(Method method);

/// Largest admissible strip half-width for a transform (pi for SE, pi/2 otherwise).
double max_strip_width(TransformKind kind);

/// Mesh parameters shared by every Sinc formula on one grid.
struct MeshParams {
    int N;
    double h;
    double alpha;
    double d;

    /// Validates N >= 1, h > 0, 0 < alpha <= 1 and 0 < d < max_strip_width(kind).
    static MeshParams make(TransformKind kind, int N, double h, double alpha, double d);
};

namespace transforms {

/// psi(x). Infinite x maps to the matching endpoint; saturated values are
/// clamped into [a, b]. The distance to the nearer endpoint is computed
/// directly, so points near a = 0 keep full relative precision.
double forward(TransformKind kind, const Interval& iv, double x);

/// psi^{-1}(t), with -inf at t = a and +inf at t = b. Throws DomainError
/// outside [a, b].
double inverse(TransformKind kind, const Interval& iv, double t);

/// psi'(x). Underflows to exactly 0 in the far tails.
double derivative(TransformKind kind, const Interval& iv, double x);

struct SelectOptions {
    // Use log(4dN/alpha)/N for JohnOgbonnaDE instead of the fixed log(pi N)/N.
    bool johnogbonna_parametric = false;
};

/// Mesh size for a method. NewSE and NewDE use the alpha/d selection
/// formulas; the two baselines default to their fixed published formulas
/// (pi/sqrt(N) and log(pi N)/N) and ignore alpha and d.
double select_h(Method method, double alpha, double d, int N, SelectOptions options = {});

/// psi(jh) for j = -N..N.
std::vector<double> sinc_points(TransformKind kind, const Interval& iv, int N, double h);

} // namespace transforms
} // namespace sincvfie
