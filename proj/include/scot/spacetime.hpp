#ifndef SCOT_SPACETIME_HPP
#define SCOT_SPACETIME_HPP

#include <string>
#include <vector>

// Minkowski geometry in a single fixed frame, signature (+,-,-,-), c = 1.

namespace scot::spacetime {

// |interval_squared| below this counts as lightlike; honest schedules place
// messages exactly on the cone.
inline constexpr double kLightlikeTol = 1e-12;

struct Event {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool finite() const;
    bool operator==(const Event&) const = default;
};

enum class CausalRelation {
    Coincident,
    TimelikeFuture,   // b strictly inside the future light cone of a
    TimelikePast,
    LightlikeFuture,  // b on the future light cone of a
    LightlikePast,
    Spacelike,
};

const char* to_string(CausalRelation r);

// (dt)^2 - (dx)^2 - (dy)^2 - (dz)^2
double interval_squared(const Event& a, const Event& b);

double spatial_distance(const Event& a, const Event& b);

// Classifies b relative to a.
CausalRelation causal_relation(const Event& a, const Event& b);

// The relation seen from the other endpoint: future <-> past.
CausalRelation causal_inverse(CausalRelation r);

// b in the closed future light cone of a.
bool in_future_cone(const Event& a, const Event& b);

// Output region R_i: intersection of the closed future light cone of its
// apex with the slab { apex.t <= t <= apex.t + v } and the spatial ball of
// radius v around the apex. The standard regions of the task have apex
// Q_i = (h, -(-1)^i h, 0, 0); the relaxed construction used by the
// timelike-relay demonstration places the apex elsewhere.
struct OutputRegion {
    int side = 0;  // bit i
    Event apex;
    double v = 0.0;

    static OutputRegion standard(int side, double h, double v);
    static OutputRegion relaxed(int side, const Event& apex, double v);
};

bool region_contains(const OutputRegion& region, const Event& e);

enum class GeometryVariant { MainSlab, PerBitPoints };

struct ProtocolGeometry {
    double h = 1.0;
    double v = 0.1;
    GeometryVariant variant = GeometryVariant::MainSlab;
    double delta = 0.1;  // PerBitPoints only
    int n = 1;

    Event point_p() const;            // P = (0,0,0,0)
    Event point_q(int i) const;       // Q_i = (h, -(-1)^i h, 0, 0)
    Event point_p_j(int j) const;     // P_j = (j*delta, 0, 0, 0)
    Event point_q_ij(int i, int j) const;  // Q_i^j = (h + j*delta, -(-1)^i h, 0, 0)
    OutputRegion region(int i) const; // MainSlab regions
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> issues;

    void fail(std::string issue);
};

// MainSlab passes iff v < 2h/3 (sufficient condition) and a sampled grid of
// region pairs is pairwise spacelike. PerBitPoints passes iff (n-1)*delta < 2h.
ValidationReport validate_geometry(const ProtocolGeometry& g);

// The point with minimal t (in this frame) inside both future light cones.
// Requires q0, q1 spacelike or coincident with equal time coordinates.
Event earliest_common_future(const Event& q0, const Event& q1);

}  // namespace scot::spacetime

#endif
