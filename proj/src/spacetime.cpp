#include "scot/spacetime.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scot::spacetime {

bool Event::finite() const {
    return std::isfinite(t) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

const char* to_string(CausalRelation r) {
    switch (r) {
        case CausalRelation::Coincident: return "coincident";
        case CausalRelation::TimelikeFuture: return "timelike-future";
        case CausalRelation::TimelikePast: return "timelike-past";
        case CausalRelation::LightlikeFuture: return "lightlike-future";
        case CausalRelation::LightlikePast: return "lightlike-past";
        case CausalRelation::Spacelike: return "spacelike";
    }
    return "?";
}

double interval_squared(const Event& a, const Event& b) {
    const double dt = b.t - a.t;
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double dz = b.z - a.z;
    return dt * dt - dx * dx - dy * dy - dz * dz;
}

double spatial_distance(const Event& a, const Event& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double dz = b.z - a.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

CausalRelation causal_relation(const Event& a, const Event& b) {
    if (a == b) return CausalRelation::Coincident;
    const double s2 = interval_squared(a, b);
    const double dt = b.t - a.t;
    if (std::abs(s2) < kLightlikeTol) {
        return dt > 0 ? CausalRelation::LightlikeFuture : CausalRelation::LightlikePast;
    }
    if (s2 > 0) {
        return dt > 0 ? CausalRelation::TimelikeFuture : CausalRelation::TimelikePast;
    }
    return CausalRelation::Spacelike;
}

CausalRelation causal_inverse(CausalRelation r) {
    switch (r) {
        case CausalRelation::TimelikeFuture: return CausalRelation::TimelikePast;
        case CausalRelation::TimelikePast: return CausalRelation::TimelikeFuture;
        case CausalRelation::LightlikeFuture: return CausalRelation::LightlikePast;
        case CausalRelation::LightlikePast: return CausalRelation::LightlikeFuture;
        default: return r;
    }
}

bool in_future_cone(const Event& a, const Event& b) {
    return interval_squared(a, b) >= -kLightlikeTol && b.t >= a.t;
}

OutputRegion OutputRegion::standard(int side, double h, double v) {
    if (h <= 0 || v <= 0) throw std::invalid_argument("output region requires h > 0 and v > 0");
    const double sign = (side == 0) ? -1.0 : 1.0;
    return OutputRegion{side, Event{h, sign * h, 0, 0}, v};
}

OutputRegion OutputRegion::relaxed(int side, const Event& apex, double v) {
    if (v <= 0) throw std::invalid_argument("output region requires v > 0");
    return OutputRegion{side, apex, v};
}

bool region_contains(const OutputRegion& region, const Event& e) {
    const Event& q = region.apex;
    if (e.t < q.t - kLightlikeTol || e.t > q.t + region.v + kLightlikeTol) return false;
    if (spatial_distance(q, e) > region.v + kLightlikeTol) return false;
    return in_future_cone(q, e);
}

Event ProtocolGeometry::point_p() const { return Event{0, 0, 0, 0}; }

Event ProtocolGeometry::point_q(int i) const {
    const double sign = (i == 0) ? -1.0 : 1.0;
    return Event{h, sign * h, 0, 0};
}

Event ProtocolGeometry::point_p_j(int j) const { return Event{j * delta, 0, 0, 0}; }

Event ProtocolGeometry::point_q_ij(int i, int j) const {
    const double sign = (i == 0) ? -1.0 : 1.0;
    return Event{h + j * delta, sign * h, 0, 0};
}

OutputRegion ProtocolGeometry::region(int i) const { return OutputRegion::standard(i, h, v); }

void ValidationReport::fail(std::string issue) {
    ok = false;
    issues.push_back(std::move(issue));
}

namespace {

std::string describe_pair(const Event& a, const Event& b) {
    std::ostringstream os;
    os << "(" << a.t << "," << a.x << "," << a.y << "," << a.z << ") vs ("
       << b.t << "," << b.x << "," << b.y << "," << b.z << ")";
    return os.str();
}

// Grid sample of region R_i: slab times, radial/temporal offsets from the apex
// restricted to the future cone.
std::vector<Event> sample_region(const OutputRegion& r, int steps) {
    std::vector<Event> out;
    for (int it = 0; it <= steps; ++it) {
        const double dt = r.v * it / steps;
        for (int ix = -steps; ix <= steps; ++ix) {
            const double dx = r.v * ix / steps;
            Event e{r.apex.t + dt, r.apex.x + dx, r.apex.y, r.apex.z};
            if (region_contains(r, e)) out.push_back(e);
        }
    }
    return out;
}

}  // namespace

ValidationReport validate_geometry(const ProtocolGeometry& g) {
    ValidationReport report;
    if (!(g.h > 0)) report.fail("h must be positive");
    if (g.n < 1) report.fail("n must be at least 1");
    if (g.variant == GeometryVariant::MainSlab) {
        if (!(g.v > 0)) report.fail("v must be positive");
        if (!report.ok) return report;
        // Max temporal separation within the regions is v; min spatial
        // separation is 2h - 2v; spacelike needs v < 2h - 2v.
        if (!(g.v < 2.0 * g.h / 3.0)) {
            std::ostringstream os;
            os << "MainSlab requires v < 2h/3: v=" << g.v << ", h=" << g.h;
            report.fail(os.str());
            return report;
        }
        const auto r0 = g.region(0);
        const auto r1 = g.region(1);
        const auto s0 = sample_region(r0, 16);
        const auto s1 = sample_region(r1, 16);
        for (const auto& e0 : s0) {
            for (const auto& e1 : s1) {
                if (causal_relation(e0, e1) != CausalRelation::Spacelike) {
                    report.fail("sampled region pair not spacelike: " + describe_pair(e0, e1));
                    return report;
                }
            }
        }
    } else {
        if (!(g.delta > 0)) report.fail("delta must be positive");
        if (!report.ok) return report;
        // Every Q_0^j vs Q_1^j' spacelike: |dt| <= (n-1)*delta < 2h = |dx|.
        if (!((g.n - 1) * g.delta < 2.0 * g.h)) {
            std::ostringstream os;
            os << "PerBitPoints requires (n-1)*delta < 2h: n=" << g.n << ", delta=" << g.delta
               << ", h=" << g.h;
            report.fail(os.str());
            return report;
        }
        for (int j = 0; j < g.n; ++j) {
            for (int jp = 0; jp < g.n; ++jp) {
                const Event a = g.point_q_ij(0, j);
                const Event b = g.point_q_ij(1, jp);
                if (causal_relation(a, b) != CausalRelation::Spacelike) {
                    report.fail("output points not spacelike: " + describe_pair(a, b));
                    return report;
                }
            }
        }
    }
    return report;
}

Event earliest_common_future(const Event& q0, const Event& q1) {
    if (q0 == q1) return q0;
    const auto rel = causal_relation(q0, q1);
    if (rel != CausalRelation::Spacelike) {
        throw std::invalid_argument("earliest_common_future requires spacelike separated inputs");
    }
    if (std::abs(q0.t - q1.t) > kLightlikeTol) {
        throw std::invalid_argument("earliest_common_future requires equal time coordinates");
    }
    const double d = spatial_distance(q0, q1);
    return Event{q0.t + d / 2.0, (q0.x + q1.x) / 2.0, (q0.y + q1.y) / 2.0, (q0.z + q1.z) / 2.0};
}

}  // namespace scot::spacetime
