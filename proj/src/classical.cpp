#include "scot/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace scot::classical {

std::size_t ClassicalProtocol::prob_index(int x0, int x1, int b, int gbar) const {
    const std::size_t in = static_cast<std::size_t>(inputs());
    const std::size_t ev = static_cast<std::size_t>(events());
    return ((static_cast<std::size_t>(x0) * in + x1) * 2 + b) * ev + gbar;
}

std::size_t ClassicalProtocol::decoder_index(int i, int x0, int x1, int gbar) const {
    const std::size_t in = static_cast<std::size_t>(inputs());
    const std::size_t ev = static_cast<std::size_t>(events());
    return ((static_cast<std::size_t>(i) * in + x0) * in + x1) * ev + gbar;
}

void ClassicalProtocol::validate() const {
    if (n < 1 || size_g < 1 || size_g0 < 1 || size_g1 < 1)
        throw std::invalid_argument("classical protocol: sizes must be positive");
    const std::size_t want_prob =
        static_cast<std::size_t>(inputs()) * inputs() * 2 * events();
    const std::size_t want_dec = static_cast<std::size_t>(2) * inputs() * inputs() * events();
    if (prob.size() != want_prob || decoder.size() != want_dec)
        throw std::invalid_argument("classical protocol: table sizes inconsistent");
    for (int x0 = 0; x0 < inputs(); ++x0)
        for (int x1 = 0; x1 < inputs(); ++x1)
            for (int b = 0; b < 2; ++b) {
                double sum = 0;
                for (int g = 0; g < events(); ++g) {
                    const double v = p(x0, x1, b, g);
                    if (v < -1e-12) throw std::invalid_argument("negative probability");
                    sum += v;
                }
                if (std::abs(sum - 1.0) > 1e-10)
                    throw std::invalid_argument("distribution does not sum to 1");
            }
    for (double v : decoder)
        if (v < -1e-12 || v > 1.0 + 1e-12)
            throw std::invalid_argument("decoder value outside [0,1]");
}

double alice_attack(const ClassicalProtocol& p, int x0, int x1) {
    p.validate();
    // Partition rule: guess b = i when the event favors i.
    double partition = 0;
    double tvd_sum = 0;
    for (int g = 0; g < p.events(); ++g) {
        const double p0 = p.p(x0, x1, 0, g);
        const double p1 = p.p(x0, x1, 1, g);
        partition += 0.5 * ((p0 >= p1) ? p0 : p1);
        tvd_sum += std::abs(p0 - p1);
    }
    const double closed_form = 0.5 + 0.25 * tvd_sum;
    if (std::abs(partition - closed_form) > 1e-10)
        throw std::runtime_error("partition rule and closed form disagree");
    return closed_form;
}

ImpossibilityReport bob_double_run_attack(const ClassicalProtocol& p) {
    p.validate();
    ImpossibilityReport rep;

    for (int x0 = 0; x0 < p.inputs(); ++x0)
        for (int x1 = 0; x1 < p.inputs(); ++x1) {
            double tvd = 0;
            for (int g = 0; g < p.events(); ++g)
                tvd += std::abs(p.p(x0, x1, 0, g) - p.p(x0, x1, 1, g));
            rep.tvd_sum = std::max(rep.tvd_sum, tvd);
        }
    rep.delta = rep.tvd_sum / 4.0;

    const double norm = 1.0 / (static_cast<double>(p.inputs()) * p.inputs());
    double cheat[2] = {0, 0};
    for (int i = 0; i < 2; ++i) {
        double honest = 0, crossed = 0, joint = 0;
        for (int x0 = 0; x0 < p.inputs(); ++x0)
            for (int x1 = 0; x1 < p.inputs(); ++x1)
                for (int g = 0; g < p.events(); ++g) {
                    const double pg = p.p(x0, x1, i, g);  // events drawn under b = i
                    const double di = p.dec(i, x0, x1, g);
                    const double dbar = p.dec(1 - i, x0, x1, g);
                    honest += di * pg;
                    crossed += dbar * pg;
                    joint += di * dbar * pg;
                }
        rep.p_b_honest[i] = honest * norm;
        rep.p_b_crossed[i] = crossed * norm;
        cheat[i] = joint * norm;
    }
    rep.epsilon = std::max(1.0 - rep.p_b_honest[0], 1.0 - rep.p_b_honest[1]);
    rep.p_b_cheat = std::max(cheat[0], cheat[1]);
    rep.bound_rhs = 1.0 - 2.0 * rep.epsilon - 4.0 * rep.delta;
    rep.bound_holds = rep.p_b_cheat >= rep.bound_rhs - 1e-10;
    rep.chain_holds = rep.p_b_crossed[0] >= rep.p_b_honest[1] - 4.0 * rep.delta - 1e-10 &&
                      rep.p_b_crossed[1] >= rep.p_b_honest[0] - 4.0 * rep.delta - 1e-10;
    return rep;
}

ClassicalProtocol random_protocol(std::uint64_t seed, int max_n, int max_events) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> pick_n(1, max_n);
    std::uniform_int_distribution<int> pick_size(1, max_events);
    std::gamma_distribution<double> unit_gamma(1.0, 1.0);   // simplex sampling
    std::gamma_distribution<double> beta_a(2.0, 1.0);
    std::gamma_distribution<double> beta_b(2.0 / 3.0, 1.0);

    ClassicalProtocol p;
    p.n = pick_n(gen);
    p.size_g = pick_size(gen);
    p.size_g0 = pick_size(gen);
    p.size_g1 = pick_size(gen);
    p.prob.assign(static_cast<std::size_t>(p.inputs()) * p.inputs() * 2 * p.events(), 0.0);
    p.decoder.assign(static_cast<std::size_t>(2) * p.inputs() * p.inputs() * p.events(), 0.0);

    for (int x0 = 0; x0 < p.inputs(); ++x0)
        for (int x1 = 0; x1 < p.inputs(); ++x1)
            for (int b = 0; b < 2; ++b) {
                double sum = 0;
                std::vector<double> draw(static_cast<std::size_t>(p.events()));
                for (auto& v : draw) {
                    v = unit_gamma(gen);
                    sum += v;
                }
                for (int g = 0; g < p.events(); ++g)
                    p.prob[p.prob_index(x0, x1, b, g)] = draw[g] / sum;
            }
    for (auto& v : p.decoder) {
        const double a = beta_a(gen);
        const double b = beta_b(gen);
        v = a / (a + b);
    }
    p.validate();
    return p;
}

ClassicalProtocol tradeoff_family(double theta) {
    if (theta < 0.0 || theta > 1.0) throw std::invalid_argument("theta must be in [0,1]");
    ClassicalProtocol p;
    p.n = 1;
    p.size_g = 2;  // the event at P carries the (possibly damped) leak of b
    p.size_g0 = 1;
    p.size_g1 = 1;
    p.prob.assign(static_cast<std::size_t>(p.inputs()) * p.inputs() * 2 * p.events(), 0.0);
    p.decoder.assign(static_cast<std::size_t>(2) * p.inputs() * p.inputs() * p.events(), 0.0);
    for (int x0 = 0; x0 < p.inputs(); ++x0)
        for (int x1 = 0; x1 < p.inputs(); ++x1)
            for (int b = 0; b < 2; ++b) {
                p.prob[p.prob_index(x0, x1, b, b)] = 1.0 - theta / 2.0;
                p.prob[p.prob_index(x0, x1, b, 1 - b)] = theta / 2.0;
            }
    // The honest run decodes perfectly when the event matches its input
    // branch; a crossed run succeeds only to the extent the leak is damped.
    for (int i = 0; i < 2; ++i)
        for (int x0 = 0; x0 < p.inputs(); ++x0)
            for (int x1 = 0; x1 < p.inputs(); ++x1)
                for (int g = 0; g < p.events(); ++g)
                    p.decoder[p.decoder_index(i, x0, x1, g)] = (g == i) ? 1.0 : theta;
    p.validate();
    return p;
}

std::vector<TradeoffPoint> tradeoff_scan(int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("grid needs at least two points");
    std::vector<TradeoffPoint> out;
    out.reserve(static_cast<std::size_t>(grid_points));
    for (int k = 0; k < grid_points; ++k) {
        const double theta = static_cast<double>(k) / (grid_points - 1);
        const auto p = tradeoff_family(theta);
        const auto rep = bob_double_run_attack(p);
        out.push_back(TradeoffPoint{theta, rep.delta, rep.epsilon, rep.p_b_cheat});
    }
    return out;
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

void write_tradeoff_csv(std::ostream& os, const std::vector<TradeoffPoint>& points) {
    os << "theta,delta,epsilon,p_b_cheat\n";
    for (const auto& pt : points)
        os << fmt_double(pt.theta) << "," << fmt_double(pt.delta) << "," << fmt_double(pt.epsilon)
           << "," << fmt_double(pt.p_b_cheat) << "\n";
}

void save_protocol(std::ostream& os, const ClassicalProtocol& p) {
    os << p.n << " " << p.size_g << " " << p.size_g0 << " " << p.size_g1 << "\n";
    for (int x0 = 0; x0 < p.inputs(); ++x0)
        for (int x1 = 0; x1 < p.inputs(); ++x1)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < p.events(); ++g)
                    os << x0 << " " << x1 << " " << b << " " << g << " "
                       << fmt_double(p.p(x0, x1, b, g)) << "\n";
    for (int i = 0; i < 2; ++i)
        for (int x0 = 0; x0 < p.inputs(); ++x0)
            for (int x1 = 0; x1 < p.inputs(); ++x1)
                for (int g = 0; g < p.events(); ++g)
                    os << i << " " << x0 << " " << x1 << " " << g << " "
                       << fmt_double(p.dec(i, x0, x1, g)) << "\n";
}

ClassicalProtocol load_protocol(std::istream& is) {
    ClassicalProtocol p;
    if (!(is >> p.n >> p.size_g >> p.size_g0 >> p.size_g1))
        throw std::invalid_argument("protocol table: bad header");
    if (p.n < 1 || p.n > 16 || p.size_g < 1 || p.size_g0 < 1 || p.size_g1 < 1)
        throw std::invalid_argument("protocol table: header out of range");
    p.prob.assign(static_cast<std::size_t>(p.inputs()) * p.inputs() * 2 * p.events(), 0.0);
    p.decoder.assign(static_cast<std::size_t>(2) * p.inputs() * p.inputs() * p.events(), 0.0);
    for (int x0 = 0; x0 < p.inputs(); ++x0)
        for (int x1 = 0; x1 < p.inputs(); ++x1)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < p.events(); ++g) {
                    int rx0, rx1, rb, rg;
                    double v;
                    if (!(is >> rx0 >> rx1 >> rb >> rg >> v))
                        throw std::invalid_argument("protocol table: truncated probabilities");
                    if (rx0 != x0 || rx1 != x1 || rb != b || rg != g)
                        throw std::invalid_argument("protocol table: rows out of order");
                    p.prob[p.prob_index(x0, x1, b, g)] = v;
                }
    for (int i = 0; i < 2; ++i)
        for (int x0 = 0; x0 < p.inputs(); ++x0)
            for (int x1 = 0; x1 < p.inputs(); ++x1)
                for (int g = 0; g < p.events(); ++g) {
                    int ri, rx0, rx1, rg;
                    double v;
                    if (!(is >> ri >> rx0 >> rx1 >> rg >> v))
                        throw std::invalid_argument("protocol table: truncated decoder");
                    if (ri != i || rx0 != x0 || rx1 != x1 || rg != g)
                        throw std::invalid_argument("protocol table: decoder rows out of order");
                    p.decoder[p.decoder_index(i, x0, x1, g)] = v;
                }
    p.validate();
    return p;
}

}  // namespace scot::classical
