#include "sq17/discharge.hpp"

#include <numeric>
#include <sstream>

#include "sq17/metrics.hpp"

namespace sq17 {

long long ChargeMap::total_fifteenths() const {
    long long t = 0;
    for (long long x : vertex_fifteenths) t += x;
    for (long long x : face_fifteenths) t += x;
    return t;
}

ChargeMap initial_charges(const EmbeddedGraph& g) {
    ChargeMap c;
    c.vertex_fifteenths.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        c.vertex_fifteenths[v] = 15LL * (g.degree(v) - 4);
    c.face_fifteenths.resize(g.face_count());
    for (int f = 0; f < g.face_count(); ++f)
        c.face_fifteenths[f] = 15LL * (g.face(f).degree() - 4);
    return c;
}

ChargeMap discharged_charges(const EmbeddedGraph& g) {
    ChargeMap c = initial_charges(g);
    c.final_phase = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d == 3) {
            for (int u : g.rotation(v))
                if (g.degree(u) == 5) {  // R1
                    c.vertex_fifteenths[v] += 3;
                    c.vertex_fifteenths[u] -= 3;
                }
        } else if (d == 4 && f_count(g, v, 3) == 1) {
            for (int u : g.rotation(v))
                if (g.degree(u) == 5) {  // R2
                    c.vertex_fifteenths[v] += 1;
                    c.vertex_fifteenths[u] -= 1;
                }
        }
        if (is_bad_five_vertex(g, v)) {
            for (int u : corners_of(g, v)) {  // R3
                c.vertex_fifteenths[v] += 1;
                c.vertex_fifteenths[u] -= 1;
            }
        }
    }
    for (int fi = 0; fi < g.face_count(); ++fi) {
        const Face& f = g.face(fi);
        if (f.degree() == 3) {
            for (const Dart& dart : f.walk)
                if (g.degree(dart.from) >= 4) {  // R4
                    c.face_fifteenths[fi] += 5;
                    c.vertex_fifteenths[dart.from] -= 5;
                }
        } else if (f.degree() >= 5) {
            for (const Dart& dart : f.walk) {  // R5, per incidence slot
                c.face_fifteenths[fi] -= 3;
                c.vertex_fifteenths[dart.from] += 3;
            }
        }
    }
    return c;
}

AuditReport audit(const EmbeddedGraph& g) {
    if (!g.connected()) throw NotConnected("audit requires a connected graph");
    AuditReport r;
    r.initial = initial_charges(g);
    r.final_ = discharged_charges(g);
    r.total_fifteenths = r.initial.total_fifteenths();
    r.conserved = r.total_fifteenths == r.final_.total_fifteenths();
    for (size_t v = 0; v < r.final_.vertex_fifteenths.size(); ++v)
        if (r.final_.vertex_fifteenths[v] < 0)
            r.negative_elements.push_back("v " + std::to_string(v));
    for (size_t f = 0; f < r.final_.face_fifteenths.size(); ++f)
        if (r.final_.face_fifteenths[f] < 0)
            r.negative_elements.push_back("f " + std::to_string(f));
    r.forbidden = classify_forbidden_configs(g);
    r.proof_anomaly = r.negative_elements.empty() && r.forbidden.empty();
    return r;
}

std::string to_text(const AuditReport& r) {
    std::ostringstream out;
    for (size_t v = 0; v < r.final_.vertex_fifteenths.size(); ++v)
        out << "mu' v " << v << " " << r.final_.vertex_fifteenths[v] << "/15\n";
    for (size_t f = 0; f < r.final_.face_fifteenths.size(); ++f)
        out << "mu' f " << f << " " << r.final_.face_fifteenths[f] << "/15\n";
    out << "total " << r.final_.total_fifteenths() << "/15\n";
    return out.str();
}

}  // namespace sq17
