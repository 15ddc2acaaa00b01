#pragma once

#include <string>
#include <vector>

#include "sq17/embed.hpp"
#include "sq17/reduce.hpp"

namespace sq17 {

// Exact charges stored as integer numerators over the common denominator 15.
// Every rule amount is 1/15, 1/5 = 3/15 or 1/3 = 5/15.
inline constexpr long long kChargeDenominator = 15;

struct ChargeMap {
    std::vector<long long> vertex_fifteenths;
    std::vector<long long> face_fifteenths;
    bool final_phase = false;

    long long total_fifteenths() const;
};

// mu(x) = d(x) - 4 for vertices and faces.
ChargeMap initial_charges(const EmbeddedGraph& g);

// Single simultaneous round of the five transfer rules:
//  R1  3-vertex pulls 1/5 from each 5-valent neighbor
//  R2  4-vertex with f3 = 1 pulls 1/15 from each 5-valent neighbor
//  R3  bad 5-vertex pulls 1/15 from each of its corners
//  R4  3-face pulls 1/3 from each incident 4+-vertex
//  R5  5+-face pushes 1/5 to each incident vertex, per incidence slot
ChargeMap discharged_charges(const EmbeddedGraph& g);

struct AuditReport {
    ChargeMap initial;
    ChargeMap final_;
    bool conserved = false;
    long long total_fifteenths = 0;
    std::vector<std::string> negative_elements;  // "v <id>" / "f <index>"
    ConfigReport forbidden;
    bool proof_anomaly = false;  // no negatives and no forbidden configs
};

AuditReport audit(const EmbeddedGraph& g);

// One line per element: "mu' v <id> <num>/15", "mu' f <idx> <num>/15", then
// "total <num>/15".
std::string to_text(const AuditReport& r);

}  // namespace sq17
