#pragma once

#include <optional>
#include <string>
#include <vector>

#include "retract/graph.hpp"

namespace retract {

// Total map from a source vertex range onto target vertex ids.
struct VertexMap {
    VertexList image;

    int domain_size() const { return static_cast<int>(image.size()); }
    Vertex operator()(Vertex v) const { return image[static_cast<std::size_t>(v)]; }

    static VertexMap identity(int n);
    static VertexMap constant(int n, Vertex target) { return {VertexList(static_cast<std::size_t>(n), target)}; }

    bool operator==(const VertexMap&) const = default;
};

// (outer . inner)(v) = outer(inner(v))
VertexMap compose(const VertexMap& outer, const VertexMap& inner);

// rho: G -> H is the retraction, gamma: H -> G the co-retraction.
struct RetractCertificate {
    VertexMap rho;
    VertexMap gamma;

    static RetractCertificate identity(int n) { return {VertexMap::identity(n), VertexMap::identity(n)}; }
    bool operator==(const RetractCertificate&) const = default;
};

// Outcome of any retract decider. A YES answer always carries a certificate.
struct RetractResult {
    std::optional<RetractCertificate> certificate;
    std::string reason;  // set on NO

    bool yes() const { return certificate.has_value(); }
    explicit operator bool() const { return yes(); }

    static RetractResult accept(RetractCertificate c) { return {std::move(c), {}}; }
    static RetractResult reject(std::string why) { return {std::nullopt, std::move(why)}; }
};

bool is_homomorphism(const Graph& g, const Graph& h, const VertexMap& map);

bool verify_retract_certificate(const Graph& g, const Graph& h, const RetractCertificate& cert);

// Given A a retract of G and B a retract of A, witness B as a retract of G.
// Throws GraphError when the A-sides of the two certificates disagree in size.
RetractCertificate compose_certificates(const RetractCertificate& g_to_a, const RetractCertificate& a_to_b);

}  // namespace retract
