#include "retract/certificate.hpp"

#include <numeric>

namespace retract {

VertexMap VertexMap::identity(int n) {
    VertexMap m{VertexList(static_cast<std::size_t>(n))};
    std::iota(m.image.begin(), m.image.end(), 0);
    return m;
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
    VertexMap out{VertexList(inner.image.size())};
    for (std::size_t v = 0; v < inner.image.size(); ++v) {
        const Vertex mid = inner.image[v];
        if (mid < 0 || mid >= outer.domain_size()) throw GraphError("compose: image outside outer domain");
        out.image[v] = outer(mid);
    }
    return out;
}

namespace {

bool well_formed(const VertexMap& m, int from, int to) {
    if (m.domain_size() != from) return false;
    for (Vertex v : m.image)
        if (v < 0 || v >= to) return false;
    return true;
}

}  // namespace

bool is_homomorphism(const Graph& g, const Graph& h, const VertexMap& map) {
    if (!well_formed(map, g.order(), h.order())) return false;
    for (int u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v && !h.adjacent(map(u), map(v))) return false;
    return true;
}

bool verify_retract_certificate(const Graph& g, const Graph& h, const RetractCertificate& cert) {
    if (!is_homomorphism(g, h, cert.rho) || !is_homomorphism(h, g, cert.gamma)) return false;
    for (int y = 0; y < h.order(); ++y)
        if (cert.rho(cert.gamma(y)) != y) return false;
    return true;
}

RetractCertificate compose_certificates(const RetractCertificate& g_to_a, const RetractCertificate& a_to_b) {
    const int a_size = g_to_a.gamma.domain_size();
    if (a_to_b.rho.domain_size() != a_size) throw GraphError("compose_certificates: intermediate graph sizes differ");
    return {compose(a_to_b.rho, g_to_a.rho), compose(g_to_a.gamma, a_to_b.gamma)};
}

}  // namespace retract
