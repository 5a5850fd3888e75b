#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "rainbow/core/certificate.hpp"
#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/gen/steiner.hpp"

namespace rainbow {

// FNV-1a over raw bytes; used to fingerprint input files in manifests and
// certificates.
inline uint64_t fnv1a_digest(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Colouring file: line 1 "n C"; one "u v c" line per edge, 0-based,
// whitespace-separated, \n newlines. Complete graphs list all n(n-1)/2 edges.
inline std::string write_colouring(const ColouredGraph& g) {
    std::ostringstream os;
    os << g.n() << ' ' << g.colour_count() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << ' ' << g.colour(e) << '\n';
    return os.str();
}

inline ColouredGraph read_colouring(std::istream& in) {
    int n = 0, colours = 0;
    if (!(in >> n >> colours)) throw InputError("colouring file: missing header");
    ColouredGraph g(n, colours);
    int u, v, c;
    while (in >> u >> v >> c) {
        g.check_vertex(u);
        g.check_vertex(v);
        g.add_edge(u, v, c);
    }
    return g;
}

// Certificate file: line 1 "k"; per tree: "root t m" then m lines "u v".
inline std::string write_certificate(const ForestCertificate& cert) {
    std::ostringstream os;
    os << cert.trees.size() << '\n';
    for (const CertTree& tree : cert.trees) {
        os << tree.root << ' ' << tree.declared_t << ' ' << tree.edges.size() << '\n';
        for (const Edge& e : tree.edges) os << e.u << ' ' << e.v << '\n';
    }
    return os.str();
}

inline ForestCertificate read_certificate(std::istream& in) {
    ForestCertificate cert;
    size_t k = 0;
    if (!(in >> k)) throw InputError("certificate file: missing tree count");
    cert.trees.resize(k);
    for (CertTree& tree : cert.trees) {
        size_t m = 0;
        if (!(in >> tree.root >> tree.declared_t >> m))
            throw InputError("certificate file: bad tree header");
        tree.edges.reserve(m);
        for (size_t i = 0; i < m; ++i) {
            int u, v;
            if (!(in >> u >> v)) throw InputError("certificate file: truncated edge list");
            tree.edges.emplace_back(u, v);
        }
    }
    return cert;
}

// STS file: line 1 "m", then one "a b c" line per triple.
inline std::string write_sts(const SteinerTripleSystem& sts) {
    std::ostringstream os;
    os << sts.m << '\n';
    for (const Triple& t : sts.triples) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return os.str();
}

inline SteinerTripleSystem read_sts(std::istream& in) {
    SteinerTripleSystem sts;
    if (!(in >> sts.m)) throw InputError("sts file: missing point count");
    Triple t;
    while (in >> t[0] >> t[1] >> t[2]) {
        std::sort(t.begin(), t.end());
        sts.triples.push_back(t);
    }
    return sts;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << bytes;
}

}  // namespace rainbow
