#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/spider.hpp"

namespace rainbow {

// What a certificate claims about its trees. The verifier recomputes every
// claimed predicate from the edge lists; producer metadata is never trusted.
struct Claims {
    bool spanning = false;
    bool rainbow = false;
    bool edge_disjoint = false;
    bool spider_shaped = false;
    bool isomorphic = false;

    std::string to_string() const {
        std::string out;
        auto add = [&out](bool on, const char* name) {
            if (!on) return;
            if (!out.empty()) out += ",";
            out += name;
        };
        add(spanning, "spanning");
        add(rainbow, "rainbow");
        add(edge_disjoint, "edgeDisjoint");
        add(spider_shaped, "spiderShaped");
        add(isomorphic, "isomorphic");
        return out.empty() ? "-" : out;
    }
};

struct CertTree {
    EdgeList edges;
    int root = -1;
    int declared_t = -1;  // -1: no spider parameter declared
};

// A list of edge lists claimed to be edge-disjoint rainbow spanning
// trees/spiders in a host colouring.
struct ForestCertificate {
    uint64_t host_digest = 0;
    std::vector<CertTree> trees;
    Claims claims;
    // Filled by pipelines on partial success; empty means clean completion.
    std::string stage_report;
};

struct TreeReport {
    bool edges_in_host = false;
    bool is_tree = false;
    bool spanning = false;
    bool rainbow = false;
    bool spider_shaped = false;
    int spider_t = -1;
};

struct VerificationReport {
    std::vector<TreeReport> trees;
    bool edge_disjoint = false;
    bool isomorphic = false;
    bool pass = false;

    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < trees.size(); ++i) {
            const TreeReport& t = trees[i];
            os << "tree " << i << ": in_host=" << t.edges_in_host << " tree=" << t.is_tree
               << " spanning=" << t.spanning << " rainbow=" << t.rainbow
               << " spider=" << t.spider_shaped;
            if (t.spider_shaped) os << "(t=" << t.spider_t << ")";
            os << "\n";
        }
        os << "edge_disjoint=" << edge_disjoint << " isomorphic=" << isomorphic
           << " pass=" << pass << "\n";
        return os.str();
    }
};

// Recomputes every claimed predicate from scratch. Failures are report
// entries, never exceptions. Two spanning t-spiders on the same host are
// isomorphic iff their t values agree, so "isomorphic" reduces to that check.
inline VerificationReport verify_certificate(const ColouredGraph& g,
                                             const ForestCertificate& cert) {
    VerificationReport report;
    report.trees.resize(cert.trees.size());

    for (size_t i = 0; i < cert.trees.size(); ++i) {
        const CertTree& tree = cert.trees[i];
        TreeReport& tr = report.trees[i];

        tr.edges_in_host = tree.root >= 0 && tree.root < g.n();
        std::set<Edge> distinct;
        for (const Edge& e : tree.edges) {
            if (e.u < 0 || e.v < 0 || e.u >= g.n() || e.v >= g.n() || !g.has_edge(e.u, e.v) ||
                !distinct.insert(e).second) {
                tr.edges_in_host = false;
                break;
            }
        }
        if (!tr.edges_in_host) continue;

        // Tree check on the edge list alone (connected, |E| = |V| - 1); the
        // declared root only matters for the spider shape.
        std::map<int, std::vector<int>> adj;
        for (const Edge& e : tree.edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        if (tree.edges.empty()) {
            tr.is_tree = true;
            tr.spanning = g.order() == 1;
        } else {
            std::set<int> seen{adj.begin()->first};
            std::vector<int> queue{adj.begin()->first};
            for (size_t q = 0; q < queue.size(); ++q)
                for (int u : adj[queue[q]])
                    if (seen.insert(u).second) queue.push_back(u);
            tr.is_tree = seen.size() == adj.size() && adj.size() == tree.edges.size() + 1;
            tr.spanning = tr.is_tree && static_cast<int>(seen.size()) == g.order();
        }

        bool colour_ok = true;
        std::set<int> colours;
        for (const Edge& e : tree.edges)
            if (!colours.insert(g.colour(e)).second) colour_ok = false;
        tr.rainbow = colour_ok;

        if (tr.is_tree) {
            try {
                Spider s = classify_spider(g, tree.edges, tree.root);
                tr.spider_shaped = true;
                tr.spider_t = s.t();
            } catch (const ShapeError&) {
                tr.spider_shaped = false;
            }
        }
    }

    // Global: pairwise edge-disjointness over all listed trees.
    report.edge_disjoint = true;
    std::set<Edge> all_edges;
    for (const CertTree& tree : cert.trees)
        for (const Edge& e : tree.edges)
            if (!all_edges.insert(e).second) report.edge_disjoint = false;

    // Isomorphic: all trees are spiders with one common t (equal-order
    // spanning spiders with equal t are isomorphic).
    report.isomorphic = !report.trees.empty();
    for (const TreeReport& tr : report.trees)
        if (!tr.spider_shaped || tr.spider_t != report.trees[0].spider_t)
            report.isomorphic = false;

    report.pass = true;
    for (const TreeReport& tr : report.trees) {
        if (!tr.edges_in_host) report.pass = false;
        if (cert.claims.spanning && !tr.spanning) report.pass = false;
        if (cert.claims.rainbow && !tr.rainbow) report.pass = false;
        if (cert.claims.spider_shaped && !tr.spider_shaped) report.pass = false;
    }
    if (cert.claims.edge_disjoint && !report.edge_disjoint) report.pass = false;
    if (cert.claims.isomorphic && !report.isomorphic) report.pass = false;
    return report;
}

}  // namespace rainbow
