#pragma once

// Umbrella header: rainbow spanning trees and spiders in properly
// edge-coloured complete graphs, with generators, pipelines and an
// independent certificate verifier.

#include "rainbow/core/brute_force.hpp"
#include "rainbow/core/certificate.hpp"
#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/io.hpp"
#include "rainbow/core/spider.hpp"
#include "rainbow/factorization/pipeline.hpp"
#include "rainbow/factorization/spider_decomposition.hpp"
#include "rainbow/factorization/tree_growth.hpp"
#include "rainbow/factorization/triple_assignment.hpp"
#include "rainbow/gen/generators.hpp"
#include "rainbow/gen/prng.hpp"
#include "rainbow/gen/steiner.hpp"
#include "rainbow/iso/rainbow_cycle.hpp"
#include "rainbow/iso/reshape.hpp"
#include "rainbow/iso/total_digraph.hpp"
#include "rainbow/matchings/matching_family.hpp"
#include "rainbow/matchings/rainbow_matching.hpp"
#include "rainbow/proper/bipartite_cover.hpp"
#include "rainbow/proper/free_graph.hpp"
#include "rainbow/proper/pipeline.hpp"
#include "rainbow/proper/spanning_family.hpp"
#include "rainbow/proper/star_extension.hpp"
