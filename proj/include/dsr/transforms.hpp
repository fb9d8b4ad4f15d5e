#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsr/reconf.hpp"

namespace dsr {

// ---- rule conversions ------------------------------------------------

// Rewrites a valid token addition/removal sequence (cap k+1, endpoints of
// size k) into an equivalent jump sequence with the same endpoints:
// same-vertex add/remove pairs cancel, dips below k are lifted by swapping
// a minimum-size configuration's (remove x, add y) into (add y, remove x),
// and the remaining add/remove pairs fuse into jumps. Throws InputError
// when the input is invalid or its endpoints differ in size.
ReconfSequence tar_to_tj(const Graph& g, const ReconfSequence& seq);

// Expands each jump(u, v) into add(v), remove(u); cap k+1.
ReconfSequence tj_to_tar(const Graph& g, const ReconfSequence& seq);

// ---- reductions ------------------------------------------------------

enum class VertexRole { OriginalCopy, CliqueSide, IndependentSide, ZGadget, ApexX, PendantY };

std::string role_name(VertexRole role);

struct ReductionOutput {
    Graph graph;
    std::vector<int> vmap;                        // original id -> new id
    std::vector<VertexRole> tags;                 // one per new vertex
    std::vector<std::pair<int, int>> gadget_edge; // for ZGadget vertices: the original edge
};

// Split graph G': a clique copy v_i of every original vertex plus an
// independent vertex w_j per original vertex, with v_i ~ w_j iff j lies
// in the closed neighborhood of i. Jump reconfiguration on G becomes
// slide reconfiguration on G'.
ReductionOutput split_reduction(const Graph& g);

// Maps a valid jump sequence on G to a slide sequence on the split graph
// (jumps become clique slides under vmap).
ReconfSequence split_lift(const ReductionOutput& r, const ReconfSequence& seq);

// Inverse direction: a valid slide sequence on the split graph whose
// endpoints live on the clique side projects to a jump sequence on G.
// Visits to the independent side are eliminated by fusing the pair
// (v_i -> w_j, w_j -> v_k) into jump(i, k); the pair cancels when k = i.
ReconfSequence split_project(const ReductionOutput& r, const ReconfSequence& seq);

// Bipartite graph G': one side holds copies of V(G) (original edges
// dropped) plus a pendant y, the other a subdivision vertex z_uv per
// original edge plus an apex x adjacent to all of the first side.
// Carries vertex-cover reconfiguration on a connected G into dominating
// set reconfiguration on G' (with x added to both endpoints). On a
// disconnected G the apex lets a redundant token cross between
// components, so only the forward implication survives there.
ReductionOutput bipartite_reduction(const Graph& g);

// Incidence subdivision: adds z_uv adjacent to u and v for every edge,
// keeping the original edges.
ReductionOutput incidence_subdivision(const Graph& g);

// Vertex numbering with distinct positive labels.
struct Labeling {
    std::vector<int> label;
    int bandwidth_bound = 0;
};

int bandwidth_of(const Graph& g, const std::vector<int>& label);

// Given a bandwidth-k numbering of the original graph, produces a
// numbering of the incidence subdivision with bandwidth at most k(k+1):
// originals are spread to 1 + (label-1)(k+1), each z_uv lands between its
// endpoints at the offset label(v) - label(u) from the lower one, and the
// whole map is compacted to consecutive labels 1..|V(G')|.
Labeling bandwidth_relabel(const std::vector<int>& label, int k, const ReductionOutput& r);

// ---- gadget generators -----------------------------------------------

struct NamedGraph {
    Graph graph;
    std::vector<std::string> names; // one per vertex
};

// Paired-triangle gadget family: ell >= 3 hubs w_i, each in one triangle
// with the shared vertex u and one with the shared vertex v. Its hub set
// {w_1..w_ell} is dominating yet admits no slide at k = ell, while all
// smaller token counts >= 2 stay mutually reachable.
NamedGraph gen_gell(int ell);

// Star with n leaves; center first.
NamedGraph gen_star(int n);

} // namespace dsr
