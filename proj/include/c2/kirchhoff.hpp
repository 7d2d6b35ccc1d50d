#pragma once

#include "c2/graph.hpp"
#include "c2/polynomial.hpp"
#include "c2/varset.hpp"

#include <array>
#include <optional>
#include <vector>

namespace c2 {

using PolyMatrix = std::vector<std::vector<Polynomial>>;
using IntMatrix = std::vector<std::vector<Int>>;

// Fraction-free determinant (Bareiss) with row pivoting.
Polynomial bareiss_det(PolyMatrix m);
Int int_det(IntMatrix m);
IntMatrix adjugate(const IntMatrix& m);

// The expanded (N+n) x (N+n) matrix whose determinant is the graph
// polynomial: edge rows ordered by label carrying the alpha diagonal and the
// incidence block, vertex rows carrying the negated transpose. The highest
// vertex id's column is dropped.
PolyMatrix expanded_matrix(const Graph& g);

enum class PsiBackend { trees, determinant };
// Sum over spanning trees of the product of the complementary edge variables.
// Requires a connected graph with at least one edge.
Polynomial graph_polynomial(const Graph& g, PsiBackend backend = PsiBackend::trees);

struct DodgsonSpec {
    VarSet I, J, K;
    static DodgsonSpec of(std::initializer_list<int> i, std::initializer_list<int> j,
                          std::initializer_list<int> k = {}) {
        return DodgsonSpec{VarSet::of(i), VarSet::of(j), VarSet::of(k)};
    }
};

enum class DodgsonBackend { subgraphs, elimination };
// det of the expanded matrix with edge rows I and edge columns J removed and
// the K variables set to zero. The subgraphs backend evaluates the signed
// spanning-subgraph expansion and is the production path; elimination runs
// Bareiss on the literal matrix. Both return the same determinant value.
Polynomial dodgson(const Graph& g, const DodgsonSpec& spec,
                   DodgsonBackend backend = DodgsonBackend::subgraphs);

// Spanning-forest polynomial for a partition of a subset of the vertices:
// sum over spanning forests whose trees realize exactly the given blocks.
Polynomial forest_polynomial(const Graph& g, const std::vector<std::vector<int>>& partition);

// Local data at a 3-valent vertex, signs calibrated so that
//   Psi = f0 (a_i a_j + a_j a_k + a_i a_k) + (f1+f2) a_k + (f1+f3) a_j
//         + (f2+f3) a_i + f123
// holds exactly for the ordered incident triple (i, j, k).
struct ThreeValentData {
    std::array<int, 3> labels{};
    Polynomial f0, f1, f2, f3, f123;
};
ThreeValentData three_valent_data(const Graph& g, int v,
                                  std::optional<std::array<int, 3>> triple = std::nullopt);

// Local data at a 4-valent vertex with incident labels l1 < l2 < l3 < l4.
// b[i][j] and cpair[i][j] are indexed by positions 1..4 within that quadruple.
struct FourValentData {
    std::array<int, 4> labels{};
    Polynomial a;
    std::array<std::array<Polynomial, 5>, 5> b{};
    std::array<std::array<Polynomial, 5>, 5> cpair{};
    bool rb_sign_rule_consistent = false; // paper's verbatim r_b signs satisfied e66
};
FourValentData four_valent_data(const Graph& g, int v);

// Two-edge surgery at a 4-valent vertex: the vertex and its four edges are
// removed; e_s joins the far endpoints of the s-pair, e_t those of the
// t-pair. Pairs are positions 1..4 within the sorted incident quadruple.
struct SurgeryPairing {
    std::array<int, 2> s_pair{1, 2};
    std::array<int, 2> t_pair{3, 4};
};
struct SurgeryResult {
    Graph graph;
    int s_label = 0;
    int t_label = 0;
};
SurgeryResult surgery(const Graph& g, int v, const SurgeryPairing& pairing = SurgeryPairing{});

} // namespace c2
