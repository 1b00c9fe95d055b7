#pragma once

#include "sizefn/filtered_graph.hpp"
#include "sizefn/size_function.hpp"

#include <optional>

namespace sizefn {

/// Cover X = A u B by two vertex subsets. The cover is valid when the two
/// sets span all vertices and every edge lies entirely in A or entirely in
/// B; the induced subgraphs A, B and A n B inherit their values from X.
class Decomposition {
public:
    Decomposition(FilteredGraph x, std::vector<VertexId> a_ids, std::vector<VertexId> b_ids);

    const FilteredGraph& x() const { return x_; }
    const FilteredGraph& a() const { return a_; }
    const FilteredGraph& b() const { return b_; }
    const FilteredGraph& ab() const { return ab_; }
    const std::vector<VertexId>& a_ids() const { return a_ids_; }
    const std::vector<VertexId>& b_ids() const { return b_ids_; }

private:
    FilteredGraph x_;
    std::vector<VertexId> a_ids_;
    std::vector<VertexId> b_ids_;
    FilteredGraph a_;
    FilteredGraph b_;
    FilteredGraph ab_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<VertexId> uncovered_vertices;
    std::vector<std::pair<VertexId, VertexId>> uncovered_edges;  // in neither side
};

ValidationReport validate(const Decomposition& d);

enum class KernelMethod { nerve_cycle_rank, gaussian_elimination };

struct KernelRankReport {
    double v = 0.0;
    std::optional<double> u;
    std::size_t rank_ker_alpha = 0;
    KernelMethod method = KernelMethod::nerve_cycle_rank;
};

/// rank ker of H0((AnB)_v) -> H0(A_v) + H0(B_v), c -> (c in A, -c in B).
/// Computed as the cycle rank of the bipartite nerve whose vertices are the
/// components of A_v and B_v and whose edges are the components of (AnB)_v.
std::size_t ker_alpha_v_rank(const Decomposition& d, double v);
/// Same kernel via exact elimination on the signed component matrix.
std::size_t ker_alpha_v_rank_elimination(const Decomposition& d, double v);

/// rank ker of the relative map into H0(A_v,A_u) + H0(B_v,B_u); the domain
/// basis is the components of (AnB)_v that do not meet (AnB)_u. Requires
/// u < v. Always computed by exact elimination.
std::size_t ker_alpha_vu_rank(const Decomposition& d, double v, double u);

/// Kernel rank with its provenance. Absolute kernels (no u) honor the
/// requested method; relative kernels always use elimination.
KernelRankReport kernel_rank_report(const Decomposition& d, double v,
                                    std::optional<double> u = std::nullopt,
                                    KernelMethod method = KernelMethod::nerve_cycle_rank);

struct MvRelation {
    unsigned lhs = 0;     // l_X(u, v)
    unsigned l_a = 0;
    unsigned l_b = 0;
    unsigned l_ab = 0;
    long rhs_basic = 0;   // l_A + l_B - l_AB
    std::size_t ker_v = 0;
    std::size_t ker_vu = 0;
    long correction = 0;  // ker_v - ker_vu
    bool holds_basic = false;
};

/// The inclusion-exclusion relation with its kernel correction. The
/// identity lhs == rhs_basic + correction holds for every valid input.
MvRelation mv_relation(const Decomposition& d, double u, double v);

/// l_AB(u, v') == l_AB(v, v') <= 1 for every v' > v. Guarantees both kernel
/// ranks vanish.
bool kernels_vanish_by_intersection(const Decomposition& d, double u, double v);

/// rank H1(X_v) == 0 and rank H0(X_u) == l_X(u, v). Guarantees both kernel
/// ranks vanish.
bool kernels_vanish_by_acyclicity(const Decomposition& d, double u, double v);

/// Exactness of 0 -> H0uv(AnB) -> H0uv(A) + H0uv(B) -> H0uv(X) -> 0:
/// the restriction of alpha to persistent classes is injective and the
/// basic inclusion-exclusion relation holds at (u, v).
bool persistent_mv_exact(const Decomposition& d, double u, double v);

struct MultiplicityRelation {
    long mu_x = 0;
    long mu_a = 0;
    long mu_b = 0;
    long mu_ab = 0;
    long rhs_limit = 0;  // alternating kernel-rank limit
};

/// mu_X - mu_A - mu_B + mu_AB together with the kernel-rank expression it
/// must equal.
MultiplicityRelation multiplicity_relation(const Decomposition& d, double u, double v);

struct ProperProvenance {
    Cornerpoint p;
    bool abscissa_found = false;       // u is an abscissa of a cornerpoint of A, B or AnB
    bool ordinate_is_critical = false;  // v is a homological 0-critical value of A, B or AnB
    bool kernel_condition = false;      // the alternating kernel limit is <= 0
    bool in_a_or_b = false;             // p is a proper cornerpoint of A or B

    bool holds() const {
        return abscissa_found && ordinate_is_critical && (!kernel_condition || in_a_or_b);
    }
};

struct InfinityProvenance {
    Cornerpoint p;
    bool at_infinity_in_a_or_b = false;

    bool holds() const { return at_infinity_in_a_or_b; }
};

struct ProvenanceReport {
    std::vector<ProperProvenance> proper;
    std::vector<InfinityProvenance> at_infinity;

    bool all_hold() const;
};

/// Traces every cornerpoint of X back to the cover: its abscissa among the
/// cornerpoint abscissas of A, B or AnB, its ordinate among their
/// homological 0-critical values, and, when the kernel limit allows it,
/// the point itself among the cornerpoints of A or B.
ProvenanceReport provenance_report(const Decomposition& d);

/// Text format: graph lines plus `A <id>` / `B <id>` assignment lines.
Decomposition parse_decomposition_text(const std::string& text);
Decomposition load_decomposition_file(const std::string& path);
std::string decomposition_to_text(const Decomposition& d);

/// One row per critical grid point (u, v), u < v:
/// u,v,l_x,l_a,l_b,l_ab,ker_v,ker_vu,holds_basic,identity.
std::string mv_report_csv(const Decomposition& d);

}  // namespace sizefn
