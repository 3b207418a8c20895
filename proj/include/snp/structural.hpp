#pragma once

// Initial-configuration-independent properties decided from the transition
// matrix alone, over exact rational arithmetic: structural boundedness
// (exists y >= 1 with M*y <= 0), conservativeness (M*y = 0) and the partial
// variant (y >= 0, y != 0). Feasibility is decided by Fourier-Motzkin
// elimination, which yields either an integer solution vector or a Farkas
// combination certifying infeasibility; both re-verify exactly.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nlohmann/json.hpp"
#include "snp/behavioral.hpp"
#include "snp/matrix.hpp"

namespace snp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class RowRelation { LeqZero, EqZero };
enum class VarBound {
    PositiveInteger,   // y_j >= 1 for all j
    NonNegativeNonZero // y_j >= 0 for all j, y != 0
};

struct FeasibilityProblem {
    std::vector<std::vector<BigInt>> matrix;  // n rows, m columns
    std::vector<RowRelation> relations;       // one per row
    VarBound bound = VarBound::PositiveInteger;

    std::size_t rows() const { return matrix.size(); }
    std::size_t cols() const { return matrix.empty() ? 0 : matrix.front().size(); }
};

// Nonnegative multipliers over the expanded inequality list (see
// expand_inequalities) combining to the contradiction 0 <= negative.
struct FarkasWitness {
    int support_var = -1;  // the variable forced >= 1 in this subproblem; -1 if none
    std::vector<Rational> multipliers;
};

struct Certificate {
    bool feasible = false;
    std::vector<BigInt> solution;          // size m when feasible
    std::vector<FarkasWitness> witnesses;  // one per subproblem when infeasible
    std::vector<std::string> trace;        // elimination log

    // Exact re-check: the solution satisfies every row relation and the
    // variable bound, or every witness combines to 0 <= b with b < 0.
    bool verify(const FeasibilityProblem& problem) const;
};

// One inequality c . y <= b.
struct Inequality {
    std::vector<Rational> coeffs;
    Rational rhs;
};

// The expanded inequality system for a (sub)problem: matrix rows split into
// <= / >= pairs for equalities, plus the variable bounds. support_var only
// matters for NonNegativeNonZero problems.
std::vector<Inequality> expand_inequalities(const FeasibilityProblem& problem, int support_var);

Certificate solve_feasibility(const FeasibilityProblem& problem);

struct StructuralResult {
    Answer answer = Answer::Inconclusive;
    Certificate certificate;
};

StructuralResult check_structurally_bounded(const SpikingMatrix& matrix);
StructuralResult check_conservative(const SpikingMatrix& matrix);
StructuralResult check_partial_conservative(const SpikingMatrix& matrix);

// 0/1 synapse adjacency matrix, zero diagonal.
struct StructMatrix {
    int size = 0;
    std::vector<std::vector<int>> adjacency;
};

StructMatrix struct_matrix(const SNPSystem& system);

// Cycle existence by depth-first search over the synapse digraph; the exact
// row rank of the adjacency matrix is reported alongside but is not the
// cycle criterion (a DAG's adjacency matrix can also have rank < m).
struct CycleReport {
    bool has_cycle = false;
    std::vector<int> cycle;  // 1-based neuron indices along one cycle, if any
    int rank = 0;
};

CycleReport has_synapse_cycle(const SNPSystem& system);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);

}  // namespace snp
