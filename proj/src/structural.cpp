#include "snp/structural.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace snp {

namespace {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Working inequality: c . y <= b, tagged with its representation as a
// nonnegative combination of the original expanded inequalities.
struct TaggedIneq {
    std::vector<Rational> coeffs;
    Rational rhs;
    std::vector<Rational> mult;
};

struct FmOutcome {
    bool feasible = false;
    std::vector<Rational> solution;
    std::vector<Rational> multipliers;
};

FmOutcome fourier_motzkin(const std::vector<Inequality>& original, std::size_t vars,
                          std::vector<std::string>& trace) {
    std::vector<TaggedIneq> current;
    for (std::size_t i = 0; i < original.size(); ++i) {
        TaggedIneq t;
        t.coeffs = original[i].coeffs;
        t.rhs = original[i].rhs;
        t.mult.assign(original.size(), 0);
        t.mult[i] = 1;
        current.push_back(std::move(t));
    }

    std::vector<std::vector<TaggedIneq>> stages;  // system at entry of each stage

    auto contradiction = [&](const std::vector<TaggedIneq>& set) -> const TaggedIneq* {
        for (const TaggedIneq& t : set) {
            bool var_free = std::all_of(t.coeffs.begin(), t.coeffs.end(),
                                        [](const Rational& c) { return c == 0; });
            if (var_free && t.rhs < 0) return &t;
        }
        return nullptr;
    };

    for (std::size_t v = 0; v < vars; ++v) {
        stages.push_back(current);
        std::vector<TaggedIneq> pos, neg, rest;
        for (TaggedIneq& t : current) {
            if (t.coeffs[v] > 0)
                pos.push_back(std::move(t));
            else if (t.coeffs[v] < 0)
                neg.push_back(std::move(t));
            else
                rest.push_back(std::move(t));
        }
        trace.push_back("eliminate y" + std::to_string(v + 1) + ": " +
                        std::to_string(pos.size()) + " upper x " + std::to_string(neg.size()) +
                        " lower bounds, " + std::to_string(rest.size()) + " untouched");

        std::map<std::pair<std::vector<Rational>, Rational>, std::size_t> seen;
        std::vector<TaggedIneq> next;
        auto push = [&](TaggedIneq t) {
            bool var_free = std::all_of(t.coeffs.begin(), t.coeffs.end(),
                                        [](const Rational& c) { return c == 0; });
            if (var_free && t.rhs >= 0) return;  // trivially satisfied
            auto key = std::make_pair(t.coeffs, t.rhs);
            if (seen.count(key)) return;
            seen.emplace(std::move(key), next.size());
            next.push_back(std::move(t));
        };
        for (TaggedIneq& t : rest) push(std::move(t));
        for (const TaggedIneq& up : pos) {
            for (const TaggedIneq& lo : neg) {
                // (up / up[v]) + (lo / -lo[v]) cancels y_v
                Rational a = Rational(1) / up.coeffs[v];
                Rational b = Rational(-1) / lo.coeffs[v];
                TaggedIneq t;
                t.coeffs.resize(vars);
                for (std::size_t j = 0; j < vars; ++j)
                    t.coeffs[j] = a * up.coeffs[j] + b * lo.coeffs[j];
                t.rhs = a * up.rhs + b * lo.rhs;
                t.mult.resize(original.size());
                for (std::size_t j = 0; j < original.size(); ++j)
                    t.mult[j] = a * up.mult[j] + b * lo.mult[j];
                push(std::move(t));
            }
        }
        current = std::move(next);
        if (const TaggedIneq* bad = contradiction(current)) {
            trace.push_back("contradiction: 0 <= " + rational_to_string(bad->rhs));
            FmOutcome out;
            out.feasible = false;
            out.multipliers = bad->mult;
            return out;
        }
    }

    if (const TaggedIneq* bad = contradiction(current)) {
        FmOutcome out;
        out.feasible = false;
        out.multipliers = bad->mult;
        return out;
    }

    // Back-substitute in reverse elimination order. At stage v every
    // inequality only involves variables >= v.
    std::vector<Rational> value(vars, 0);
    for (std::size_t vi = vars; vi-- > 0;) {
        bool has_lo = false, has_hi = false;
        Rational lo = 0, hi = 0;
        for (const TaggedIneq& t : stages[vi]) {
            if (t.coeffs[vi] == 0) continue;
            Rational rest = t.rhs;
            for (std::size_t j = vi + 1; j < vars; ++j) rest -= t.coeffs[j] * value[j];
            Rational bound = rest / t.coeffs[vi];
            if (t.coeffs[vi] > 0) {
                if (!has_hi || bound < hi) hi = bound, has_hi = true;
            } else {
                if (!has_lo || bound > lo) lo = bound, has_lo = true;
            }
        }
        Rational pick = 1;
        if (has_lo && pick < lo) pick = lo;
        if (has_hi && pick > hi) pick = hi;
        value[vi] = pick;
    }
    FmOutcome out;
    out.feasible = true;
    out.solution = std::move(value);
    return out;
}

std::vector<BigInt> scale_to_integers(const std::vector<Rational>& values) {
    BigInt lcm = 1;
    for (const Rational& v : values) {
        BigInt den = boost::multiprecision::denominator(v);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (const Rational& v : values) {
        Rational scaled = v * lcm;
        out.push_back(boost::multiprecision::numerator(scaled));
    }
    return out;
}

}  // namespace

std::vector<Inequality> expand_inequalities(const FeasibilityProblem& p, int support_var) {
    std::vector<Inequality> out;
    std::size_t m = p.cols();
    for (std::size_t i = 0; i < p.rows(); ++i) {
        Inequality leq;
        leq.coeffs.reserve(m);
        for (const BigInt& c : p.matrix[i]) leq.coeffs.emplace_back(c);
        leq.rhs = 0;
        out.push_back(leq);
        if (p.relations[i] == RowRelation::EqZero) {
            Inequality geq;
            geq.coeffs.reserve(m);
            for (const BigInt& c : p.matrix[i]) geq.coeffs.emplace_back(-c);
            geq.rhs = 0;
            out.push_back(std::move(geq));
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        Inequality bound;
        bound.coeffs.assign(m, Rational(0));
        bound.coeffs[j] = -1;
        bool strict = p.bound == VarBound::PositiveInteger || static_cast<int>(j) == support_var;
        bound.rhs = strict ? Rational(-1) : Rational(0);
        out.push_back(std::move(bound));
    }
    return out;
}

Certificate solve_feasibility(const FeasibilityProblem& p) {
    Certificate cert;
    std::size_t m = p.cols();

    // y != 0 is a disjunction over which component carries the support; the
    // systems are homogeneous, so y_k > 0 can be taken as y_k >= 1.
    std::vector<int> support_vars;
    if (p.bound == VarBound::NonNegativeNonZero) {
        for (std::size_t k = 0; k < m; ++k) support_vars.push_back(static_cast<int>(k));
    } else {
        support_vars.push_back(-1);
    }

    for (int support : support_vars) {
        if (support >= 0)
            cert.trace.push_back("subproblem: support on y" + std::to_string(support + 1));
        auto inequalities = expand_inequalities(p, support);
        FmOutcome outcome = fourier_motzkin(inequalities, m, cert.trace);
        if (outcome.feasible) {
            cert.feasible = true;
            cert.solution = scale_to_integers(outcome.solution);
            cert.witnesses.clear();
            return cert;
        }
        FarkasWitness w;
        w.support_var = support;
        w.multipliers = std::move(outcome.multipliers);
        cert.witnesses.push_back(std::move(w));
    }
    cert.feasible = false;
    return cert;
}

bool Certificate::verify(const FeasibilityProblem& p) const {
    std::size_t m = p.cols();
    if (feasible) {
        if (solution.size() != m) return false;
        bool any_positive = false;
        for (const BigInt& v : solution) {
            if (p.bound == VarBound::PositiveInteger && v < 1) return false;
            if (v < 0) return false;
            if (v > 0) any_positive = true;
        }
        if (p.bound == VarBound::NonNegativeNonZero && !any_positive) return false;
        for (std::size_t i = 0; i < p.rows(); ++i) {
            BigInt dot = 0;
            for (std::size_t j = 0; j < m; ++j) dot += p.matrix[i][j] * solution[j];
            if (p.relations[i] == RowRelation::EqZero ? dot != 0 : dot > 0) return false;
        }
        return true;
    }

    // Each subproblem needs its own Farkas combination.
    std::size_t expected = p.bound == VarBound::NonNegativeNonZero ? m : 1;
    if (witnesses.size() != expected) return false;
    for (const FarkasWitness& w : witnesses) {
        auto inequalities = expand_inequalities(p, w.support_var);
        if (w.multipliers.size() != inequalities.size()) return false;
        std::vector<Rational> combined(m, Rational(0));
        Rational rhs = 0;
        for (std::size_t i = 0; i < inequalities.size(); ++i) {
            if (w.multipliers[i] < 0) return false;
            for (std::size_t j = 0; j < m; ++j)
                combined[j] += w.multipliers[i] * inequalities[i].coeffs[j];
            rhs += w.multipliers[i] * inequalities[i].rhs;
        }
        for (const Rational& c : combined)
            if (c != 0) return false;
        if (rhs >= 0) return false;
    }
    return true;
}

namespace {

FeasibilityProblem problem_from_matrix(const SpikingMatrix& matrix, RowRelation relation,
                                       VarBound bound) {
    FeasibilityProblem p;
    p.bound = bound;
    p.relations.assign(matrix.rows, relation);
    for (int i = 0; i < matrix.rows; ++i) {
        std::vector<BigInt> row;
        row.reserve(matrix.cols);
        for (int j = 0; j < matrix.cols; ++j) row.emplace_back(matrix.entries[i][j]);
        p.matrix.push_back(std::move(row));
    }
    return p;
}

StructuralResult decide(const FeasibilityProblem& p) {
    StructuralResult result;
    result.certificate = solve_feasibility(p);
    if (!result.certificate.verify(p))
        throw std::logic_error("feasibility certificate failed re-verification");
    result.answer = result.certificate.feasible ? Answer::Yes : Answer::No;
    return result;
}

}  // namespace

StructuralResult check_structurally_bounded(const SpikingMatrix& matrix) {
    return decide(problem_from_matrix(matrix, RowRelation::LeqZero, VarBound::PositiveInteger));
}

StructuralResult check_conservative(const SpikingMatrix& matrix) {
    return decide(problem_from_matrix(matrix, RowRelation::EqZero, VarBound::PositiveInteger));
}

StructuralResult check_partial_conservative(const SpikingMatrix& matrix) {
    return decide(problem_from_matrix(matrix, RowRelation::EqZero, VarBound::NonNegativeNonZero));
}

StructMatrix struct_matrix(const SNPSystem& sys) {
    StructMatrix s;
    s.size = sys.neuron_count;
    s.adjacency.assign(s.size, std::vector<int>(s.size, 0));
    for (const auto& [i, j] : sys.synapses) s.adjacency[i - 1][j - 1] = 1;
    return s;
}

namespace {

int exact_rank(const StructMatrix& s) {
    std::vector<std::vector<Rational>> a(s.size, std::vector<Rational>(s.size));
    for (int i = 0; i < s.size; ++i)
        for (int j = 0; j < s.size; ++j) a[i][j] = s.adjacency[i][j];
    int rank = 0;
    for (int col = 0; col < s.size && rank < s.size; ++col) {
        int pivot = -1;
        for (int row = rank; row < s.size; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int row = 0; row < s.size; ++row) {
            if (row == rank || a[row][col] == 0) continue;
            Rational f = a[row][col] / a[rank][col];
            for (int j = col; j < s.size; ++j) a[row][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

CycleReport has_synapse_cycle(const SNPSystem& sys) {
    CycleReport report;
    StructMatrix s = struct_matrix(sys);
    report.rank = exact_rank(s);

    // DFS with colors; a back edge closes a cycle.
    enum { White, Grey, Black };
    std::vector<int> color(sys.neuron_count, White);
    std::vector<int> parent(sys.neuron_count, -1);

    auto dfs = [&](auto&& self, int v) -> int {  // returns cycle entry or -1
        color[v] = Grey;
        for (int w = 0; w < sys.neuron_count; ++w) {
            if (!s.adjacency[v][w]) continue;
            if (color[w] == Grey) {
                parent[w] = v;  // close the loop for reconstruction
                return w;
            }
            if (color[w] == White) {
                parent[w] = v;
                int found = self(self, w);
                if (found >= 0) return found;
            }
        }
        color[v] = Black;
        return -1;
    };

    for (int v = 0; v < sys.neuron_count && !report.has_cycle; ++v) {
        if (color[v] != White) continue;
        int entry = dfs(dfs, v);
        if (entry >= 0) {
            report.has_cycle = true;
            std::vector<int> cycle{entry + 1};
            for (int u = parent[entry]; u != entry; u = parent[u]) cycle.push_back(u + 1);
            std::reverse(cycle.begin(), cycle.end());
            report.cycle = std::move(cycle);
        }
    }
    return report;
}

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["feasible"] = cert.feasible;
    if (cert.feasible) {
        auto arr = nlohmann::ordered_json::array();
        for (const BigInt& v : cert.solution) arr.push_back(v.str());
        j["solution"] = std::move(arr);
    } else {
        auto ws = nlohmann::ordered_json::array();
        for (const FarkasWitness& w : cert.witnesses) {
            nlohmann::ordered_json jw;
            jw["support_var"] = w.support_var;
            auto mults = nlohmann::ordered_json::array();
            for (const Rational& r : w.multipliers) mults.push_back(rational_to_string(r));
            jw["multipliers"] = std::move(mults);
            ws.push_back(std::move(jw));
        }
        j["witnesses"] = std::move(ws);
    }
    j["trace"] = cert.trace;
    return j;
}

}  // namespace snp
