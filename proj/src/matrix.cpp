#include "snp/matrix.hpp"

#include <stdexcept>

namespace snp {

SpikingMatrix build_matrix(const SNPSystem& sys) {
    SpikingMatrix m;
    m.rows = sys.rule_count();
    m.cols = sys.neuron_count;
    m.entries.assign(m.rows, std::vector<Nat>(m.cols, 0));
    for (int i = 0; i < m.rows; ++i) {
        const Rule& r = sys.rules[i];
        m.entries[i][r.owner - 1] = -r.consumed;
        if (r.produced > 0) {
            for (int j = 1; j <= sys.neuron_count; ++j) {
                if (sys.synapses.count({r.owner, j}))
                    m.entries[i][j - 1] = r.produced;
            }
        }
    }
    return m;
}

std::vector<Nat> net_gain(const SpikingMatrix& matrix, const SpikingVector& sp) {
    if (static_cast<int>(sp.size()) != matrix.rows)
        throw std::invalid_argument("spiking vector length does not match rule count");
    std::vector<Nat> gain(matrix.cols, 0);
    for (int i = 0; i < matrix.rows; ++i) {
        if (!sp[i]) continue;
        for (int j = 0; j < matrix.cols; ++j) gain[j] += matrix.entries[i][j];
    }
    return gain;
}

}  // namespace snp
