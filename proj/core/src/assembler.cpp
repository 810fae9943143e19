#include "holodiff/assembler.hpp"

#include <sstream>

#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"

namespace holodiff {
namespace {

std::int64_t count_of(const Decomp& d, const IndecLabel& label) {
    const auto it = d.find(label);
    return it == d.end() ? 0 : it->second;
}

std::int64_t count_with_socle(const Decomp& d, std::int64_t socle) {
    std::int64_t total = 0;
    for (const auto& [label, mult] : d) {
        if (label.socle == socle) total += mult;
    }
    return total;
}

}  // namespace

Decomp layer_labels(const HypoGroup& quotient, const LayerDecomp& layer) {
    Decomp out = layer.projectives;
    if (layer.has_chi_simple) out[IndecLabel{quotient.chi_index(), 1}] += 1;
    return out;
}

std::string dump_layers(const std::vector<LayerDecomp>& layers) {
    std::ostringstream os;
    for (std::size_t j = 0; j < layers.size(); ++j) {
        os << "  layer " << j << ":";
        for (const auto& [label, mult] : layers[j].projectives) {
            os << " " << mult << "xU(" << label.socle << "," << label.length << ")";
        }
        if (layers[j].has_chi_simple) os << " + S_chi";
        os << "\n";
    }
    return os.str();
}

AssembledDecomp assemble(const std::vector<LayerDecomp>& layers, const HypoGroup& group, int n_I) {
    const int quotient_n = group.n() - n_I;
    const HypoGroup quotient(group.p(), quotient_n, group.c(), group.chi_index(),
                             quotient_n == 0 ? 0 : nt::mod(group.action_unit(), nt::ipow(group.p(), quotient_n)));
    std::vector<Decomp> labels;
    labels.reserve(layers.size());
    for (const auto& layer : layers) labels.push_back(layer_labels(quotient, layer));
    try {
        return assemble_labels(labels, group, n_I);
    } catch (const ConsistencyError& e) {
        throw ConsistencyError(std::string(e.what()) + "\n" + dump_layers(layers));
    }
}

AssembledDecomp assemble_labels(const std::vector<Decomp>& labels, const HypoGroup& group, int n_I) {
    const std::int64_t layer_count = nt::ipow(group.p(), n_I);
    if (static_cast<std::int64_t>(labels.size()) != layer_count) {
        throw ConsistencyError("assemble: expected " + std::to_string(layer_count) + " layers, got " +
                               std::to_string(labels.size()));
    }
    const std::int64_t block = nt::ipow(group.p(), group.n() - n_I);
    AssembledDecomp out;
    for (std::int64_t a = 0; a < group.c(); ++a) {
        for (std::int64_t b = 1; b <= group.p_power(); ++b) {
            const std::int64_t low = b % block;
            const std::int64_t high = b / block;
            std::int64_t n = 0;
            if (low >= 1) {
                n = count_of(labels[high], {group.chi_shift(a, high), low});
            } else {
                LabelCounts c;
                c.n1 = count_of(labels[high - 1], {group.chi_shift(a, high - 1), block});
                c.n2 = high == layer_count ? 0 : count_with_socle(labels[high], group.chi_shift(a, high));
                n = c.n1 - c.n2;
                if (c.n1 != 0 || c.n2 != 0) out.counts[{a, b}] = c;
            }
            if (n < 0) {
                throw ConsistencyError("assemble: negative multiplicity " + std::to_string(n) + " for U(" +
                                       std::to_string(a) + "," + std::to_string(b) + ")");
            }
            if (n > 0) out.decomp[{a, b}] = n;
        }
    }
    return out;
}

std::vector<Decomp> slice(const Decomp& module, const HypoGroup& group, int n_I) {
    const std::int64_t layer_count = nt::ipow(group.p(), n_I);
    const std::int64_t block = nt::ipow(group.p(), group.n() - n_I);
    std::vector<Decomp> out(static_cast<std::size_t>(layer_count));
    for (const auto& [label, mult] : module) {
        for (std::int64_t j = 0; j * block < label.length; ++j) {
            const std::int64_t length = std::min(label.length, (j + 1) * block) - j * block;
            out[j][IndecLabel{group.chi_shift(label.socle, j), length}] += mult;
        }
    }
    return out;
}

}  // namespace holodiff
