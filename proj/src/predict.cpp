#include "twocolor/predict.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "twocolor/qnum.hpp"

namespace twocolor {

namespace {

// extend a chain whose previous (smallest so far) part is `prev`
void chain_rec(int rem, int prev, Partition& cur, std::vector<Partition>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    std::vector<int> next;
    for (int q = 2; q <= prev; ++q)
        if (prev % q == 0 && q <= rem) next.push_back(q);
    std::sort(next.rbegin(), next.rend());
    for (int q : next) {
        cur.push_back(q);
        chain_rec(rem - q, q, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> distinguished_partitions(int k) {
    if (k < 1) throw arg_error("distinguished_partitions: k must be >= 1");
    if (k == 1) return {{1}};
    std::vector<Partition> out;
    Partition cur;
    for (int p = k; p >= 2; --p) {
        cur.push_back(p);
        chain_rec(k - p, p, cur, out);
        cur.pop_back();
    }
    return out;
}

int partition_weight(const Partition& p) {
    std::vector<int> d = p;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return 2 * static_cast<int>(p.size()) - static_cast<int>(d.size());
}

namespace {

std::vector<int> distinct_parts(const Partition& p) {
    std::vector<int> d = p;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

} // namespace

ModulePresentation H_module(int k) {
    if (k < 1) throw arg_error("H_module: k must be >= 1");
    ModulePresentation h;
    if (k == 1) {
        h.summands.push_back({0, {}});
        return h;
    }
    for (const auto& lambda : distinguished_partitions(k))
        h.summands.push_back({1 - partition_weight(lambda), distinct_parts(lambda)});
    return h;
}

ModulePresentation predicted_cohomology(int n) {
    if (n < 0) throw arg_error("predicted_cohomology: n must be >= 0");
    ModulePresentation out;
    out.summands.push_back({0, {}});            // B_0
    if (n >= 1) out.summands.push_back({1, {}});  // B_1
    for (int i = 4; i <= 2 * n; ++i)
        for (const auto& lambda : distinguished_partitions(i / 2))
            out.summands.push_back({i - 1 - partition_weight(lambda), distinct_parts(lambda)});
    return out;
}

CubeModel cube_model_of(const ModulePresentation& p) {
    CubeModel model;
    for (const auto& s : p.summands) {
        CubePiece piece;
        piece.top_degree = -s.shift;
        piece.gen_indices = s.gen_indices;
        for (int d : s.gen_indices) piece.gens.push_back(cyclotomic(d, Color::y));
        model.pieces.push_back(std::move(piece));
    }
    return model;
}

CohomologyReport specialize_prediction(const ModulePresentation& p, const Specialization& s) {
    CohomologyReport total;
    for (const auto& sum : p.summands) {
        if (sum.gen_indices.empty()) {
            CohomologyReport free_piece;
            free_piece.groups[-sum.shift].free_rank = 1;
            total.merge(free_piece);
            continue;
        }
        std::vector<BiPoly> gens;
        for (int d : sum.gen_indices) gens.push_back(cyclotomic(d, Color::y));
        DgComplex cube = cube_complex(gens, -sum.shift);
        total.merge(s.target == Ring::integers ? integral_cohomology(cube, s)
                                               : field_cohomology(cube, s));
    }
    return total;
}

std::vector<DiffEntry> compare(const CohomologyReport& predicted, const CohomologyReport& computed) {
    std::vector<DiffEntry> diff;
    std::map<int, std::pair<AbGroup, AbGroup>> merged;
    for (const auto& [d, g] : predicted.groups) merged[d].first = g;
    for (const auto& [d, g] : computed.groups) merged[d].second = g;
    for (const auto& [d, pair] : merged)
        if (!(pair.first == pair.second))
            diff.push_back({d, pair.first.str(), pair.second.str()});
    return diff;
}

namespace {

std::string cell_entry(const Summand& s) {
    if (s.gen_indices.empty()) return "K";
    std::ostringstream out;
    for (size_t i = 0; i < s.gen_indices.size(); ++i) {
        if (i) out << ",";
        out << s.gen_indices[i];
    }
    return out.str();
}

} // namespace

std::string ext_table_csv(int n_max) {
    std::ostringstream out;
    for (int n = 0; n <= n_max; ++n) {
        auto pred = predicted_cohomology(n);
        std::map<int, std::vector<std::string>> cells;  // j -> stacked entries
        for (const auto& s : pred.summands) cells[2 * n - s.shift].push_back(cell_entry(s));
        for (const auto& [j, stack] : cells) {
            out << n << "," << j << ",";
            for (size_t i = 0; i < stack.size(); ++i) {
                if (i) out << "|";
                out << stack[i];
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string h_layout_csv(int n) {
    std::ostringstream out;
    auto emit_row = [&](int k, int shift) {
        std::string label = "H_" + std::to_string(k);
        if (shift > 0) label += "[" + std::to_string(shift) + "]";
        std::map<int, std::vector<std::string>> cells;
        for (const auto& s : H_module(k).summands)
            cells[-(s.shift + shift)].push_back(cell_entry(s));
        for (const auto& [deg, stack] : cells) {
            out << label << "," << deg << ",";
            for (size_t i = 0; i < stack.size(); ++i) {
                if (i) out << "|";
                out << stack[i];
            }
            out << "\n";
        }
    };
    emit_row(1, 0);
    if (n >= 1) emit_row(1, 1);
    for (int i = 4; i <= 2 * n; ++i) emit_row(i / 2, i - 2);
    return out.str();
}

} // namespace twocolor
