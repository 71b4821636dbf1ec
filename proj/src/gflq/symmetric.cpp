#include "hecat/gflq/symmetric.hpp"

#include <algorithm>
#include <sstream>

namespace hecat {

bool QuadraticCharacter::trivial() const {
    return std::all_of(gen_values.begin(), gen_values.end(), [](int v) { return v == 1; });
}

namespace {

std::vector<int> parse_eps(std::string_view theta, int n) {
    std::string body(theta.substr(5, theta.size() - 6));
    for (char& c : body)
        if (c == ',') c = ' ';
    std::istringstream in(body);
    std::vector<int> eps;
    int e;
    while (in >> e) {
        if (e != 1 && e != -1) throw Error(Errc::InvalidInvolution, "diagonal entries must be 1 or -1");
        eps.push_back(e);
    }
    if (!in.eof()) throw Error(Errc::ParseError, "cannot parse involution " + std::string(theta));
    if (static_cast<int>(eps.size()) != n)
        throw Error(Errc::InvalidInvolution, "involution " + std::string(theta) + " has the wrong size");
    return eps;
}

// Every homomorphism K -> {+1,-1}: try each sign assignment on the
// generators and keep those that propagate consistently over the Cayley graph.
std::vector<QuadraticCharacter> characters_of(const GroupTable& G, const Subgroup& K) {
    const size_t ng = K.gens.size();
    ensure(ng < 20, "too many generators for the character search");
    std::vector<uint32_t> gen_idx;
    for (const Mat& m : K.gens) gen_idx.push_back(G.index_of(m));
    std::vector<QuadraticCharacter> out;
    std::map<uint32_t, int> value;
    std::vector<uint32_t> queue;
    const uint32_t e = G.index_of(G.ops().identity());
    for (uint32_t assign = 0; assign < (1u << ng); ++assign) {
        value.clear();
        value[e] = 1;
        queue.assign(1, e);
        bool ok = true;
        for (size_t k = 0; k < queue.size() && ok; ++k) {
            for (size_t j = 0; j < ng && ok; ++j) {
                int sign = (assign >> j) & 1 ? -1 : 1;
                uint32_t y = G.mul(queue[k], gen_idx[j]);
                int v = value[queue[k]] * sign;
                auto [it, fresh] = value.emplace(y, v);
                if (fresh)
                    queue.push_back(y);
                else if (it->second != v)
                    ok = false;
            }
        }
        if (!ok) continue;
        ensure(queue.size() == K.order, "generators do not generate K");
        QuadraticCharacter chi;
        for (size_t j = 0; j < ng; ++j) chi.gen_values.push_back((assign >> j) & 1 ? -1 : 1);
        for (auto& [x, v] : value)
            if (v == 1) chi.kernel.push_back(x);
        out.push_back(std::move(chi));
    }
    return out;
}

}  // namespace

SymmetricPair symmetric_pair(std::shared_ptr<const GroupTable> g, std::string_view theta) {
    if (g->field().p() == 2) throw Error(Errc::EvenCharacteristic, "symmetric pairs need odd characteristic");
    SymmetricPair sp;
    sp.theta = std::string(theta);
    if (theta == "transpose-inverse") {
        sp.K = g->fixed_transpose_inverse();
    } else if (theta.size() > 6 && theta.substr(0, 5) == "diag(" && theta.back() == ')') {
        sp.K = g->fixed_diag(parse_eps(theta, g->n()));
    } else {
        throw Error(Errc::InvalidInvolution, "unknown involution " + std::string(theta));
    }
    sp.B = g->borel();
    sp.orbits = &g->partition(sp.B, sp.K);
    const Subgroup& K = g->subgroup(sp.K);
    for (uint32_t i = 0; i < g->order(); ++i)
        if (K.contains(g->element(i))) sp.members.push_back(i);
    ensure(sp.members.size() == K.order, "fixed-point count changed");
    ensure(g->generated_order(sp.K) == K.order, "generators of K do not generate the fixed points");
    sp.characters = characters_of(*g, K);

    const Partition& P = *sp.orbits;
    std::vector<uint32_t> parent(P.count());
    for (uint32_t c = 0; c < P.count(); ++c) parent[c] = c;
    auto find = [&](uint32_t c) {
        while (parent[c] != c) c = parent[c] = parent[parent[c]];
        return c;
    };
    if (theta != "transpose-inverse") {
        const MatOps& o = g->ops();
        const uint8_t z = g->field().generator();
        for (int i = 0; i < g->n(); ++i) {
            std::vector<uint8_t> d(g->n(), 1);
            d[i] = z;
            Mat t = o.diagonal(d), tinv = o.inverse(t);
            for (uint32_t c = 0; c < P.count(); ++c) {
                uint32_t moved = P.label[g->index_of(o.mul(o.mul(t, g->element(P.reps[c])), tinv))];
                parent[find(c)] = find(moved);
            }
        }
    }
    std::map<uint32_t, uint32_t> renumber;
    for (uint32_t c = 0; c < P.count(); ++c) {
        auto [it, fresh] = renumber.emplace(find(c), static_cast<uint32_t>(renumber.size()));
        sp.geometric.push_back(it->second);
    }
    sp.geometric_count = static_cast<uint32_t>(renumber.size());
    sp.group = std::move(g);
    return sp;
}

}  // namespace hecat
