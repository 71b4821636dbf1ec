#include "hecat/orbit/datum.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hecat/algebra/error.hpp"
#include "hecat/coxeter/weyl_group.hpp"

namespace hecat {

namespace {

[[noreturn]] void violated(const std::string& invariant, const std::string& where) {
    throw Error(Errc::ValidationFailed, "invariant '" + invariant + "' fails: " + where);
}

OrbitCase parse_case(const std::string& s) {
    if (s == "G") return OrbitCase::G;
    if (s == "U") return OrbitCase::U;
    if (s == "T") return OrbitCase::T;
    if (s == "N") return OrbitCase::N;
    throw Error(Errc::ParseError, "case label must be G, U, T or N, got '" + s + "'");
}

size_t aux_size(OrbitCase c) {
    switch (c) {
    case OrbitCase::G: return 0;
    case OrbitCase::U: return 1;
    case OrbitCase::T: return 2;
    case OrbitCase::N: return 1;
    }
    return 0;
}

std::string sname(int s) { return "s" + std::to_string(s + 1); }

}  // namespace

char case_char(OrbitCase c) {
    switch (c) {
    case OrbitCase::G: return 'G';
    case OrbitCase::U: return 'U';
    case OrbitCase::T: return 'T';
    case OrbitCase::N: return 'N';
    }
    return '?';
}

uint32_t OrbitDatum::index_of(const std::string& id) const {
    for (uint32_t v = 0; v < size(); ++v)
        if (orbits[v].id == id) return v;
    throw Error(Errc::ParseError, "unknown orbit '" + id + "'");
}

void OrbitDatum::validate() const {
    auto W = WeylGroup::build(type);
    const uint32_t n = size();
    if (n == 0) violated("orbit set is nonempty", "no orbits");
    if (rank() != W->rank())
        violated("one case table per simple reflection", std::to_string(rank()) + " tables for " + type);
    std::set<std::string> ids;
    for (const auto& o : orbits) {
        if (o.id.empty() || !ids.insert(o.id).second) violated("orbit ids are unique", "id '" + o.id + "'");
        if (o.dim < 0) violated("dimensions are nonnegative", o.id);
        if (o.chars.empty() || o.chars[0] != "triv") violated("every orbit carries the trivial character", o.id);
        if (o.chars.size() > 2 || (o.chars.size() == 2 && o.chars[1] != "sign"))
            violated("character groups have exponent 2", o.id);
    }
    if (!reps.empty() && reps.size() != n) violated("one representative per orbit", "representative list");

    for (int s = 0; s < rank(); ++s) {
        if (cases[s].size() != n) violated("a case entry for every (s, v)", sname(s));
        for (uint32_t v = 0; v < n; ++v) {
            const CaseEntry& c = cases[s][v];
            const std::string at = sname(s) + ", v = " + orbits[v].id;
            if (c.star >= n) violated("s*v is an orbit", at);
            for (uint32_t a : c.aux)
                if (a >= n) violated("auxiliary orbits exist", at);
            if (cases[s][c.star].star != c.star) violated("s*(s*v) = s*v", at);
            if (c.aux.size() != aux_size(c.label))
                violated("auxiliary list matches the case (U: 1, T: 2, N: 1, G: 0)", at);
            if (c.label == OrbitCase::G) {
                if (c.star != v) violated("s*v = v in case G", at);
                continue;
            }
            // v lies in P_s v = {s*v} + aux, and every member of P_s v
            // carries the same case data.
            const uint32_t o = c.star;
            if (std::find(c.aux.begin(), c.aux.end(), o) != c.aux.end())
                violated("s*v is not auxiliary", at);
            if (v != o && std::find(c.aux.begin(), c.aux.end(), v) == c.aux.end())
                violated("v lies in P_s v", at);
            std::vector<uint32_t> sorted = c.aux;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                violated("auxiliary orbits are distinct", at);
            for (uint32_t u : c.aux) {
                const CaseEntry& cu = cases[s][u];
                std::vector<uint32_t> su = cu.aux;
                std::sort(su.begin(), su.end());
                if (cu.label != c.label || cu.star != o || su != sorted)
                    violated("orbits of one P_s-orbit share their case data", at + " vs " + orbits[u].id);
                if (orbits[o].dim != orbits[u].dim + 1)
                    violated("dim(s*v) = dim(v)+1 in cases U/T/N", sname(s) + ", v = " + orbits[u].id);
            }
            const CaseEntry& co = cases[s][o];
            std::vector<uint32_t> so = co.aux;
            std::sort(so.begin(), so.end());
            if (co.label != c.label || so != sorted)
                violated("orbits of one P_s-orbit share their case data", at + " vs " + orbits[o].id);
        }
    }

    std::set<uint32_t> closed_set;
    for (uint32_t v : closed) {
        if (v >= n) violated("closed orbits exist", "index " + std::to_string(v));
        if (!closed_set.insert(v).second) violated("closed orbits are listed once", orbits[v].id);
        for (int s = 0; s < rank(); ++s) {
            const CaseEntry& c = cases[s][v];
            if (c.label != OrbitCase::G && c.star == v)
                violated("a closed orbit is not s*u for u != v", sname(s) + ", v = " + orbits[v].id);
        }
    }
    if (closed.empty()) violated("some orbit is closed", "empty closed list");

    // Hecke-connectedness: everything is reached from the closed orbits.
    std::vector<char> seen(n, 0);
    std::deque<uint32_t> todo(closed.begin(), closed.end());
    for (uint32_t v : closed) seen[v] = 1;
    while (!todo.empty()) {
        uint32_t v = todo.front();
        todo.pop_front();
        for (int s = 0; s < rank(); ++s) {
            uint32_t o = cases[s][v].star;
            if (!seen[o]) {
                seen[o] = 1;
                todo.push_back(o);
            }
        }
    }
    for (uint32_t v = 0; v < n; ++v)
        if (!seen[v]) violated("every non-closed orbit is reachable from a closed one via *", orbits[v].id);
}

nlohmann::json OrbitDatum::to_json() const {
    nlohmann::json j;
    j["type"] = type;
    j["orbits"] = nlohmann::json::array();
    for (const auto& o : orbits) j["orbits"].push_back({{"id", o.id}, {"dim", o.dim}, {"chars", o.chars}});
    nlohmann::json cs = nlohmann::json::object();
    for (int s = 0; s < rank(); ++s) {
        nlohmann::json row = nlohmann::json::object();
        for (uint32_t v = 0; v < size(); ++v) {
            const CaseEntry& c = cases[s][v];
            nlohmann::json aux = nlohmann::json::array();
            for (uint32_t a : c.aux) aux.push_back(orbits[a].id);
            row[orbits[v].id] = {{"label", std::string(1, case_char(c.label))}, {"star", orbits[c.star].id}, {"aux", aux}};
        }
        cs[sname(s)] = row;
    }
    j["cases"] = cs;
    j["closed"] = nlohmann::json::array();
    for (uint32_t v : closed) j["closed"].push_back(orbits[v].id);
    if (oracle) {
        j["oracle"] = oracle->to_json();
        nlohmann::json r = nlohmann::json::object();
        for (uint32_t v = 0; v < reps.size(); ++v) r[orbits[v].id] = reps[v];
        j["reps"] = r;
    }
    return j;
}

OrbitDatum OrbitDatum::from_json(const nlohmann::json& j) {
    try {
        OrbitDatum d;
        d.type = j.at("type").get<std::string>();
        auto W = WeylGroup::build(d.type);
        for (const auto& o : j.at("orbits")) {
            OrbitInfo info;
            info.id = o.at("id").get<std::string>();
            info.dim = o.at("dim").get<int>();
            if (o.contains("chars")) info.chars = o.at("chars").get<std::vector<std::string>>();
            d.orbits.push_back(std::move(info));
        }
        std::map<std::string, uint32_t> index;
        for (uint32_t v = 0; v < d.size(); ++v) index.emplace(d.orbits[v].id, v);
        auto lookup = [&](const std::string& id) {
            auto it = index.find(id);
            if (it == index.end()) throw Error(Errc::ParseError, "unknown orbit '" + id + "'");
            return it->second;
        };
        const auto& cs = j.at("cases");
        d.cases.assign(W->rank(), std::vector<CaseEntry>(d.size()));
        for (int s = 0; s < W->rank(); ++s) {
            if (!cs.contains(sname(s))) throw Error(Errc::ParseError, "no case table for " + sname(s));
            const auto& row = cs.at(sname(s));
            for (uint32_t v = 0; v < d.size(); ++v) {
                if (!row.contains(d.orbits[v].id))
                    throw Error(Errc::ParseError, "no case for " + sname(s) + ", " + d.orbits[v].id);
                const auto& e = row.at(d.orbits[v].id);
                CaseEntry& c = d.cases[s][v];
                c.label = parse_case(e.at("label").get<std::string>());
                c.star = lookup(e.at("star").get<std::string>());
                if (e.contains("aux"))
                    for (const auto& a : e.at("aux")) c.aux.push_back(lookup(a.get<std::string>()));
            }
        }
        for (const auto& c : j.at("closed")) d.closed.push_back(lookup(c.get<std::string>()));
        if (j.contains("oracle")) {
            d.oracle = OracleDescriptor::from_json(j.at("oracle"));
            if (!j.contains("reps")) throw Error(Errc::ParseError, "an oracle needs representatives");
            for (const auto& o : d.orbits) {
                IntMat g = j.at("reps").at(o.id).get<IntMat>();
                if (static_cast<int>(g.size()) != d.oracle->n * d.oracle->n)
                    throw Error(Errc::ParseError, "representative of " + o.id + " has the wrong size");
                d.reps.push_back(std::move(g));
            }
        }
        d.validate();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("orbit datum: ") + e.what());
    }
}

OrbitDatum OrbitDatum::from_oracle(const OracleDescriptor& desc, const std::string& type, int q) {
    ensure(q >= 5, "case classification needs q >= 5");
    auto oracle = PointOracle::make(desc, q);
    const int rank = oracle->rank();
    const uint32_t ng = oracle->geometric_count();

    // One canonical representative per geometric orbit, in candidate order.
    std::vector<IntMat> reps;
    std::vector<uint32_t> cls_of;  // discovery position -> rational class of the representative
    std::vector<int> found(ng, -1);
    for (const IntMat& g : PointOracle::candidates(desc)) {
        uint32_t c = oracle->locate(g);
        uint32_t geo = oracle->geometric(c);
        if (found[geo] >= 0) continue;
        found[geo] = static_cast<int>(reps.size());
        reps.push_back(g);
        cls_of.push_back(c);
        if (reps.size() == ng) break;
    }
    if (reps.size() != ng) throw Error(Errc::ValidationFailed, "no integral representative for some orbit");
    auto pos = [&](uint32_t cls) { return static_cast<uint32_t>(found[oracle->geometric(cls)]); };

    std::vector<std::vector<CaseEntry>> cases(rank, std::vector<CaseEntry>(ng));
    for (int s = 0; s < rank; ++s)
        for (uint32_t v = 0; v < ng; ++v) {
            std::map<uint32_t, int> count;
            count[v] += 1;
            for (uint32_t c : oracle->step(s, cls_of[v])) count[pos(c)] += 1;
            std::vector<std::pair<int, uint32_t>> pattern;
            for (auto [u, k] : count) pattern.emplace_back(k, u);
            std::sort(pattern.begin(), pattern.end());
            CaseEntry& e = cases[s][v];
            auto take_open = [&](OrbitCase label) {
                e.label = label;
                e.star = pattern.back().second;
                for (size_t i = 0; i + 1 < pattern.size(); ++i) e.aux.push_back(pattern[i].second);
                std::sort(e.aux.begin(), e.aux.end());
            };
            std::vector<int> sizes;
            for (auto& p : pattern) sizes.push_back(p.first);
            if (sizes == std::vector<int>{q + 1}) {
                e.label = OrbitCase::G;
                e.star = v;
            } else if (sizes == std::vector<int>{1, q}) {
                take_open(OrbitCase::U);
            } else if (sizes == std::vector<int>{1, 1, q - 1}) {
                take_open(OrbitCase::T);
            } else if (sizes == std::vector<int>{2, q - 1}) {
                take_open(OrbitCase::N);
            } else {
                std::string pat;
                for (int k : sizes) pat += (pat.empty() ? "" : ",") + std::to_string(k);
                throw Error(Errc::ValidationFailed,
                            "P_s-fiber with point pattern {" + pat + "} is not of type G, U, T or N");
            }
        }

    std::vector<uint32_t> closed;
    for (uint32_t v = 0; v < ng; ++v) {
        bool open_somewhere = false;
        for (int s = 0; s < rank; ++s)
            open_somewhere |= cases[s][v].label != OrbitCase::G && cases[s][v].star == v;
        if (!open_somewhere) closed.push_back(v);
    }
    std::vector<int> dim(ng, -1);
    for (uint32_t v : closed) dim[v] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int s = 0; s < rank; ++s)
            for (uint32_t v = 0; v < ng; ++v) {
                const CaseEntry& e = cases[s][v];
                if (dim[v] < 0 || e.star == v || dim[e.star] >= 0) continue;
                dim[e.star] = dim[v] + 1;
                changed = true;
            }
    }
    for (uint32_t v = 0; v < ng; ++v)
        if (dim[v] < 0) throw Error(Errc::NotHeckeConnected, "orbit not reached from a closed orbit");

    // Present the orbits by dimension, then by discovery.
    std::vector<uint32_t> order(ng);
    for (uint32_t v = 0; v < ng; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) { return dim[a] < dim[b]; });
    std::vector<uint32_t> place(ng);
    for (uint32_t k = 0; k < ng; ++k) place[order[k]] = k;

    std::vector<uint32_t> rational(ng, 0);
    for (uint32_t c = 0; c < oracle->class_count(); ++c) rational[pos(c)] += 1;

    OrbitDatum d;
    d.type = type;
    d.oracle = desc;
    std::shared_ptr<const WeylGroup> W;
    if (desc.kind == OracleDescriptor::Kind::Switch) W = WeylGroup::build(type);
    for (uint32_t k = 0; k < ng; ++k) {
        uint32_t v = order[k];
        OrbitInfo info;
        // switch orbits are Bruhat cells, the representative order is W's
        info.id = W ? W->word_str(v) : "v" + std::to_string(k);
        info.dim = dim[v];
        if (rational[v] == 2) info.chars.push_back("sign");
        d.orbits.push_back(std::move(info));
        d.reps.push_back(reps[v]);
    }
    d.cases.assign(rank, std::vector<CaseEntry>(ng));
    for (int s = 0; s < rank; ++s)
        for (uint32_t v = 0; v < ng; ++v) {
            CaseEntry e = cases[s][v];
            e.star = place[e.star];
            for (auto& a : e.aux) a = place[a];
            std::sort(e.aux.begin(), e.aux.end());
            d.cases[s][place[v]] = std::move(e);
        }
    for (uint32_t v : closed) d.closed.push_back(place[v]);
    std::sort(d.closed.begin(), d.closed.end());
    return d;
}

std::vector<std::string> OrbitDatum::builtin_names() {
    return {"switch(GL2)", "switch(GL3)", "switch(GL4)", "sl2-torus", "gl2-torus", "gl3-block"};
}

OrbitDatum OrbitDatum::builtin(const std::string& name) {
    OracleDescriptor d;
    std::string type;
    if (name.rfind("switch(GL", 0) == 0 && name.size() == 11 && name[10] == ')' && name[9] >= '2' && name[9] <= '4') {
        d.kind = OracleDescriptor::Kind::Switch;
        d.n = name[9] - '0';
        type = "A" + std::to_string(d.n - 1);
    } else if (name == "sl2-torus" || name == "gl2-torus" || name == "gl3-block") {
        d.kind = OracleDescriptor::Kind::Symmetric;
        d.series = name == "sl2-torus" ? Series::SL : Series::GL;
        d.n = name == "gl3-block" ? 3 : 2;
        d.eps = name == "gl3-block" ? std::vector<int>{1, 1, -1} : std::vector<int>{1, -1};
        type = "A" + std::to_string(d.n - 1);
    } else {
        throw Error(Errc::ParseError, "unknown builtin orbit datum '" + name + "'");
    }
    // The case data is read at two values of q and must agree.
    OrbitDatum a = from_oracle(d, type, 5);
    OrbitDatum b = from_oracle(d, type, 7);
    if (a.to_json() != b.to_json())
        throw Error(Errc::InconsistentSamples, "orbit data of " + name + " differ between q = 5 and q = 7");
    a.validate();
    return a;
}

OrbitDatum load_datum(const std::string& source) {
    for (const auto& name : OrbitDatum::builtin_names())
        if (source == name) return OrbitDatum::builtin(source);
    nlohmann::json j;
    try {
        if (!source.empty() && source.front() == '{') {
            j = nlohmann::json::parse(source);
        } else {
            std::ifstream in(source);
            if (!in) throw Error(Errc::ParseError, "no builtin or readable file named '" + source + "'");
            j = nlohmann::json::parse(in);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("orbit datum: ") + e.what());
    }
    return OrbitDatum::from_json(j);
}

}  // namespace hecat
