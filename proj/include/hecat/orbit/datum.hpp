#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecat/orbit/oracle.hpp"

namespace hecat {

enum class OrbitCase { G, U, T, N };

char case_char(OrbitCase c);

struct CaseEntry {
    OrbitCase label = OrbitCase::G;
    uint32_t star = 0;
    // the B-orbits of P_s v other than s*v
    std::vector<uint32_t> aux;
};

struct OrbitInfo {
    std::string id;
    int dim = 0;
    std::vector<std::string> chars{"triv"};
};

// Finite orbit set with the per-reflection case data of a Hecke module.
// Orbits are addressed by position; ids are only for input and output.
struct OrbitDatum {
    std::string type;  // Cartan type, e.g. "A2"
    std::vector<OrbitInfo> orbits;
    std::vector<std::vector<CaseEntry>> cases;  // [s][v]
    std::vector<uint32_t> closed;
    std::optional<OracleDescriptor> oracle;
    // canonical point representatives, one per orbit, for the oracle
    std::vector<IntMat> reps;

    uint32_t size() const { return static_cast<uint32_t>(orbits.size()); }
    int rank() const { return static_cast<int>(cases.size()); }
    uint32_t index_of(const std::string& id) const;

    // Throws ValidationFailed naming the first violated invariant.
    void validate() const;

    nlohmann::json to_json() const;
    static OrbitDatum from_json(const nlohmann::json& j);

    // "switch(GL2)", "switch(GL3)", "switch(GL4)", "sl2-torus", "gl2-torus",
    // "gl3-block"
    static OrbitDatum builtin(const std::string& name);
    static std::vector<std::string> builtin_names();
    // Orbit data read off a point oracle at one odd q >= 5.
    static OrbitDatum from_oracle(const OracleDescriptor& d, const std::string& type, int q);
};

// Builtin name or a JSON file path.
OrbitDatum load_datum(const std::string& source);

}  // namespace hecat
