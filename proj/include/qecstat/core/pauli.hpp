#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qecstat {

// N-qubit Pauli string in symplectic form: per-site X and Z bits.
// Phases are dropped throughout (probabilities only).
struct PauliString {
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    int n = 0;

    static PauliString identity(int n) { return {0, 0, n}; }
    static PauliString from_label(const std::string& label);  // e.g. "IZXY"
    std::string label() const;

    bool is_identity() const { return x == 0 && z == 0; }
    char site(int i) const;
    void set_site(int i, char p);

    PauliString operator*(const PauliString& o) const;  // phaseless product
    bool operator==(const PauliString& o) const { return x == o.x && z == o.z && n == o.n; }
    bool operator<(const PauliString& o) const {
        return (std::uint64_t(z) << 32 | x) < (std::uint64_t(o.z) << 32 | o.x);
    }
};

// Scalar commutator [[O1,O2]] = Tr[O1 O2 O1^ O2^]/2^N: +1 if the strings
// commute, -1 if they anticommute. Computed from the symplectic product.
int scalar_commutator(const PauliString& a, const PauliString& b);

}  // namespace qecstat
