#include "qecstat/core/pauli.hpp"

#include <bit>

#include "qecstat/core/error.hpp"

namespace qecstat {

PauliString PauliString::from_label(const std::string& label) {
    PauliString p;
    p.n = int(label.size());
    if (p.n > 32) throw validation_error("pauli string longer than 32 sites");
    for (int i = 0; i < p.n; ++i) p.set_site(i, label[i]);
    return p;
}

char PauliString::site(int i) const {
    const bool bx = (x >> i) & 1u, bz = (z >> i) & 1u;
    if (bx && bz) return 'Y';
    if (bx) return 'X';
    if (bz) return 'Z';
    return 'I';
}

void PauliString::set_site(int i, char p) {
    const std::uint32_t m = 1u << i;
    x &= ~m;
    z &= ~m;
    switch (p) {
        case 'I': break;
        case 'X': x |= m; break;
        case 'Z': z |= m; break;
        case 'Y': x |= m; z |= m; break;
        default: throw validation_error(std::string("bad pauli letter '") + p + "'");
    }
}

std::string PauliString::label() const {
    std::string s(n, 'I');
    for (int i = 0; i < n; ++i) s[i] = site(i);
    return s;
}

PauliString PauliString::operator*(const PauliString& o) const {
    if (n != o.n) throw validation_error("pauli length mismatch in product");
    return {x ^ o.x, z ^ o.z, n};
}

int scalar_commutator(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) throw validation_error("pauli length mismatch in scalar commutator");
    const int parity = std::popcount(a.x & b.z) + std::popcount(a.z & b.x);
    return (parity % 2 == 0) ? 1 : -1;
}

}  // namespace qecstat
