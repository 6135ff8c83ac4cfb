// params.hpp - physical parameters, Fock truncation and basis indexing

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "tcgrwa/errors.hpp"

namespace tcgrwa {

/// Parameters of H = Δ J_x + ω a†a + g (a† + a) J_z. Energies are quoted in units of ω.
struct SystemParams {
    double delta{1.0}; // atomic transition frequency Δ
    double omega{1.0}; // oscillator frequency ω
    double g{0.0};     // collective coupling strength

    /// g/ω, the displacement amplitude of the polaron frame.
    double coupling_ratio() const { return g / omega; }

    /// g²/ω², the Laguerre argument of every displaced-oscillator matrix element.
    double laguerre_argument() const {
        const double r = coupling_ratio();
        return r * r;
    }

    void validate() const {
        if (!std::isfinite(delta) || !std::isfinite(omega) || !std::isfinite(g))
            throw ArgumentError("SystemParams: parameters must be finite");
        if (omega <= 0.0) throw ArgumentError("SystemParams: omega must be positive");
        if (delta < 0.0) throw ArgumentError("SystemParams: delta must be non-negative");
        if (g < 0.0) throw ArgumentError("SystemParams: g must be non-negative");
    }
};

/// Spin sector position in the product basis. Sectors are stored in the order
/// j_z = +1, 0, -1, each holding Fock levels 0..N in ascending order.
constexpr std::size_t sector_of(int jz) { return static_cast<std::size_t>(1 - jz); }
constexpr int spin_of_sector(std::size_t sector) { return 1 - static_cast<int>(sector); }
inline constexpr std::array<int, 3> kSpinProjections{+1, 0, -1};

inline void check_spin(int jz) {
    if (jz < -1 || jz > 1) throw ArgumentError("spin projection must be -1, 0 or +1");
}

/// Retained Fock levels |0>..|N> of the oscillator.
class FockTruncation {
public:
    explicit FockTruncation(std::size_t n_max) : n_max_(n_max) {
        if (n_max < 1) throw ArgumentError("FockTruncation: N must be at least 1");
    }

    std::size_t n_max() const { return n_max_; }
    std::size_t fock_dim() const { return n_max_ + 1; }
    /// Dimension of spin-1 ⊗ Fock.
    std::size_t dim() const { return 3 * fock_dim(); }

    std::size_t index(int jz, std::size_t n) const {
        check_spin(jz);
        if (n > n_max_) throw ArgumentError("FockTruncation: photon number beyond truncation");
        return sector_of(jz) * fock_dim() + n;
    }

    FockTruncation doubled() const { return FockTruncation(2 * n_max_); }

    friend bool operator==(const FockTruncation&, const FockTruncation&) = default;

private:
    std::size_t n_max_;
};

inline constexpr std::size_t kSpectrumTruncation = 60;
inline constexpr std::size_t kDynamicsTruncation = 80;

/// Solution methods. Enumerator order is the lexical order of the names.
enum class Method { exact, grwa, rwa, zeroth };

inline constexpr std::array<Method, 4> kAllMethods{Method::exact, Method::grwa, Method::rwa,
                                                   Method::zeroth};

inline std::string_view to_string(Method m) {
    switch (m) {
    case Method::exact: return "exact";
    case Method::grwa: return "grwa";
    case Method::rwa: return "rwa";
    case Method::zeroth: return "zeroth";
    }
    return "unknown";
}

inline Method parse_method(std::string_view name) {
    for (Method m : kAllMethods)
        if (to_string(m) == name) return m;
    throw ArgumentError("unknown method '" + std::string(name) + "' (expected exact, grwa, rwa or zeroth)");
}

} // namespace tcgrwa
