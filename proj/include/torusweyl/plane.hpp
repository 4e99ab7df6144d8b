#pragma once

#include <map>

#include "torusweyl/symbols.hpp"

namespace torusweyl {

// Periodic plane observable as a finite Fourier series over integer chords:
// the coefficient at (r,s) weighs the plane translation with chord (r/N, s/N)
// once quantized on an N-state torus. Hermitian iff H_{-r,-s} = conj(H_{r,s}).
class PeriodicPlaneSymbol {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;

    PeriodicPlaneSymbol() = default;

    void set(std::int64_t r, std::int64_t s, cplx value) { coeff_[{r, s}] = value; }
    cplx at(std::int64_t r, std::int64_t s) const {
        auto it = coeff_.find({r, s});
        return it == coeff_.end() ? cplx(0.0) : it->second;
    }
    const std::map<Key, cplx>& terms() const { return coeff_; }
    bool empty() const { return coeff_.empty(); }

    bool is_hermitian(double tol = 1e-12) const {
        for (const auto& [k, v] : coeff_)
            if (std::abs(at(-k.first, -k.second) - std::conj(v)) > tol) return false;
        return true;
    }

    // cos(2 pi p) + cos(2 pi q): coefficients 1/2 at (+-1,0) and (0,+-1).
    static PeriodicPlaneSymbol harper() {
        PeriodicPlaneSymbol h;
        h.set(1, 0, 0.5);
        h.set(-1, 0, 0.5);
        h.set(0, 1, 0.5);
        h.set(0, -1, 0.5);
        return h;
    }

private:
    std::map<Key, cplx> coeff_;
};

// Weyl-ordered quantization: H = sum H_{r,s} T_{(r,s)}.
TorusOperator quantize_hamiltonian(const TorusSpace& space, const PeriodicPlaneSymbol& h);

// Phase-weighted average of coefficients at chords equivalent to the given
// one. Normalization follows the plane average; the torus chord symbol of the
// quantized operator is N times this value (the constant is fixed by the
// identity operator).
cplx project_plane_chord_symbol(const TorusSpace& space, const PeriodicPlaneSymbol& h,
                                const ChordIndex& chord);

// Phase-weighted average over the four half-period translates; the weights
// carry no chi dependence. Equals the center symbol of the quantized
// operator exactly (the identity operator fixes the included factor 1/2).
cplx project_plane_center_symbol(const TorusSpace& space, const PeriodicPlaneSymbol& h,
                                 const CenterIndex& center);

}  // namespace torusweyl
