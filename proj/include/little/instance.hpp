#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "little/errors.hpp"
#include "little/rng.hpp"

namespace little {

/// Dense row-major matrix of doubles.  Deliberately minimal: the solvers
/// need nothing beyond indexed access and raw row storage.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    const double* row(std::size_t i) const { return data.data() + i * cols; }
    double* row(std::size_t i) { return data.data() + i * cols; }
};

/// Entry distribution of a random coupling matrix.  Both choices have mean 0
/// and variance 1, which is what the universality comparison relies on.
enum class Dist { gaussian, bernoulli };

inline std::string to_string(Dist d) {
    return d == Dist::gaussian ? "gaussian" : "bernoulli";
}

inline Dist dist_from_string(const std::string& s) {
    if (s == "gaussian") return Dist::gaussian;
    if (s == "bernoulli") return Dist::bernoulli;
    throw data_error("unknown distribution '" + s + "' (expected gaussian or bernoulli)");
}

/// An m x n random coupling matrix together with the recipe that produced
/// it.  The aspect ratio alpha = m/n is always recomputed from the stored
/// dimensions, never cached, so it cannot drift from them.
struct LittleInstance {
    std::size_t m = 0;
    std::size_t n = 0;
    Matrix h;
    Dist dist = Dist::gaussian;
    std::uint64_t seed = 0;

    double alpha() const { return static_cast<double>(m) / static_cast<double>(n); }
};

/// Square coupling matrix with zero diagonal and exact (bitwise) symmetry.
struct SymmetricInstance {
    std::size_t n = 0;
    Matrix hs;
};

/// Largest allowed entry count for a generated instance.  Dense matrices
/// beyond this are outside the desk-scale envelope this library targets.
inline constexpr std::uint64_t max_instance_entries = 1ull << 26;

/// Draw an m x n instance with i.i.d. entries of the requested distribution.
/// Entry (i, j) is deviate i*n + j of the seed's stream, so the result is a
/// pure function of (m, n, dist, seed): bit-identical across runs, machines,
/// and worker counts.
inline LittleInstance generate_instance(std::size_t m, std::size_t n, Dist dist,
                                        std::uint64_t seed) {
    if (m == 0 || n == 0)
        throw size_error("instance dimensions must be positive, got " +
                         std::to_string(m) + "x" + std::to_string(n));
    const std::uint64_t entries = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n);
    if (entries > max_instance_entries)
        throw size_error("instance " + std::to_string(m) + "x" + std::to_string(n) +
                         " has " + std::to_string(entries) + " entries, cap is " +
                         std::to_string(max_instance_entries));

    LittleInstance inst;
    inst.m = m;
    inst.n = n;
    inst.dist = dist;
    inst.seed = seed;
    inst.h = Matrix(m, n);
    if (dist == Dist::gaussian) {
        for (std::uint64_t k = 0; k < entries; ++k)
            inst.h.data[k] = rng::normal_at(seed, k);
    } else {
        for (std::uint64_t k = 0; k < entries; ++k)
            inst.h.data[k] = rng::sign_at(seed, k);
    }
    return inst;
}

/// Fold a square matrix into the symmetric zero-diagonal form
/// hs(i,j) = (h(i,j) + h(j,i)) / sqrt(2) for i != j.  Each unordered pair is
/// computed once and written to both slots, so hs is symmetric bit for bit.
/// The 1/sqrt(2) keeps unit entry variance when h has i.i.d. unit-variance
/// entries.
inline SymmetricInstance symmetrize(const LittleInstance& inst) {
    if (inst.m != inst.n)
        throw shape_error("symmetrize requires a square matrix, got " +
                          std::to_string(inst.m) + "x" + std::to_string(inst.n));
    SymmetricInstance sym;
    sym.n = inst.n;
    sym.hs = Matrix(inst.n, inst.n);
    for (std::size_t i = 0; i < inst.n; ++i) {
        for (std::size_t j = i + 1; j < inst.n; ++j) {
            const double v = (inst.h(i, j) + inst.h(j, i)) / std::numbers::sqrt2;
            sym.hs(i, j) = v;
            sym.hs(j, i) = v;
        }
    }
    return sym;
}

} // namespace little
