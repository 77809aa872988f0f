#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <vector>

#include "lamid/errors.hpp"

namespace lamid {

enum class LayerKind { steel, cfrp };

/// One ply of the laminate cross-section. SI units throughout.
struct MaterialLayer {
    double thickness = 0.0;       // m
    double youngs_modulus = 0.0;  // Pa
    double poisson_ratio = 0.0;
    double density = 0.0;         // kg/m^3
    LayerKind kind = LayerKind::steel;

    void validate() const {
        if (thickness <= 0.0) throw InvalidGeometryError("layer thickness must be positive");
        if (youngs_modulus <= 0.0) throw InvalidGeometryError("layer modulus must be positive");
        if (poisson_ratio < 0.0 || poisson_ratio >= 0.5)
            throw InvalidGeometryError("poisson ratio must lie in [0, 0.5)");
        if (density <= 0.0) throw InvalidGeometryError("layer density must be positive");
    }
};

/// Cross-section and in-plane extent of the waveguide, bottom layer first.
struct LaminateGeometry {
    double length = 0.0;  // m
    std::vector<MaterialLayer> layers;
    double sensor_position = 0.0;   // m along the length
    int damaged_layer_index = 0;    // layer whose modulus the damage reduces

    double total_thickness() const {
        double t = 0.0;
        for (const auto& l : layers) t += l.thickness;
        return t;
    }

    void validate() const {
        if (length <= 0.0) throw InvalidGeometryError("laminate length must be positive");
        if (layers.empty()) throw InvalidGeometryError("laminate needs at least one layer");
        for (const auto& l : layers) l.validate();
        if (sensor_position <= 0.0 || sensor_position >= length)
            throw InvalidGeometryError("sensor must lie strictly inside the laminate length");
        if (damaged_layer_index < 0 || damaged_layer_index >= static_cast<int>(layers.size()))
            throw InvalidGeometryError("damaged layer index out of range");
    }
};

/// The three inferred damage quantities. x_d is the center of the damage zone.
struct DamageParams {
    double youngs_modulus = 0.0;  // E_d, Pa
    double position = 0.0;        // x_d, m
    double extent = 0.0;          // l_d, m

    double zone_begin() const { return position - 0.5 * extent; }
    double zone_end() const { return position + 0.5 * extent; }

    std::array<double, 3> as_array() const { return {youngs_modulus, position, extent}; }
};

/// Box bounds of the trained parametric space.
struct ParametricDomain {
    double e_min = 5.0e6, e_max = 5.0e9;    // Pa
    double x_min = 0.020, x_max = 0.150;    // m
    double l_min = 0.002, l_max = 0.015;    // m

    void validate() const {
        if (!(e_min < e_max && x_min < x_max && l_min < l_max))
            throw InvalidInputError("parametric domain bounds must satisfy min < max");
    }

    bool contains(const DamageParams& p) const {
        return p.youngs_modulus >= e_min && p.youngs_modulus <= e_max && p.position >= x_min &&
               p.position <= x_max && p.extent >= l_min && p.extent <= l_max;
    }

    double volume() const { return (e_max - e_min) * (x_max - x_min) * (l_max - l_min); }

    std::array<double, 3> lower() const { return {e_min, x_min, l_min}; }
    std::array<double, 3> upper() const { return {e_max, x_max, l_max}; }

    DamageParams center() const {
        return {0.5 * (e_min + e_max), 0.5 * (x_min + x_max), 0.5 * (l_min + l_max)};
    }

    std::vector<DamageParams> corners() const {
        std::vector<DamageParams> c;
        c.reserve(8);
        for (double e : {e_min, e_max})
            for (double x : {x_min, x_max})
                for (double l : {l_min, l_max}) c.push_back({e, x, l});
        return c;
    }

    template <class Rng>
    DamageParams sample(Rng& rng) const {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        return {e_min + u(rng) * (e_max - e_min), x_min + u(rng) * (x_max - x_min),
                l_min + u(rng) * (l_max - l_min)};
    }
};

/// 16-layer alternating steel/CFRP stack used by the default configuration.
/// Steel plies sit at even indices counting from the bottom.
inline LaminateGeometry default_laminate() {
    MaterialLayer steel{0.12e-3, 210.0e9, 0.30, 7850.0, LayerKind::steel};
    MaterialLayer cfrp{0.125e-3, 60.0e9, 0.30, 1600.0, LayerKind::cfrp};
    LaminateGeometry g;
    g.length = 0.200;
    g.sensor_position = 0.0575;
    g.layers.reserve(16);
    for (int i = 0; i < 8; ++i) {
        g.layers.push_back(steel);
        g.layers.push_back(cfrp);
    }
    g.damaged_layer_index = 14;  // topmost steel ply
    return g;
}

}  // namespace lamid
