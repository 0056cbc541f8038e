#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "thinscat/error.hpp"
#include "thinscat/medium.hpp"
#include "thinscat/waves.hpp"

namespace thinscat::app {

// A malformed or incomplete configuration; the message names the key.
class ConfigError : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

enum class Mode
{
    single,
    multi,
    medium,
    design,
    converge
};

std::string to_string(Mode mode);

struct WaveInput
{
    double omega = 1.0;
    double mu = 1.0;
    double epsilon = 1.0;
    Complex zeta{1.0, 0.0};
    double k3 = 0.0;

    WaveParams params() const;
};

// Node lattice for sampled output: nx x ny points including the corners.
struct OutputGrid
{
    Rect rect{-2.0, 2.0, -2.0, 2.0};
    std::size_t nx = 41;
    std::size_t ny = 41;
    bool em = false;  // also write E and H at height z
    double z = 0.0;

    Point2 node(std::size_t i, std::size_t j) const;
};

struct SingleInput
{
    double a = 1e-3;
    Point2 center{};
};

struct MultiInput
{
    double a = 1e-4;
    std::string layout = "jittered";  // "jittered" or "file"
    Rect region{0.0, 1.0, 0.0, 1.0};
    std::size_t nx = 10;
    std::size_t ny = 10;
    double d = 0.05;
    std::string centers_file;
    std::string method = "lu";  // "lu" or "fixed_point"
    std::size_t max_scatterers = 10000;
    Point2 probe{2.0, 2.0};
};

// Linear density N(x, y) = n0 + n_x x + n_y y on the domain. It must stay
// non-negative.
struct MediumInput
{
    Rect domain{0.0, 1.0, 0.0, 1.0};
    double n0 = 1.0;
    double n_x = 0.0;
    double n_y = 0.0;
    std::size_t cells = 32;  // Nystrom cells along x; square cells fix the count along y
    std::size_t margin = 0;  // 0 selects a quarter of the cells
    double a = 0.0;          // > 0 compares with a realized scatterer system
    double cell_scale = 1.0;
    double separation_coefficient = 1.0;

    DensityField density() const;
    std::size_t cells_y() const;
};

struct DesignInput
{
    Complex target_n_sq{1.0, 0.0};
};

struct ConvergeInput
{
    std::vector<double> a_values{1e-2, 1e-3, 1e-4, 1e-5};
    double radius = 1.0;
    int directions = 32;
};

struct ExperimentConfig
{
    Mode mode = Mode::single;
    std::uint64_t seed = 1;
    std::string output_dir = "thinscat_out";
    WaveInput wave;
    OutputGrid grid;
    SingleInput single;
    MultiInput multi;
    MediumInput medium;
    DesignInput design;
    ConvergeInput converge;
};

/*!
 * Parse INI text. Top-level keys are mode, seed and output_dir; sections
 * [wave], [grid], [single], [multi], [medium], [design] and [converge] hold
 * the rest. Missing keys keep their defaults, unknown keys are rejected.
 * Validation (including WaveParams construction) runs before returning.
 */
ExperimentConfig parse_config(std::string const& text);
ExperimentConfig load_config(std::string const& path);

//! Every resolved key at full precision; parse_config(write_config(c))
//! reproduces c.
std::string write_config(ExperimentConfig const& config);

void validate(ExperimentConfig const& config);

}  // namespace thinscat::app
