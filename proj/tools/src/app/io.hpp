#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thinscat/medium.hpp"
#include "thinscat/multi.hpp"

namespace thinscat::app {

/*!
 * Sampled complex field on a rectangular lattice, stored as rows "x y re im"
 * in x-fastest order. Header lines:
 *
 *   # rect <xmin> <xmax> <ymin> <ymax>
 *   # shape <nx> <ny>
 *   # layout cells|nodes
 *
 * "cells" is the cell-centered layout of GridField, "nodes" includes the
 * rectangle corners. Points where the field is undefined hold nan.
 */
struct FieldTable
{
    Rect rect;
    std::size_t nx = 0;
    std::size_t ny = 0;
    bool cell_centered = true;
    std::vector<Point2> points;
    std::vector<Complex> values;
};

FieldTable to_table(GridField const& field);
GridField to_grid_field(FieldTable const& table);

void write_field_table(std::string const& path, FieldTable const& table);
FieldTable read_field_table(std::string const& path);

//! "# a=<radius>", "# d=<min_sep>", then one "x y" line per center.
void write_scatterers(std::string const& path, ScattererSet const& set);
ScattererSet read_scatterers(std::string const& path);

//! %.17g (enough digits to round-trip any double); nan prints as "nan".
std::string format_double(double v);

}  // namespace thinscat::app
