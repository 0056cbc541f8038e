#include "app/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "thinscat/error.hpp"

namespace thinscat::app {
namespace {

std::ofstream open_out(std::string const& path)
{
    std::ofstream out(path);
    if (!out)
    {
        throw InvalidArgument("cannot write '" + path + "'");
    }
    return out;
}

std::ifstream open_in(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw InvalidArgument("cannot open '" + path + "'");
    }
    return in;
}

double parse_number(std::string const& token, std::string const& path, std::size_t line)
{
    if (token == "nan")
    {
        return std::numeric_limits<double>::quiet_NaN();
    }
    try
    {
        std::size_t used = 0;
        double const v = std::stod(token, &used);
        if (used == token.size())
        {
            return v;
        }
    }
    catch (std::exception const&)
    {
    }
    throw InvalidArgument(path + ":" + std::to_string(line) + ": malformed number '" + token + "'");
}

}  // namespace

std::string format_double(double v)
{
    if (std::isnan(v))
    {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

FieldTable to_table(GridField const& field)
{
    FieldTable t;
    t.rect = field.rect();
    t.nx = field.nx();
    t.ny = field.ny();
    t.cell_centered = true;
    for (std::size_t j = 0; j < field.ny(); ++j)
    {
        for (std::size_t i = 0; i < field.nx(); ++i)
        {
            t.points.push_back(field.node(i, j));
            t.values.push_back(field.at(i, j));
        }
    }
    return t;
}

GridField to_grid_field(FieldTable const& table)
{
    if (!table.cell_centered)
    {
        throw InvalidArgument("to_grid_field: table is not cell-centered");
    }
    GridField field(table.rect, table.nx, table.ny);
    if (table.values.size() != field.size())
    {
        throw InvalidArgument("to_grid_field: value count does not match the shape");
    }
    field.values() = table.values;
    return field;
}

void write_field_table(std::string const& path, FieldTable const& t)
{
    auto out = open_out(path);
    out << "# rect " << format_double(t.rect.xmin) << " " << format_double(t.rect.xmax) << " "
        << format_double(t.rect.ymin) << " " << format_double(t.rect.ymax) << "\n";
    out << "# shape " << t.nx << " " << t.ny << "\n";
    out << "# layout " << (t.cell_centered ? "cells" : "nodes") << "\n";
    out << "# x y re im\n";
    for (std::size_t k = 0; k < t.points.size(); ++k)
    {
        out << format_double(t.points[k].x) << " " << format_double(t.points[k].y) << " "
            << format_double(t.values[k].real()) << " " << format_double(t.values[k].imag()) << "\n";
    }
}

FieldTable read_field_table(std::string const& path)
{
    auto in = open_in(path);
    FieldTable t;
    bool have_rect = false;
    bool have_shape = false;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line))
    {
        ++number;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first))
        {
            continue;
        }
        if (first == "#")
        {
            std::string key;
            ss >> key;
            if (key == "rect")
            {
                std::string a, b, c, d;
                ss >> a >> b >> c >> d;
                t.rect = {parse_number(a, path, number), parse_number(b, path, number),
                          parse_number(c, path, number), parse_number(d, path, number)};
                have_rect = true;
            }
            else if (key == "shape")
            {
                ss >> t.nx >> t.ny;
                have_shape = !ss.fail();
            }
            else if (key == "layout")
            {
                std::string layout;
                ss >> layout;
                t.cell_centered = layout != "nodes";
            }
            continue;
        }
        std::string y, re, im;
        if (!(ss >> y >> re >> im))
        {
            throw InvalidArgument(path + ":" + std::to_string(number) + ": expected 'x y re im'");
        }
        t.points.push_back({parse_number(first, path, number), parse_number(y, path, number)});
        t.values.push_back({parse_number(re, path, number), parse_number(im, path, number)});
    }
    if (!have_rect || !have_shape)
    {
        throw InvalidArgument(path + ": missing '# rect' or '# shape' header");
    }
    if (t.values.size() != t.nx * t.ny)
    {
        throw InvalidArgument(path + ": " + std::to_string(t.values.size()) + " rows for shape "
                              + std::to_string(t.nx) + " x " + std::to_string(t.ny));
    }
    return t;
}

void write_scatterers(std::string const& path, ScattererSet const& set)
{
    auto out = open_out(path);
    out << "# a=" << format_double(set.radius()) << "\n";
    out << "# d=" << format_double(set.min_separation()) << "\n";
    for (Point2 p : set.centers())
    {
        out << format_double(p.x) << " " << format_double(p.y) << "\n";
    }
}

ScattererSet read_scatterers(std::string const& path)
{
    auto in = open_in(path);
    double a = std::numeric_limits<double>::quiet_NaN();
    double d = std::numeric_limits<double>::quiet_NaN();
    std::vector<Point2> centers;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line))
    {
        ++number;
        auto const hash = line.find('#');
        if (hash != std::string::npos)
        {
            std::string const comment = line.substr(hash + 1);
            auto const eq = comment.find('=');
            if (eq != std::string::npos)
            {
                std::istringstream key_stream(comment.substr(0, eq));
                std::string key;
                key_stream >> key;
                std::istringstream value_stream(comment.substr(eq + 1));
                std::string value;
                value_stream >> value;
                if (key == "a")
                {
                    a = parse_number(value, path, number);
                }
                else if (key == "d")
                {
                    d = parse_number(value, path, number);
                }
            }
            line = line.substr(0, hash);
        }
        std::istringstream ss(line);
        std::string x, y;
        if (!(ss >> x))
        {
            continue;
        }
        if (!(ss >> y))
        {
            throw InvalidArgument(path + ":" + std::to_string(number) + ": expected 'x y'");
        }
        centers.push_back({parse_number(x, path, number), parse_number(y, path, number)});
    }
    if (std::isnan(a) || std::isnan(d))
    {
        throw InvalidArgument(path + ": missing '# a=' or '# d=' header");
    }
    return ScattererSet::make(std::move(centers), a, d);
}

}  // namespace thinscat::app
