#include "app/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace thinscat::app {
namespace {

using boost::property_tree::ptree;

std::string trim(std::string const& s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
    {
        return {};
    }
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string const& key, std::string const& raw)
{
    std::string const text = trim(raw);
    double value = 0.0;
    auto const [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
    {
        throw ConfigError("config key '" + key + "': expected a number, got '" + raw + "'");
    }
    if (!std::isfinite(value))
    {
        throw ConfigError("config key '" + key + "': value must be finite");
    }
    return value;
}

std::uint64_t to_unsigned(std::string const& key, std::string const& raw)
{
    std::string const text = trim(raw);
    std::uint64_t value = 0;
    auto const [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
    {
        throw ConfigError("config key '" + key + "': expected a non-negative integer, got '" + raw + "'");
    }
    return value;
}

bool to_bool(std::string const& key, std::string const& raw)
{
    std::string const text = trim(raw);
    if (text == "true" || text == "1" || text == "yes")
    {
        return true;
    }
    if (text == "false" || text == "0" || text == "no")
    {
        return false;
    }
    throw ConfigError("config key '" + key + "': expected true or false, got '" + raw + "'");
}

// Reads keys of one section and remembers which ones it consumed.
class Section
{
  public:
    Section(ptree const* node, std::string name) : node_(node), name_(std::move(name)) {}

    std::optional<std::string> raw(std::string const& key)
    {
        seen_.insert(key);
        if (node_ == nullptr)
        {
            return std::nullopt;
        }
        auto const child = node_->get_child_optional(ptree::path_type(key, '\0'));
        if (!child)
        {
            return std::nullopt;
        }
        return child->data();
    }

    std::string qualified(std::string const& key) const { return name_.empty() ? key : name_ + "." + key; }

    void number(std::string const& key, double& out)
    {
        if (auto v = raw(key))
        {
            out = to_double(qualified(key), *v);
        }
    }

    void count(std::string const& key, std::size_t& out)
    {
        if (auto v = raw(key))
        {
            out = static_cast<std::size_t>(to_unsigned(qualified(key), *v));
        }
    }

    void flag(std::string const& key, bool& out)
    {
        if (auto v = raw(key))
        {
            out = to_bool(qualified(key), *v);
        }
    }

    void text(std::string const& key, std::string& out)
    {
        if (auto v = raw(key))
        {
            out = trim(*v);
        }
    }

    void rect(Rect& r)
    {
        number("xmin", r.xmin);
        number("xmax", r.xmax);
        number("ymin", r.ymin);
        number("ymax", r.ymax);
    }

    // Unknown keys are a configuration error; sections never nest.
    void reject_unknown(std::set<std::string> const& sections = {}) const
    {
        if (node_ == nullptr)
        {
            return;
        }
        for (auto const& [key, child] : *node_)
        {
            if (seen_.count(key) == 0 && sections.count(key) == 0)
            {
                throw ConfigError("unknown config key '" + qualified(key) + "'");
            }
            if (sections.count(key) == 0 && !child.empty())
            {
                throw ConfigError("config key '" + qualified(key) + "' must be a value, not a section");
            }
        }
    }

  private:
    ptree const* node_;
    std::string name_;
    std::set<std::string> seen_;
};

Mode parse_mode(std::string const& text)
{
    static std::map<std::string, Mode> const modes{{"single", Mode::single},
                                                   {"multi", Mode::multi},
                                                   {"medium", Mode::medium},
                                                   {"design", Mode::design},
                                                   {"converge", Mode::converge}};
    auto const it = modes.find(text);
    if (it == modes.end())
    {
        throw ConfigError("config key 'mode': expected single, multi, medium, design or converge, got '" + text
                          + "'");
    }
    return it->second;
}

std::vector<double> parse_list(std::string const& key, std::string const& raw)
{
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        out.push_back(to_double(key, item));
    }
    return out;
}

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require(bool ok, std::string const& key, std::string const& what)
{
    if (!ok)
    {
        throw ConfigError("config key '" + key + "': " + what);
    }
}

void require_rect(Rect const& r, std::string const& section)
{
    require(r.xmax > r.xmin, section + ".xmax", "must exceed xmin");
    require(r.ymax > r.ymin, section + ".ymax", "must exceed ymin");
}

}  // namespace

std::string to_string(Mode mode)
{
    switch (mode)
    {
    case Mode::single: return "single";
    case Mode::multi: return "multi";
    case Mode::medium: return "medium";
    case Mode::design: return "design";
    case Mode::converge: return "converge";
    }
    return "unknown";
}

WaveParams WaveInput::params() const
{
    return WaveParams::make(omega, mu, epsilon, zeta, k3);
}

Point2 OutputGrid::node(std::size_t i, std::size_t j) const
{
    return {rect.xmin + rect.width() * double(i) / double(nx - 1),
            rect.ymin + rect.height() * double(j) / double(ny - 1)};
}

DensityField MediumInput::density() const
{
    if (n_x == 0.0 && n_y == 0.0)
    {
        return DensityField::constant(domain, n0);
    }
    double const c0 = n0;
    double const cx = n_x;
    double const cy = n_y;
    return DensityField::make(domain, [c0, cx, cy](Point2 p) { return c0 + cx * p.x + cy * p.y; });
}

std::size_t MediumInput::cells_y() const
{
    return static_cast<std::size_t>(std::llround(double(cells) * domain.height() / domain.width()));
}

ExperimentConfig parse_config(std::string const& text)
{
    ptree tree;
    std::istringstream in(text);
    try
    {
        boost::property_tree::ini_parser::read_ini(in, tree);
    }
    catch (boost::property_tree::ini_parser_error const& e)
    {
        throw ConfigError("config parse error at line " + std::to_string(e.line()) + ": " + e.message());
    }

    ExperimentConfig c;
    Section root(&tree, "");
    if (auto m = root.raw("mode"))
    {
        c.mode = parse_mode(trim(*m));
    }
    else
    {
        throw ConfigError("config key 'mode' is required");
    }
    if (auto s = root.raw("seed"))
    {
        c.seed = to_unsigned("seed", *s);
    }
    root.text("output_dir", c.output_dir);

    auto section = [&](char const* name) {
        auto const child = tree.get_child_optional(name);
        return Section(child ? &*child : nullptr, name);
    };

    Section wave = section("wave");
    wave.number("omega", c.wave.omega);
    wave.number("mu", c.wave.mu);
    wave.number("epsilon", c.wave.epsilon);
    double zr = c.wave.zeta.real();
    double zi = c.wave.zeta.imag();
    wave.number("zeta_re", zr);
    wave.number("zeta_im", zi);
    c.wave.zeta = {zr, zi};
    wave.number("k3", c.wave.k3);
    wave.reject_unknown();

    Section grid = section("grid");
    grid.rect(c.grid.rect);
    grid.count("nx", c.grid.nx);
    grid.count("ny", c.grid.ny);
    grid.flag("em", c.grid.em);
    grid.number("z", c.grid.z);
    grid.reject_unknown();

    Section single = section("single");
    single.number("a", c.single.a);
    single.number("center_x", c.single.center.x);
    single.number("center_y", c.single.center.y);
    single.reject_unknown();

    Section multi = section("multi");
    multi.number("a", c.multi.a);
    multi.text("layout", c.multi.layout);
    multi.rect(c.multi.region);
    multi.count("nx", c.multi.nx);
    multi.count("ny", c.multi.ny);
    multi.number("d", c.multi.d);
    multi.text("centers_file", c.multi.centers_file);
    multi.text("method", c.multi.method);
    multi.count("max_scatterers", c.multi.max_scatterers);
    multi.number("probe_x", c.multi.probe.x);
    multi.number("probe_y", c.multi.probe.y);
    multi.reject_unknown();

    Section medium = section("medium");
    medium.rect(c.medium.domain);
    medium.number("n0", c.medium.n0);
    medium.number("n_x", c.medium.n_x);
    medium.number("n_y", c.medium.n_y);
    medium.count("cells", c.medium.cells);
    medium.count("margin", c.medium.margin);
    medium.number("a", c.medium.a);
    medium.number("cell_scale", c.medium.cell_scale);
    medium.number("separation_coefficient", c.medium.separation_coefficient);
    medium.reject_unknown();

    Section design = section("design");
    double tr = c.design.target_n_sq.real();
    double ti = c.design.target_n_sq.imag();
    design.number("target_re", tr);
    design.number("target_im", ti);
    c.design.target_n_sq = {tr, ti};
    design.reject_unknown();

    Section converge = section("converge");
    if (auto v = converge.raw("a_values"))
    {
        c.converge.a_values = parse_list("converge.a_values", *v);
    }
    converge.number("radius", c.converge.radius);
    std::size_t directions = std::size_t(c.converge.directions);
    converge.count("directions", directions);
    c.converge.directions = int(directions);
    converge.reject_unknown();

    root.reject_unknown({"wave", "grid", "single", "multi", "medium", "design", "converge"});
    validate(c);
    return c;
}

ExperimentConfig load_config(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void validate(ExperimentConfig const& c)
{
    try
    {
        c.wave.params();
    }
    catch (InvalidArgument const& e)
    {
        throw ConfigError(std::string("section [wave]: ") + e.what());
    }
    require(!c.output_dir.empty(), "output_dir", "must not be empty");
    require_rect(c.grid.rect, "grid");
    require(c.grid.nx >= 2, "grid.nx", "must be at least 2");
    require(c.grid.ny >= 2, "grid.ny", "must be at least 2");

    switch (c.mode)
    {
    case Mode::single:
        require(c.single.a > 0.0, "single.a", "must be positive");
        break;
    case Mode::multi:
        require(c.multi.layout == "jittered" || c.multi.layout == "file", "multi.layout",
                "expected jittered or file");
        require(c.multi.method == "lu" || c.multi.method == "fixed_point", "multi.method",
                "expected lu or fixed_point");
        if (c.multi.layout == "file")
        {
            require(!c.multi.centers_file.empty(), "multi.centers_file", "required when layout = file");
        }
        else
        {
            require(c.multi.a > 0.0, "multi.a", "must be positive");
            require(c.multi.d > 0.0, "multi.d", "must be positive");
            require(c.multi.nx >= 1 && c.multi.ny >= 1, "multi.nx", "grid of centers must be non-empty");
            require_rect(c.multi.region, "multi");
        }
        break;
    case Mode::medium:
        require_rect(c.medium.domain, "medium");
        require(c.medium.cells >= 4, "medium.cells", "must be at least 4");
        require(std::abs(double(c.medium.cells_y()) * c.medium.domain.width()
                         - double(c.medium.cells) * c.medium.domain.height())
                    <= 1e-9 * c.medium.domain.width() * double(c.medium.cells),
                "medium.cells", "domain height must be a whole number of square cells");
        require(c.medium.cells_y() >= 4, "medium.cells", "domain too flat for square cells");
        require(c.medium.a >= 0.0, "medium.a", "must be non-negative");
        require(c.medium.cell_scale > 0.0, "medium.cell_scale", "must be positive");
        require(c.medium.separation_coefficient > 0.0, "medium.separation_coefficient", "must be positive");
        for (double x : {c.medium.domain.xmin, c.medium.domain.xmax})
        {
            for (double y : {c.medium.domain.ymin, c.medium.domain.ymax})
            {
                require(c.medium.n0 + c.medium.n_x * x + c.medium.n_y * y >= 0.0, "medium.n0",
                        "density must be non-negative on the whole domain");
            }
        }
        break;
    case Mode::design:
        break;
    case Mode::converge:
        require(c.converge.a_values.size() >= 2, "converge.a_values", "need at least two values");
        for (double a : c.converge.a_values)
        {
            require(a > 0.0 && a < c.converge.radius, "converge.a_values",
                    "each radius must be positive and below converge.radius");
        }
        require(c.converge.directions >= 4, "converge.directions", "must be at least 4");
        break;
    }
}

std::string write_config(ExperimentConfig const& c)
{
    std::ostringstream out;
    out << "mode = " << to_string(c.mode) << "\n";
    out << "seed = " << c.seed << "\n";
    out << "output_dir = " << c.output_dir << "\n";

    out << "\n[wave]\n";
    out << "omega = " << num(c.wave.omega) << "\n";
    out << "mu = " << num(c.wave.mu) << "\n";
    out << "epsilon = " << num(c.wave.epsilon) << "\n";
    out << "zeta_re = " << num(c.wave.zeta.real()) << "\n";
    out << "zeta_im = " << num(c.wave.zeta.imag()) << "\n";
    out << "k3 = " << num(c.wave.k3) << "\n";

    auto rect = [&](Rect const& r) {
        out << "xmin = " << num(r.xmin) << "\nxmax = " << num(r.xmax) << "\nymin = " << num(r.ymin)
            << "\nymax = " << num(r.ymax) << "\n";
    };

    out << "\n[grid]\n";
    rect(c.grid.rect);
    out << "nx = " << c.grid.nx << "\nny = " << c.grid.ny << "\n";
    out << "em = " << (c.grid.em ? "true" : "false") << "\n";
    out << "z = " << num(c.grid.z) << "\n";

    out << "\n[single]\n";
    out << "a = " << num(c.single.a) << "\n";
    out << "center_x = " << num(c.single.center.x) << "\ncenter_y = " << num(c.single.center.y) << "\n";

    out << "\n[multi]\n";
    out << "a = " << num(c.multi.a) << "\n";
    out << "layout = " << c.multi.layout << "\n";
    rect(c.multi.region);
    out << "nx = " << c.multi.nx << "\nny = " << c.multi.ny << "\n";
    out << "d = " << num(c.multi.d) << "\n";
    if (!c.multi.centers_file.empty())
    {
        out << "centers_file = " << c.multi.centers_file << "\n";
    }
    out << "method = " << c.multi.method << "\n";
    out << "max_scatterers = " << c.multi.max_scatterers << "\n";
    out << "probe_x = " << num(c.multi.probe.x) << "\nprobe_y = " << num(c.multi.probe.y) << "\n";

    out << "\n[medium]\n";
    rect(c.medium.domain);
    out << "n0 = " << num(c.medium.n0) << "\nn_x = " << num(c.medium.n_x) << "\nn_y = " << num(c.medium.n_y)
        << "\n";
    out << "cells = " << c.medium.cells << "\nmargin = " << c.medium.margin << "\n";
    out << "a = " << num(c.medium.a) << "\n";
    out << "cell_scale = " << num(c.medium.cell_scale) << "\n";
    out << "separation_coefficient = " << num(c.medium.separation_coefficient) << "\n";

    out << "\n[design]\n";
    out << "target_re = " << num(c.design.target_n_sq.real()) << "\n";
    out << "target_im = " << num(c.design.target_n_sq.imag()) << "\n";

    out << "\n[converge]\n";
    out << "a_values = ";
    for (std::size_t k = 0; k < c.converge.a_values.size(); ++k)
    {
        out << (k ? ", " : "") << num(c.converge.a_values[k]);
    }
    out << "\nradius = " << num(c.converge.radius) << "\n";
    out << "directions = " << c.converge.directions << "\n";
    return out.str();
}

}  // namespace thinscat::app
