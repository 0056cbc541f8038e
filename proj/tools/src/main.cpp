#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "app/config.hpp"
#include "app/run.hpp"
#include "thinscat/parallel.hpp"

int main(int argc, char** argv)
{
    CLI::App cli{"thinscat: wave scattering by many thin impedance cylinders"};
    std::string config_path;
    std::string out_dir;
    long long seed = -1;
    unsigned threads = 0;
    cli.add_option("--config", config_path, "Experiment configuration (INI)")->required();
    cli.add_option("--out", out_dir, "Output directory (overrides output_dir)");
    cli.add_option("--seed", seed, "Random seed (overrides seed)")->check(CLI::NonNegativeNumber);
    cli.add_option("--threads", threads, "Worker thread cap, 0 = all hardware threads");
    try
    {
        cli.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = cli.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        thinscat::set_max_threads(threads);
        auto config = thinscat::app::load_config(config_path);
        if (!out_dir.empty())
        {
            config.output_dir = out_dir;
        }
        if (seed >= 0)
        {
            config.seed = static_cast<std::uint64_t>(seed);
        }
        auto const summary = thinscat::app::run(config);
        std::printf("thinscat: mode %s finished, artifacts in %s\n", summary["mode"].get<std::string>().c_str(),
                    config.output_dir.c_str());
        return 0;
    }
    catch (std::exception const& e)
    {
        std::fprintf(stderr, "thinscat: error: %s\n", e.what());
        return thinscat::app::exit_code_for(e);
    }
}
