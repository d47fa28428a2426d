#include <ribbonlab/cli.hpp>

int main(int argc, char **argv)
{
    return ribbonlab::cli::run_cli(argc, argv);
}
