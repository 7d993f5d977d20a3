#include "ksieve/cli.hpp"

int main(int argc, char** argv)
{
    return ksieve::cli::run(argc, argv);
}
