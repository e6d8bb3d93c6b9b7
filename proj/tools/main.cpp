// SPDX-License-Identifier: Apache-2.0
#include "oasforge/cli.hpp"

int main(int argc, char** argv)
{
    return oasforge::cli::main(argc, argv);
}
