#include "seed.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {
std::uint64_t seed = 20240611;
}

auto test_seed() -> std::uint64_t
{
    return seed;
}

auto main(int argc, char * argv[]) -> int
{
    testing::InitGoogleTest(&argc, argv);
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc)
            seed = std::strtoull(argv[++i], nullptr, 10);
        else if (arg.rfind("--seed=", 0) == 0)
            seed = std::strtoull(arg.c_str() + 7, nullptr, 10);
        else {
            std::cerr << "unknown argument " << arg << "\n";
            return 2;
        }
    }
    return RUN_ALL_TESTS();
}
