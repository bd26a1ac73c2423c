#pragma once

#include <lud/representation.hpp>
#include <lud/resolve.hpp>

#include <cstdint>

namespace lud
{
    // Seed-controlled random representations wired like the corpus entries:
    // every discourse relation has one hole pinned (leaf fragment or external
    // placeholder, per its lexicon class), the other mode-constrained; matrix
    // material sits under the mode hole, optionally behind a negation; leaf
    // NPs may hang off the matrix as alfa presuppositions.
    struct GeneratorOptions
    {
        std::uint64_t seed{0};
        int min_discrels{1};
        int max_discrels{4};
        bool allow_neg{true};
        bool allow_alfa{true};
        int max_holes{10}; // keep within the oracle guard
    };

    struct GeneratedInstance
    {
        LudRepresentation rep;
        SurfaceMeta surface;
        Lexicon lexicon;
    };

    auto random_instance(const GeneratorOptions & opts) -> GeneratedInstance;
}
