#pragma once

#include <lud/diagnostic.hpp>
#include <lud/representation.hpp>

#include <vector>

namespace lud
{
    // Well-formedness checks beyond syntax. Errors:
    //   duplicate-hole-owner   a hole is an argument of two conditions
    //   discrel-holes-equal    a discourse relation reuses one hole twice
    //   undefined-ident        a constraint or grouping mentions an unknown ident
    //   missing-mood           no mood condition on the top label
    //   duplicate-mood         more than one mood condition
    //   top-hole-mismatch      the mood scope is not the index hole
    //   arity-mismatch         |pluggable labels| != |holes|
    //   partition-conflict     one label leq-constrained under both holes of a
    //                          discourse relation
    //   duplicate-group-root   two groupings share a root
    //   group-root-is-member / group-member-overlap / member-no-conditions
    // Warnings:
    //   modifies-marker-mismatch   modifier shares no instance with its host
    //   unused-instance            a referent introduced next to other material
    //                              but never referenced
    auto validate(const LudRepresentation & rep) -> std::vector<Diagnostic>;
}
