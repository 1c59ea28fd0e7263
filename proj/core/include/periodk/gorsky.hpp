#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "periodk/complex.hpp"

namespace periodk {

/// 0 -> sub -> middle -> quotient -> 0 with degreewise maps. Kept as raw
/// components so that a damaged sequence can still be represented and rejected.
struct ShortExactSequence {
    PeriodicComplex sub;
    PeriodicComplex middle;
    PeriodicComplex quotient;
    std::vector<ModuleMap> inclusion;
    std::vector<ModuleMap> projection;
};

/// Chain maps, injective/surjective degreewise, projection after inclusion
/// zero and dimensions adding up. Empty string on success.
std::string check_exact(const ShortExactSequence& s);

/// One splitting step at the pivot degree p (smallest degree with V^p != 0).
///   U: Z^p(V) in degree p, d_U^p = 0, d_U^{p-1} corestricted
///   W: V with the degree-p component removed
///   Q: stalk of V^p / Z^p(V) in degree p
///   Z: stalk of Z^p(V) in degree p
struct TruncationNode {
    long pivot = 0;
    PeriodicComplex v, u, w, q, z;
    ShortExactSequence uvq;            ///< 0 -> U -> V -> Q -> 0
    ShortExactSequence zuw;            ///< 0 -> Z -> U -> W -> 0
    std::vector<ShortExactSequence> twisted;  ///< the same two shifted by m (odd m only)
};

/// Zero differential and at most one nonzero component.
bool is_leaf(const PeriodicComplex& v);

/// Split V until a leaf remains. `with_twists` adds the shifted sequences.
struct TruncationChain {
    PeriodicComplex root;
    std::vector<TruncationNode> nodes;
    PeriodicComplex leaf;
};

TruncationNode truncation_node(const PeriodicComplex& v, bool with_twists);
TruncationChain truncation_chain(const PeriodicComplex& v, bool with_twists);

/// Odd m: chain whose relations, together with the rotation triangles,
/// combine to 2[V] in the free group on objects.
using GorskyWitness = TruncationChain;

/// Throws InvalidArgument for even m.
GorskyWitness gorsky_witness(const PeriodicComplex& v);

struct WitnessCheck {
    bool ok = true;
    std::string failure;  ///< first failing check
    explicit operator bool() const noexcept { return ok; }
};

WitnessCheck verify_witness(const GorskyWitness& w);

/// Copy of w with one map damaged: a column of an inclusion component or a
/// row of a projection component set to zero. Needs at least one node.
GorskyWitness mutate_witness(const GorskyWitness& w, Rng& rng);

}  // namespace periodk
