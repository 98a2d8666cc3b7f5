#pragma once

#include <stdexcept>
#include <string>

namespace tolfca {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    EmptyInput() : Error("empty input") {}
    explicit EmptyInput(const std::string& what) : Error(what) {}
};

struct DuplicateLabel : Error {
    std::string label;
    explicit DuplicateLabel(std::string l)
        : Error("duplicate element label: " + l), label(std::move(l)) {}
};

struct UnknownLabel : Error {
    std::string label;
    explicit UnknownLabel(std::string l)
        : Error("unknown element label: " + l), label(std::move(l)) {}
};

struct CycleDetected : Error {
    CycleDetected() : Error("cover relation contains a cycle") {}
};

// A pair of elements with no least upper bound or no greatest lower bound.
struct NotALattice : Error {
    std::string x, y;
    NotALattice(std::string x_, std::string y_, const std::string& kind)
        : Error("not a lattice: elements " + x_ + " and " + y_ + " have no " + kind),
          x(std::move(x_)),
          y(std::move(y_)) {}
};

struct HostMismatch : Error {
    HostMismatch() : Error("relations live on different lattices") {}
};

struct NotATolerance : Error {
    NotATolerance() : Error("relation is not a tolerance") {}
};

struct NotAWor : Error {
    NotAWor() : Error("relation is not a reflexive weak ordered relation") {}
};

struct NotAJoinEndomorphism : Error {
    NotAJoinEndomorphism() : Error("map does not preserve binary joins") {}
};

struct SizeBound : Error {
    explicit SizeBound(const std::string& what) : Error(what) {}
};

struct FactorNotALattice : Error {
    explicit FactorNotALattice(const std::string& what) : Error(what) {}
};

struct CorrespondenceViolation : Error {
    explicit CorrespondenceViolation(const std::string& what) : Error(what) {}
};

struct EmbeddingViolation : Error {
    explicit EmbeddingViolation(const std::string& what) : Error(what) {}
};

struct UnknownCheckId : Error {
    std::string id;
    explicit UnknownCheckId(std::string id_)
        : Error("unknown check id: " + id_), id(std::move(id_)) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace tolfca
