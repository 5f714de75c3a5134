#pragma once

#include <stdexcept>
#include <string>

namespace twisthom {

// Base for all engine errors. The CLI maps these to exit code 1 (input
// problems) or 2 (internal inconsistencies, see SignInconsistency).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

struct CompositionNotZero : Error {
    explicit CompositionNotZero(const std::string& what) : Error("composition not zero: " + what) {}
};

struct ObjectMismatch : Error {
    explicit ObjectMismatch(const std::string& what) : Error("object mismatch: " + what) {}
};

struct NotAComplex : Error {
    explicit NotAComplex(const std::string& what) : Error("not a complex: " + what) {}
};

struct NotATwistedMorphism : Error {
    explicit NotATwistedMorphism(const std::string& what) : Error("not a twisted morphism: " + what) {}
};

struct NotChainMap : Error {
    explicit NotChainMap(const std::string& what) : Error("not a chain map: " + what) {}
};

struct FunctorInvalid : Error {
    explicit FunctorInvalid(const std::string& what) : Error("functor invalid: " + what) {}
};

struct InconsistentIncidence : Error {
    explicit InconsistentIncidence(const std::string& what) : Error("inconsistent incidence: " + what) {}
};

// Raised if the totalization differential fails d^2 = 0. This cannot happen
// for validated inputs; it exists to surface sign bugs loudly.
struct SignInconsistency : Error {
    explicit SignInconsistency(const std::string& what) : Error("sign inconsistency: " + what) {}
};

struct InvalidCategory : Error {
    explicit InvalidCategory(const std::string& what) : Error("invalid category: " + what) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error("schema error: " + what) {}
};

struct Unsolvable : Error {
    explicit Unsolvable(const std::string& what) : Error("unsolvable linear system: " + what) {}
};

}  // namespace twisthom
