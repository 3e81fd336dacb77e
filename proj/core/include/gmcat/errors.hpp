#ifndef GMCAT_ERRORS_HPP
#define GMCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gmcat {

// Base class for structural errors. These signal that the input data is not
// even a candidate for checking (dangling ids, partial tables, mismatched
// boundaries of whole functors). Law violations never throw; they produce
// witnesses in a CheckReport instead.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedInput : Error {
  explicit MalformedInput(const std::string& what) : Error("malformed input: " + what) {}
};

// A 2-cell or functor boundary does not match the required shape.
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

// Lax data fed to an oplax check-point or vice versa.
struct VariantMismatch : Error {
  explicit VariantMismatch(const std::string& what) : Error("variant mismatch: " + what) {}
};

struct NotASemilattice : Error {
  explicit NotASemilattice(const std::string& what) : Error("not a semilattice: " + what) {}
};

struct ClosureBound : Error {
  explicit ClosureBound(const std::string& what) : Error("closure bound exceeded: " + what) {}
};

struct SearchBound : Error {
  explicit SearchBound(const std::string& what) : Error("search bound exceeded: " + what) {}
};

struct NonStrictGrading : Error {
  explicit NonStrictGrading(const std::string& what)
      : Error("non-strict grading: " + what + " (supply a grading whose associator and unitors are identities)") {}
};

struct PairingMismatch : Error {
  explicit PairingMismatch(const std::string& what) : Error("pairing mismatch: " + what) {}
};

struct NotIdentityCarrier : Error {
  explicit NotIdentityCarrier(const std::string& what) : Error("carrier is not the identity: " + what) {}
};

}  // namespace gmcat

#endif
