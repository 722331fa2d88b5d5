#pragma once

#include <stdexcept>
#include <string>

namespace fqdigraph {

// Base class for all library errors. `kind()` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define FQDIGRAPH_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}   \
    }

FQDIGRAPH_DEFINE_ERROR(NotPrime);
FQDIGRAPH_DEFINE_ERROR(BadModulus);
FQDIGRAPH_DEFINE_ERROR(DivisionByZero);
FQDIGRAPH_DEFINE_ERROR(IndexOutOfRange);
FQDIGRAPH_DEFINE_ERROR(NotADivisor);
FQDIGRAPH_DEFINE_ERROR(SchemaError);
FQDIGRAPH_DEFINE_ERROR(RangeError);
FQDIGRAPH_DEFINE_ERROR(ShapeError);
FQDIGRAPH_DEFINE_ERROR(DimensionMismatch);
FQDIGRAPH_DEFINE_ERROR(TooLarge);
FQDIGRAPH_DEFINE_ERROR(EvenCharacteristic);
FQDIGRAPH_DEFINE_ERROR(NotSameComponent);
FQDIGRAPH_DEFINE_ERROR(OrderMismatch);
FQDIGRAPH_DEFINE_ERROR(VertexNotInComponent);
FQDIGRAPH_DEFINE_ERROR(NotStrong);
FQDIGRAPH_DEFINE_ERROR(GroundSetMismatch);
FQDIGRAPH_DEFINE_ERROR(IoError);

#undef FQDIGRAPH_DEFINE_ERROR

}  // namespace fqdigraph
