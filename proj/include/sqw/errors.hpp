#pragma once

#include <stdexcept>
#include <string>

namespace sqw {

// Exit-code classes used by the CLI: 2 = bad config/input, 3 = cap exceeded,
// 4 = a soundness check failed (genuine counterexample or bug).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg, int exit_code = 2)
        : std::runtime_error(msg), exit_code(exit_code) {}
    int exit_code;
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& m) : Error(m) {}
};
struct EvenCharacteristic : Error {
    explicit EvenCharacteristic(const std::string& m) : Error(m) {}
};
struct NotIrreducible : Error {
    explicit NotIrreducible(const std::string& m) : Error(m) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& m) : Error(m) {}
};
struct ZeroInverse : Error {
    explicit ZeroInverse(const std::string& m) : Error(m) {}
};
struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string& m) : Error(m) {}
};
struct OrderDoesNotDivide : Error {
    explicit OrderDoesNotDivide(const std::string& m) : Error(m) {}
};
struct NotIndependent : Error {
    explicit NotIndependent(const std::string& m) : Error(m) {}
};
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& m) : Error(m, 3) {}
};
struct ParityViolation : Error {
    explicit ParityViolation(const std::string& m) : Error(m, 4) {}
};
struct ConjugatePair : Error {
    explicit ConjugatePair(const std::string& m) : Error(m) {}
};
struct NotGenerator : Error {
    explicit NotGenerator(const std::string& m) : Error(m) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error(m) {}
};

}  // namespace sqw
