#ifndef BURNSIDE_COMMON_HPP
#define BURNSIDE_COMMON_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace burnside {

// Exact scalars. Values stay tiny for the group orders we handle, but
// nothing here may ever overflow.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct NotAGroup : std::runtime_error {
    explicit NotAGroup(const std::string& what) : std::runtime_error(what) {}
};

struct OrderCapExceeded : std::runtime_error {
    explicit OrderCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotAHomomorphism : std::runtime_error {
    explicit NotAHomomorphism(const std::string& what) : std::runtime_error(what) {}
};

struct NotSylow : std::runtime_error {
    explicit NotSylow(const std::string& what) : std::runtime_error(what) {}
};

struct NotASubgroupOfS : std::runtime_error {
    explicit NotASubgroupOfS(const std::string& what) : std::runtime_error(what) {}
};

struct BasisMismatch : std::runtime_error {
    explicit BasisMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotFStable : std::runtime_error {
    explicit NotFStable(const std::string& what) : std::runtime_error(what) {}
};

struct NotIntegral : std::runtime_error {
    explicit NotIntegral(const std::string& what) : std::runtime_error(what) {}
};

struct RingMismatch : std::runtime_error {
    explicit RingMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DenominatorDivisibleByP : std::runtime_error {
    explicit DenominatorDivisibleByP(const std::string& what) : std::runtime_error(what) {}
};

struct NoAmbientData : std::runtime_error {
    explicit NoAmbientData(const std::string& what) : std::runtime_error(what) {}
};

struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace burnside

#endif
