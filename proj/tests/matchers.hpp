#ifndef DCX_TEST_MATCHERS_HPP
#define DCX_TEST_MATCHERS_HPP

#include <catch2/catch_amalgamated.hpp>

#include "dcx/errors.hpp"

/// Catch2 matcher: thrown dcx::Error carries the given code.
struct ErrcIs : Catch::Matchers::MatcherGenericBase {
    dcx::Errc code;
    explicit ErrcIs(dcx::Errc c) : code(c) {}
    bool match(const dcx::Error& e) const { return e.code() == code; }
    std::string describe() const override {
        return std::string("has error code ") + dcx::errc_name(code);
    }
};

#endif
