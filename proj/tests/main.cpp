#define DOCTEST_CONFIG_IMPLEMENT

#include <doctest.h>

#include "unirat/groebner.hpp"

int main(int argc, char** argv) {
    // Every basis computed anywhere in the suite self-checks its S-pairs.
    unirat::set_basis_validation(true);
    doctest::Context ctx;
    ctx.applyCommandLine(argc, argv);
    return ctx.run();
}
