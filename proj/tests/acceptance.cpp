// Acceptance suite: one line per criterion, exact arithmetic throughout.

#include <iostream>

#include "ganz/selftest.hpp"

#ifndef GANZ_CLI_PATH
#define GANZ_CLI_PATH ""
#endif

int main() {
    int failures = ganz::selftest::run_all(std::cout, GANZ_CLI_PATH);
    return failures == 0 ? 0 : 1;
}
