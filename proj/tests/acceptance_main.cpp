#include <iostream>

#include "cmc/acceptance.hpp"

int main() { return cmc::acceptance::run_and_print({}, std::cout); }
