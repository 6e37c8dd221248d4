#include "fock/selftest.hpp"

#include <iostream>

int main() {
  const bool ok = fock::print_acceptance(std::cout, fock::run_acceptance());
  return ok ? 0 : 1;
}
