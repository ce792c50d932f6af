#include <iostream>

#include "sgf/verify.hpp"

int main() {
  auto results = sgf::verify::run_suite(std::cout);
  return sgf::verify::all_passed(results) ? 0 : 1;
}
