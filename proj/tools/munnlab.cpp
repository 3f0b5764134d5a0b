// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) {
  return munnlab::cli::run(
      std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
