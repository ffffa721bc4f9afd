#include <iostream>

#include "ptom/app/commands.hpp"

int main(int argc, char** argv) {
  return ptom::app::main_entry(argc, argv, std::cout, std::cerr);
}
