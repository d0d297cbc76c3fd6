#include <iostream>

#include "hankelfold/cli.hpp"

int main(int argc, char** argv) {
  return hankelfold::cli::run(argc, argv, std::cout, std::cerr);
}
