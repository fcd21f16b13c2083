#include <iostream>

#include "weilform/cli.hpp"

int main(int argc, char** argv) {
  return weilform::cli::dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
