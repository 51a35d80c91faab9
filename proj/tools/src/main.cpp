#include <iostream>

#include "nuframe_app/app.hpp"

int main(int argc, char** argv) {
  return nuframe::app::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
