#include "sln/cli.hpp"

int main(int argc, char** argv) {
  return sln::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
