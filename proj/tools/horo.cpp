#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "horo/cli.hpp"
#include "horo/io/json.hpp"

int main(int argc, char** argv) {
  horo::Tolerance tol;
  try {
    tol = horo::cli::tolerance_from_env(std::getenv("HOROLIB_TOL"));
  } catch (const horo::io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return horo::cli::kParseError;
  }
  const std::vector<std::string> args(argv + 1, argv + argc);
  return horo::cli::run(args, std::cout, std::cerr, tol);
}
