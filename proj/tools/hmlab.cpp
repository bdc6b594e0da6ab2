#include <iostream>

#include "hmlab/cli.hpp"

int main(int argc, char **argv)
{
  return hmlab::dispatch(argc, argv, std::cout, std::cerr);
}
