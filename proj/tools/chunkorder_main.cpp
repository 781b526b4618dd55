#include "chunkorder/cli.hpp"

int main(int argc, char** argv) {
  return chunkorder::cli_dispatch({argv + 1, argv + argc});
}
