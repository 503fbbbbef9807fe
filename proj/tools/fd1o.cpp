#include <cstdio>

int main() {
    std::fprintf(stderr, "fd1o: not yet implemented\n");
    return 2;
}
